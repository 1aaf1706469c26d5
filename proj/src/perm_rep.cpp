#include "gs/perm_rep.hpp"

#include "gs/errors.hpp"

namespace gs {

PermRep::PermRep(std::size_t degree, std::map<int, Permutation> images, WordMode mode)
    : degree_(degree), images_(std::move(images)), mode_(mode) {
  for (const auto& [gen, img] : images_) {
    if (gen < 1) throw Error(Err::UnknownGenerator, "generator index must be >= 1");
    if (img.degree() != degree_)
      throw Error(Err::AmbientMismatch, "image degree mismatch for generator " + std::to_string(gen));
    if (mode_ == WordMode::Involutive && !compose(img, img).is_identity())
      throw Error(Err::ModeMismatch,
                  "involutive rep: image of generator " + std::to_string(gen) +
                      " is not an involution");
  }
}

std::vector<Permutation> PermRep::generator_images() const {
  std::vector<Permutation> out;
  out.reserve(images_.size());
  for (const auto& [gen, img] : images_) out.push_back(img);
  return out;
}

Permutation rep_eval(const PermRep& rep, const Word& w) {
  if (w.mode() != rep.mode()) throw Error(Err::ModeMismatch, "rep_eval: mode mismatch");
  Permutation acc = Permutation::identity(rep.degree());
  for (const Letter& l : w.letters()) {
    auto it = rep.images().find(l.gen);
    if (it == rep.images().end())
      throw Error(Err::UnknownGenerator, "no image for generator " + std::to_string(l.gen));
    acc = compose(acc, l.sign == 1 ? it->second : it->second.inverse());
  }
  return acc;
}

}  // namespace gs
