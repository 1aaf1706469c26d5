#pragma once

#include <map>
#include <vector>

#include "gs/perm.hpp"
#include "gs/word.hpp"

namespace gs {

/// Assignment of a permutation to each generator index, evaluated on words
/// homomorphically: rep_eval(u*v) applies rep_eval(u) first, then
/// rep_eval(v). Involutive mode requires every image to be an involution.
class PermRep {
 public:
  PermRep(std::size_t degree, std::map<int, Permutation> images, WordMode mode);

  std::size_t degree() const { return degree_; }
  WordMode mode() const { return mode_; }
  const std::map<int, Permutation>& images() const { return images_; }

  /// Generator images in ascending generator order (for order/orbit calls).
  std::vector<Permutation> generator_images() const;

 private:
  std::size_t degree_;
  std::map<int, Permutation> images_;
  WordMode mode_;
};

Permutation rep_eval(const PermRep& rep, const Word& w);

}  // namespace gs
