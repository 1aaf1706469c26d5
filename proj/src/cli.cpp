#include "gs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gs/cayley.hpp"
#include "gs/cyclic.hpp"
#include "gs/errors.hpp"
#include "gs/freegrp.hpp"
#include "gs/partition.hpp"

namespace gs {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const std::string& tok : split(s, ',')) {
    if (tok.empty()) throw Error(Err::ParseError, "empty entry in list '" + s + "'");
    out.push_back(std::stoll(tok));
  }
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open set file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

PartitionVector parse_partition(const std::string& s) {
  std::vector<int> parts;
  for (std::int64_t v : parse_int_list(s)) parts.push_back(static_cast<int>(v));
  return PartitionVector(std::move(parts));
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  long long num = std::stoll(s.substr(0, slash));
  long long den = std::stoll(s.substr(slash + 1));
  if (den == 0) throw Error(Err::ParseError, "zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string bigint_str(const BigInt& b) { return b.str(); }

// Flattens a JSON report into key<TAB>value lines for spreadsheets.
void emit_tsv(const ordered_json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items())
      emit_tsv(val, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    bool scalar = std::all_of(j.begin(), j.end(), [](const ordered_json& e) {
      return !e.is_object() && !e.is_array();
    });
    if (scalar) {
      out << prefix;
      for (const auto& e : j) out << "\t" << (e.is_string() ? e.get<std::string>() : e.dump());
      out << "\n";
    } else {
      int i = 0;
      for (const auto& e : j) emit_tsv(e, prefix + "[" + std::to_string(i++) + "]", out);
    }
  } else {
    out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const ordered_json& report, const std::string& format, std::ostream& out) {
  if (format == "tsv")
    emit_tsv(report, "", out);
  else
    out << report.dump(2) << "\n";
}

ordered_json subgroup_json(const SubgroupHandle& h) {
  ordered_json j;
  j["elements"] = h.elements();
  j["order"] = h.elements().size();
  j["index"] = h.index();
  return j;
}

struct CommonOpts {
  std::string format = "json";
  std::size_t order_cap = kDefaultOrderCap;
  std::uint64_t state_cap = kDefaultStateCap;
  std::uint64_t subset_cap = kDefaultSubsetCap;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("--order-cap", opts.order_cap, "permutation-group closure cap");
  cmd->add_option("--state-cap", opts.state_cap, "configuration scan cap");
  cmd->add_option("--subset-cap", opts.subset_cap, "subset enumeration cap");
}

std::vector<std::int64_t> resolve_int_set(const std::string& inline_set,
                                          const std::string& file) {
  if (!inline_set.empty() && !file.empty())
    throw Error(Err::ParseError, "--set and --set-file are mutually exclusive");
  if (!inline_set.empty()) return parse_int_list(inline_set);
  if (!file.empty()) {
    std::vector<std::int64_t> out;
    for (const std::string& line : read_lines(file)) out.push_back(std::stoll(line));
    return out;
  }
  throw Error(Err::ParseError, "one of --set or --set-file is required");
}

std::vector<Word> resolve_word_set(const std::string& inline_set, const std::string& file,
                                   WordMode mode) {
  std::vector<std::string> tokens;
  if (!inline_set.empty() && !file.empty())
    throw Error(Err::ParseError, "--set and --set-file are mutually exclusive");
  if (!inline_set.empty())
    tokens = split(inline_set, ',');
  else if (!file.empty())
    tokens = read_lines(file);
  else
    throw Error(Err::ParseError, "one of --set or --set-file is required");
  std::vector<Word> out;
  for (const std::string& t : tokens) out.push_back(parse_word(t, mode));
  return out;
}

std::vector<int> checked_group_set(const std::vector<std::int64_t>& raw, int n) {
  std::vector<int> out;
  for (std::int64_t v : raw) {
    if (v < 0 || v >= n)
      throw Error(Err::ParseError, "element " + std::to_string(v) + " outside 0.." +
                                       std::to_string(n - 1));
    out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ordered_json ground_block(const std::shared_ptr<const FiniteGroup>& g,
                          const std::vector<int>& a, const PartitionVector& k) {
  ordered_json block;
  block["k"] = k.parts();
  ordered_json subs = ordered_json::array();
  std::optional<std::uint64_t> best;
  for (const auto& h : ground_set(g, a, k)) {
    subs.push_back(subgroup_json(h));
    std::uint64_t idx = h.index();
    if (!best || idx < *best) best = idx;
  }
  block["ground"] = subs;
  block["r0"] = best ? ordered_json(*best) : ordered_json(nullptr);
  return block;
}

int run_cyclic(int n, const std::string& set, const std::string& set_file,
               const std::string& kstr, const CommonOpts& opts, std::ostream& out) {
  auto g = FiniteGroup::cyclic(n);
  std::vector<int> a = checked_group_set(resolve_int_set(set, set_file), n);
  PartitionVector k = parse_partition(kstr);
  if (k.sum() != static_cast<int>(a.size()))
    throw Error(Err::InvalidPartition, "partition parts must sum to |A|");

  ordered_json report;
  report["command"] = "cyclic";
  report["inputs"] = {{"n", n}, {"set", a}, {"k", k.parts()}};
  report["candidates"] = theorem1_candidates(n, a, k);
  ordered_json block = ground_block(g, a, k);
  report["ground"] = block["ground"];
  report["r0"] = block["r0"];
  emit(report, opts.format, out);
  return 0;
}

int run_sweep(int n, const std::string& set, const std::string& set_file,
              const CommonOpts& opts, std::ostream& out) {
  auto g = FiniteGroup::cyclic(n);
  std::vector<int> a = checked_group_set(resolve_int_set(set, set_file), n);

  ordered_json report;
  report["command"] = "sweep";
  report["inputs"] = {{"n", n}, {"set", a}};
  ordered_json subs = ordered_json::array();
  for (const auto& h : enumerate_subgroups(g)) subs.push_back(subgroup_json(h));
  report["subgroups"] = subs;
  ordered_json blocks = ordered_json::array();
  for (const PartitionVector& k : partition_vectors(static_cast<int>(a.size())))
    blocks.push_back(ground_block(g, a, k));
  report["blocks"] = blocks;
  emit(report, opts.format, out);
  return 0;
}

std::shared_ptr<const FiniteGroup> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open table file '" + path + "'");
  int n;
  if (!(in >> n) || n < 1) throw Error(Err::ParseError, "table file must start with n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> table[i][j]))
        throw Error(Err::ParseError, "table file truncated");
  return FiniteGroup::from_table(std::move(table));
}

int run_finite(const std::string& table_path, const std::string& set,
               const std::string& set_file, const std::string& kstr, const CommonOpts& opts,
               std::ostream& out) {
  auto g = load_table(table_path);
  std::vector<int> a = checked_group_set(resolve_int_set(set, set_file), g->order());
  PartitionVector k = parse_partition(kstr);

  ordered_json report;
  report["command"] = "finite";
  report["inputs"] = {{"table", table_path}, {"order", g->order()}, {"set", a}, {"k", k.parts()}};
  ordered_json block = ground_block(g, a, k);
  report["ground"] = block["ground"];
  report["r0"] = block["r0"];
  emit(report, opts.format, out);
  return 0;
}

int run_zline(const std::string& set, const std::string& set_file, const std::string& kstr,
              int pmax, const CommonOpts& opts, std::ostream& out) {
  std::vector<std::int64_t> a = resolve_int_set(set, set_file);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  PartitionVector k = parse_partition(kstr);

  ordered_json report;
  report["command"] = "zline";
  report["inputs"] = {{"set", a}, {"k", k.parts()}, {"pmax", pmax}};
  std::vector<int> moduli = ground_moduli(a, k, pmax);
  report["ground_moduli"] = moduli;
  // The index of pZ in Z is p, so the smallest modulus bounds r0 above.
  report["r0_upper_bound"] =
      moduli.empty() ? ordered_json(nullptr) : ordered_json(moduli.front());
  emit(report, opts.format, out);
  return 0;
}

ordered_json kernel_json(const SubgroupHandle& h, std::size_t order_cap) {
  ordered_json j;
  j["degree"] = h.rep().degree();
  ordered_json gens = ordered_json::object();
  for (const auto& [gen, img] : h.rep().images())
    gens["a" + std::to_string(gen)] = img.to_cycles();
  j["generator_images"] = gens;
  try {
    j["index"] = h.index(order_cap);
    j["index_computed"] = true;
  } catch (const Error& e) {
    if (e.code() != Err::OrderCapExceeded) throw;
    j["index"] = nullptr;
    j["index_computed"] = false;
  }
  return j;
}

int run_free(const std::string& mode_str, const std::string& set, const std::string& set_file,
             const std::string& construct, const std::string& word_str,
             const std::string& avoid_str, bool bounds, const CommonOpts& opts,
             std::ostream& out) {
  WordMode mode = mode_str == "involutive" ? WordMode::Involutive : WordMode::Free;

  ordered_json report;
  report["command"] = "free";
  report["inputs"] = {{"mode", mode_str}};

  if (!avoid_str.empty()) {
    std::vector<Word> b;
    for (const std::string& t : split(avoid_str, ',')) b.push_back(parse_word(t, mode));
    SubgroupHandle h = avoid_set(b);
    report["inputs"]["avoid"] = avoid_str;
    report["construct"] = kernel_json(h, opts.order_cap);
    bool avoided = true;
    CosetId ident_id = h.coset_id(Element{Word::identity(mode)});
    for (const Word& w : b)
      if (h.coset_id(Element{w}) == ident_id) avoided = false;
    report["avoided"] = avoided;
    emit(report, opts.format, out);
    return avoided ? 0 : 1;
  }

  if (construct == "Hx") {
    Word x = parse_word(word_str, mode);
    report["inputs"]["word"] = to_string(x);
    SubgroupHandle h = build_Hx(x);
    report["construct"] = kernel_json(h, opts.order_cap);
    if (bounds) {
      BoundPair bp = index_bounds(x);
      report["bounds"] = {{"lower", bigint_str(bp.lower)}, {"upper", bigint_str(bp.upper)}};
    }
    emit(report, opts.format, out);
    return 0;
  }

  std::vector<Word> a = resolve_word_set(set, set_file, mode);
  std::vector<std::string> names;
  for (const Word& w : a) names.push_back(to_string(w));
  report["inputs"]["set"] = names;
  HaResult ha = build_HA(a);
  report["construct"] = kernel_json(ha.handle, opts.order_cap);
  report["construct"]["blocks"] = ha.star_nonidentity.size();
  if (bounds)
    report["bounds"] = {{"lower", bigint_str(ha.bounds.lower)},
                        {"upper", bigint_str(ha.bounds.upper)}};
  report["profile_counts"] = [&] {
    std::vector<Element> elems(a.begin(), a.end());
    return profile_counts(coset_profile(ha.handle, elems));
  }();
  report["ones_ground"] = verify_ones_ground(ha.handle, a);
  emit(report, opts.format, out);
  return 0;
}

int run_tree(const std::string& action, int k, int r, int R, int q, const std::string& jstr,
             const std::string& method, int degree, const CommonOpts& opts, std::ostream& out) {
  TreeContext ctx{k};

  ordered_json report;
  report["command"] = "tree";

  if (action == "ground-subgroup") {
    report["inputs"] = {{"k", k}, {"r", r}, {"method", method}, {"degree", degree}};
    Ball b = ball(ctx, Word::identity(WordMode::Involutive), r);
    if (method == "stabilizer") {
      int d = degree > 0 ? degree : static_cast<int>(ball_size(k, r));
      auto h = stabilizer_ground_search(ctx, r, d);
      if (!h) {
        report["found"] = false;
        emit(report, opts.format, out);
        return 1;
      }
      report["found"] = true;
      ordered_json gens = ordered_json::object();
      for (const auto& [gen, img] : h->rep().images())
        gens["a" + std::to_string(gen)] = img.to_cycles();
      report["generator_images"] = gens;
      report["index"] = h->index();
      report["ones_ground"] = verify_ones_ground(*h, b.members);
    } else {
      HaResult ha = build_ball_ground_subgroup(ctx, r);
      report["found"] = true;
      report["construct"] = kernel_json(ha.handle, opts.order_cap);
      report["bounds"] = {{"lower", bigint_str(ha.bounds.lower)},
                          {"upper", bigint_str(ha.bounds.upper)}};
      report["ones_ground"] = verify_ones_ground(ha.handle, b.members);
    }
    emit(report, opts.format, out);
    return 0;
  }

  // verify
  Rational j = parse_rational(jstr);
  report["inputs"] = {{"k", k}, {"r", r}, {"R", R}, {"q", q}, {"J", jstr}};
  Theorem3Report t3 = verify_theorem3(ctx, r, R, q, j, opts.state_cap);
  report["min_energy"] = rational_str(t3.min_energy);
  report["minimizer_count"] = t3.minimizer_count;
  report["constructed_count"] = t3.constructed_count;
  report["formula_count"] = bigint_str(t3.formula_count);
  report["pass"] = t3.pass;
  report["notes"] = t3.notes;
  emit(report, opts.format, out);
  return t3.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ground-subgroup toolkit: coset partitions of finite groups, Z, free groups, "
               "and Cayley-tree ground states"};
  app.require_subcommand(1);
  CommonOpts opts;

  int n = 0, pmax = 50, k_order = 2, r = 1, R = -1, q = 2, degree = 0;
  std::string set, set_file, kstr, table_path, mode_str = "free", construct = "HA";
  std::string word_str, avoid_str, jstr = "1", method = "stabilizer", action;
  bool bounds = false;

  auto* cyc = app.add_subcommand("cyclic", "ground subgroups of Z_n");
  cyc->add_option("--n", n, "group order")->required();
  cyc->add_option("--set", set, "comma-separated elements");
  cyc->add_option("--set-file", set_file, "one element per line");
  cyc->add_option("--k", kstr, "ascending partition vector")->required();
  add_common(cyc, opts);

  auto* sw = app.add_subcommand("sweep", "all partition vectors of a set in Z_n");
  sw->add_option("--n", n, "group order")->required();
  sw->add_option("--set", set, "comma-separated elements");
  sw->add_option("--set-file", set_file, "one element per line");
  add_common(sw, opts);

  auto* fin = app.add_subcommand("finite", "ground subgroups of a Cayley-table group");
  fin->add_option("--table", table_path, "table file: n, then n*n entries")->required();
  fin->add_option("--set", set, "comma-separated element indices");
  fin->add_option("--set-file", set_file, "one element per line");
  fin->add_option("--k", kstr, "ascending partition vector")->required();
  add_common(fin, opts);

  auto* zl = app.add_subcommand("zline", "ground moduli pZ in Z");
  zl->add_option("--set", set, "comma-separated integers");
  zl->add_option("--set-file", set_file, "one integer per line");
  zl->add_option("--k", kstr, "ascending partition vector")->required();
  zl->add_option("--pmax", pmax, "largest modulus to test");
  add_common(zl, opts);

  auto* fr = app.add_subcommand("free", "free-group constructions H_x, H_A, H_B");
  fr->add_option("--mode", mode_str, "free or involutive")
      ->check(CLI::IsMember({"free", "involutive"}));
  fr->add_option("--gens", degree, "generator count (informational)");
  fr->add_option("--set", set, "comma-separated words, e.g. a,b");
  fr->add_option("--set-file", set_file, "one word per line");
  fr->add_option("--construct", construct, "HA or Hx")->check(CLI::IsMember({"HA", "Hx"}));
  fr->add_option("--word", word_str, "word for --construct Hx");
  fr->add_option("--avoid", avoid_str, "comma-separated words to avoid");
  fr->add_flag("--bounds", bounds, "report the index bound pair");
  add_common(fr, opts);

  auto* tr = app.add_subcommand("tree", "Cayley-tree ground states");
  tr->add_option("action", action, "verify or ground-subgroup")
      ->check(CLI::IsMember({"verify", "ground-subgroup"}))
      ->required();
  tr->add_option("--k", k_order, "tree order")->required();
  tr->add_option("--r", r, "ball radius")->required();
  tr->add_option("--R", R, "truncation radius (verify)");
  tr->add_option("--q", q, "color count (verify)");
  tr->add_option("--J", jstr, "coupling, rational like -1 or 1/2 (verify)");
  tr->add_option("--method", method, "stabilizer or kernel")
      ->check(CLI::IsMember({"stabilizer", "kernel"}));
  tr->add_option("--degree", degree, "stabilizer search degree");
  add_common(tr, opts);

  // CLI11's vector overload consumes arguments from the back.
  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (argv.empty()) argv = {"--help"};
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cyc)) return run_cyclic(n, set, set_file, kstr, opts, out);
    if (app.got_subcommand(sw)) return run_sweep(n, set, set_file, opts, out);
    if (app.got_subcommand(fin))
      return run_finite(table_path, set, set_file, kstr, opts, out);
    if (app.got_subcommand(zl)) return run_zline(set, set_file, kstr, pmax, opts, out);
    if (app.got_subcommand(fr))
      return run_free(mode_str, set, set_file, construct, word_str, avoid_str, bounds, opts,
                      out);
    if (app.got_subcommand(tr)) {
      if (action == "verify" && R < 0) R = r;
      return run_tree(action, k_order, r, R, q, jstr, method, degree, opts, out);
    }
  } catch (const Error& e) {
    err << "error [" << e.code_name() << "]: " << e.what() << "\n";
    return e.is_cap_error() ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gs
