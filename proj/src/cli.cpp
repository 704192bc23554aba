#include "hopftree/cli.hpp"

#include "hopftree/binary.hpp"
#include "hopftree/labelled.hpp"
#include "hopftree/permutations.hpp"
#include "hopftree/planar.hpp"
#include "hopftree/primitives.hpp"
#include "hopftree/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace hopftree {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hard-coded default caps, overridable with --cap.
const std::map<std::string, std::size_t>& enumeration_caps() {
  static const std::map<std::string, std::size_t> caps{
      {"tree", 12},  {"binary", 12}, {"labelled", 6},  {"ntree", 7},  {"increasing", 8},
      {"sorted", 8}, {"treed", 6},   {"stirling", 8}, {"perm", 8}};
  return caps;
}

constexpr std::size_t kVerifyCap = 6;

std::string family_base(const std::string& family) {
  return family.rfind("labelled:", 0) == 0 ? "labelled" : family;
}

Integer enumeration_size(const std::string& family, std::size_t n) {
  if (family == "binary") return family_count({TreeFamily::Kind::unlabelled, 0}, n);
  if (family == "treed") return family_count({TreeFamily::Kind::ntree, 0}, n);
  if (family == "stirling") return family_count({TreeFamily::Kind::increasing, 0}, n);
  if (family == "perm") return family_count({TreeFamily::Kind::sorted, 0}, n);
  return family_count(parse_tree_family(family), n);
}

void check_cap(const std::string& what, std::size_t degree, std::size_t cap,
               std::optional<std::size_t> override_cap) {
  const auto limit = override_cap.value_or(cap);
  if (degree > limit)
    throw UsageError("degree " + std::to_string(degree) + " exceeds the cap " +
                     std::to_string(limit) + " for " + what + " (raise it with --cap)");
}

std::vector<std::string> enumerate_strings(const std::string& family, std::size_t n) {
  std::vector<std::string> out;
  if (family == "binary") {
    for (const auto& x : enumerate_binary(n)) out.push_back(render_binary(x));
  } else if (family == "treed") {
    for (const auto& w : enumerate_treed(n)) out.push_back(render_word(w));
  } else if (family == "stirling") {
    for (const auto& w : enumerate_stirling(n)) out.push_back(render_word(w));
  } else if (family == "perm") {
    for (const auto& w : enumerate_permutations(n)) out.push_back(render_word(w));
  } else {
    for (const auto& t : family_trees(parse_tree_family(family), n)) out.push_back(render_tree(t));
  }
  return out;
}

PlanarTree ntree_arg(const std::string& text) {
  auto t = parse_tree(text);
  if (!is_ntree(t)) throw std::invalid_argument("not an n-tree: " + text);
  return t;
}

PlanarTree unlabelled_arg(const std::string& text) {
  auto t = parse_tree(text);
  if (t.labelled()) throw std::invalid_argument("expected an unlabelled tree: " + text);
  return t;
}

LinearCombination product_of(const std::string& op, const std::string& a, const std::string& b) {
  if (op == "hash") return product(parse_tree(a), parse_tree(b));
  if (op == "dot") return as_combination(dot(parse_tree(a), parse_tree(b)));
  if (op == "dual") return dual_product(parse_tree(a), parse_tree(b));
  if (op == "star") return star_product(ntree_arg(a), ntree_arg(b));
  if (op == "slash") return as_combination(slash_product(ntree_arg(a), ntree_arg(b)));
  if (op == "treed") return treed_product(parse_word(a), parse_word(b));
  if (op == "mr") return mr_product(parse_word(a), parse_word(b));
  if (op == "binary") return binary_product(parse_binary(a), parse_binary(b));
  if (op == "binary-op") return binary_product_op(parse_binary(a), parse_binary(b));
  if (op == "over")
    return LinearCombination::basis(binary_key(over(parse_binary(a), parse_binary(b))));
  if (op == "under")
    return LinearCombination::basis(binary_key(under(parse_binary(a), parse_binary(b))));
  throw UsageError("unknown product: " + op);
}

TensorCombination coproduct_of(const std::string& op, const std::string& a) {
  if (op == "deconcat") return coproduct(parse_tree(a));
  if (op == "std") return coproduct_std(ntree_arg(a));
  if (op == "dual") return dual_coproduct(parse_tree(a));
  if (op == "reduced") return reduced_coproduct(as_combination(parse_tree(a)), MultMode::dot);
  if (op == "reduced-std")
    return reduced_coproduct(as_combination(ntree_arg(a)), MultMode::slash);
  if (op == "treed") return treed_coproduct(parse_word(a));
  if (op == "mr") return mr_coproduct(parse_word(a));
  if (op == "binary") return binary_coproduct(parse_binary(a));
  throw UsageError("unknown coproduct: " + op);
}

using Converter = std::function<std::string(const std::string&)>;

const std::map<std::string, Converter>& converters() {
  static const std::map<std::string, Converter> table{
      {"euler", [](const std::string& s) { return render_word(euler_tour(ntree_arg(s))); }},
      {"euler-inverse",
       [](const std::string& s) { return render_tree(euler_tour_inverse(parse_word(s))); }},
      {"sorted-to-perm",
       [](const std::string& s) { return render_word(sorted_to_permutation(parse_tree(s))); }},
      {"perm-to-sorted",
       [](const std::string& s) { return render_tree(permutation_to_sorted(parse_word(s))); }},
      {"planar-to-binary",
       [](const std::string& s) { return render_binary(planar_to_binary(unlabelled_arg(s))); }},
      {"binary-to-planar",
       [](const std::string& s) { return render_tree(binary_to_planar(parse_binary(s))); }},
  };
  return table;
}

// Domain of each bijection, for streaming a whole degree.
std::vector<std::string> converter_domain(const std::string& map, std::size_t n) {
  if (map == "euler") return enumerate_strings("ntree", n);
  if (map == "euler-inverse") return enumerate_strings("treed", n);
  if (map == "sorted-to-perm") return enumerate_strings("sorted", n);
  if (map == "perm-to-sorted") return enumerate_strings("perm", n);
  if (map == "planar-to-binary") return enumerate_strings("tree", n);
  return enumerate_strings("binary", n);
}

std::string converter_family(const std::string& map) {
  if (map == "euler") return "ntree";
  if (map == "euler-inverse") return "treed";
  if (map == "sorted-to-perm") return "sorted";
  if (map == "perm-to-sorted") return "perm";
  if (map == "planar-to-binary") return "tree";
  return "binary";
}

std::vector<std::string> keys_of(const std::map<std::string, Converter>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream* in) {
  CLI::App app{"Hopf algebras of planar trees, labelled trees, words and binary trees"};
  app.require_subcommand(1);
  std::optional<std::size_t> cap;
  app.add_option("--cap", cap, "Override the per-family degree cap");

  // enumerate
  std::string enum_family = "tree";
  std::size_t enum_degree = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all objects of one degree");
  enumerate_cmd
      ->add_option("--family", enum_family,
                   "tree, labelled:K, ntree, increasing, sorted, binary, treed, stirling, perm")
      ->capture_default_str();
  enumerate_cmd->add_option("--degree", enum_degree, "Degree (size)")->required();

  // product
  const std::vector<std::string> product_ops{"hash", "dot",    "dual",      "star",
                                             "slash", "treed", "mr",        "binary",
                                             "binary-op", "over", "under"};
  std::string product_op = "hash", product_left, product_right;
  auto* product_cmd = app.add_subcommand("product", "Multiply two basis elements");
  product_cmd->add_option("--op", product_op, "Product")
      ->check(CLI::IsMember(product_ops))
      ->capture_default_str();
  product_cmd->add_option("left", product_left, "Left factor")->required();
  product_cmd->add_option("right", product_right, "Right factor")->required();

  // coproduct
  const std::vector<std::string> coproduct_ops{"deconcat", "std",   "dual", "reduced",
                                               "reduced-std", "treed", "mr", "binary"};
  std::string coproduct_op = "deconcat", coproduct_arg;
  auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct of a basis element");
  coproduct_cmd->add_option("--op", coproduct_op, "Coproduct")
      ->check(CLI::IsMember(coproduct_ops))
      ->capture_default_str();
  coproduct_cmd->add_option("element", coproduct_arg, "Basis element")->required();

  // dual-product
  std::string dual_left, dual_right;
  auto* dual_cmd = app.add_subcommand("dual-product", "Dual product of two trees");
  dual_cmd->add_option("left", dual_left, "Left tree")->required();
  dual_cmd->add_option("right", dual_right, "Right tree")->required();

  // idempotent
  std::string idem_mode = "dot", idem_arg;
  auto* idem_cmd = app.add_subcommand("idempotent", "Apply the projection onto primitives");
  idem_cmd->add_option("--mode", idem_mode, "dot or slash")
      ->check(CLI::IsMember({"dot", "slash"}))
      ->capture_default_str();
  idem_cmd->add_option("element", idem_arg, "A tree or a combination")->required();

  // series
  std::string series_family = "tree";
  std::size_t series_max = 6;
  auto* series_cmd = app.add_subcommand("series", "Dimensions a_n and primitive dimensions b_n");
  series_cmd->add_option("--family", series_family, "tree, labelled:K, ntree, increasing, sorted")
      ->capture_default_str();
  series_cmd->add_option("--max", series_max, "Largest degree")->capture_default_str();
  bool series_rank = false;
  series_cmd->add_flag("--rank", series_rank, "Add a column with the exhaustive rank");

  // convert
  std::string convert_map;
  std::vector<std::string> convert_inputs;
  std::optional<std::size_t> convert_degree;
  auto* convert_cmd = app.add_subcommand("convert", "Stream a bijection as input<TAB>output");
  convert_cmd->add_option("--map", convert_map, "Bijection")
      ->required()
      ->check(CLI::IsMember(keys_of(converters())));
  convert_cmd->add_option("--degree", convert_degree, "Convert the whole domain of this degree");
  convert_cmd->add_option("inputs", convert_inputs, "Inputs (default: lines of stdin)");

  // verify
  std::string verify_suite = "all";
  std::size_t verify_maxdeg = 4;
  bool verify_serial = false, verify_verbose = false, verify_test_mode = false;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive checks of the algebraic identities");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  suites.push_back("broken");
  verify_cmd->add_option("--suite", verify_suite, "Suite")
      ->check(CLI::IsMember(suites))
      ->capture_default_str();
  verify_cmd->add_option("--maxdeg", verify_maxdeg, "Degree bound")->capture_default_str();
  verify_cmd->add_flag("--serial", verify_serial, "Use the serial reference path");
  verify_cmd->add_flag("--verbose", verify_verbose, "Print one line per check");
  verify_cmd->add_flag("--test-mode", verify_test_mode, "Allow the deliberately broken suite");

  std::vector<std::string> argv_store{"hopftree"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*enumerate_cmd) {
      const auto base = family_base(enum_family);
      const auto it = enumeration_caps().find(base);
      if (it == enumeration_caps().end()) throw UsageError("unknown family: " + enum_family);
      check_cap(enum_family, enum_degree, it->second, cap);
      err << "estimate: " << enumeration_size(enum_family, enum_degree) << " objects\n";
      for (const auto& s : enumerate_strings(enum_family, enum_degree)) out << s << '\n';
      return kExitOk;
    }
    if (*product_cmd) {
      out << to_string(product_of(product_op, product_left, product_right)) << '\n';
      return kExitOk;
    }
    if (*coproduct_cmd) {
      out << to_string(coproduct_of(coproduct_op, coproduct_arg)) << '\n';
      return kExitOk;
    }
    if (*dual_cmd) {
      out << to_string(dual_product(parse_tree(dual_left), parse_tree(dual_right))) << '\n';
      return kExitOk;
    }
    if (*idem_cmd) {
      const auto mode = idem_mode == "dot" ? MultMode::dot : MultMode::slash;
      const auto v = idem_arg.rfind("(", 0) == 0 ? as_combination(parse_tree(idem_arg))
                                                 : parse_combination(idem_arg);
      out << to_string(idempotent_e(v, mode)) << '\n';
      return kExitOk;
    }
    if (*series_cmd) {
      const auto f = parse_tree_family(series_family);
      if (series_max == 0) throw UsageError("--max must be at least 1");
      const auto s = prim_dimensions(f, series_max);
      if (!series_rank) {
        out << render_series(s);
        return kExitOk;
      }
      const auto it = enumeration_caps().find(family_base(series_family));
      check_cap(series_family, series_max, std::min<std::size_t>(it->second, 5), cap);
      Integer work = 0;
      for (std::size_t n = 1; n <= series_max; ++n) work += s.a[n];
      err << "estimate: rank over " << work << " basis elements\n";
      const auto ranks = prim_dimensions_by_rank(f, series_max, Exec::parallel);
      for (std::size_t n = 1; n <= series_max; ++n)
        out << n << '\t' << s.a[n] << '\t' << s.b[n] << '\t' << ranks[n] << '\n';
      return kExitOk;
    }
    if (*convert_cmd) {
      const auto& f = converters().at(convert_map);
      std::vector<std::string> inputs = convert_inputs;
      if (convert_degree) {
        const auto family = converter_family(convert_map);
        check_cap(family, *convert_degree, enumeration_caps().at(family), cap);
        err << "estimate: " << enumeration_size(family, *convert_degree) << " objects\n";
        const auto domain = converter_domain(convert_map, *convert_degree);
        inputs.insert(inputs.end(), domain.begin(), domain.end());
      } else if (inputs.empty() && in) {
        for (std::string line; std::getline(*in, line);)
          if (!line.empty()) inputs.push_back(line);
      }
      for (const auto& s : inputs) out << s << '\t' << f(s) << '\n';
      return kExitOk;
    }
    if (*verify_cmd) {
      check_cap("verify", verify_maxdeg, kVerifyCap, cap);
      err << "estimate: suite " << verify_suite << " up to degree " << verify_maxdeg << "\n";
      const auto report = run_suite(
          verify_suite, {verify_maxdeg, verify_serial ? Exec::serial : Exec::parallel,
                         verify_test_mode});
      if (verify_verbose) {
        out << report.render();
      } else {
        for (const auto& l : report.lines)
          if (l.failures)
            out << "FAIL " << l.name << " (" << l.failures << " of " << l.cases
                << "; first: " << l.first_failure << ")\n";
      }
      out << (report.ok() ? "OK" : "FAILED") << '\n';
      return report.ok() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hopftree
