#include "dsp/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "dsp/json_io.hpp"

namespace dsp {

namespace {

using io::Json;

Json load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return io::parse_text(text);
  }
  return io::read_file(path);
}

std::vector<Rat> parse_alphas(const std::string& list) {
  std::vector<Rat> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

struct Options {
  std::string input, exponents, expected, mode = "generic", lift_mode = "A";
  int kappa_min = 1;
  bool exclude_star = false, want_distance = false, plan = false;
  std::optional<long> lift;
  std::string example, nice, almost;
  std::optional<int> n, g, m0;
  std::string alphas;
  int r1 = 0, r2 = 0;
  std::optional<int> rigidity, base_list, p;
  int n_max = 6;
};

int cmd_check(const Options& o, std::ostream& out, bool with_verdict) {
  JnfTuple t = io::tuple_from(load(o.input));
  auto chain = reduce_chain(t);
  if (!with_verdict) {
    out << io::to_json(chain).dump(2) << "\n";
    return 0;
  }
  bool good = is_good(chain);
  Json j{{"good", good}, {"n_s", chain.final_size()}, {"chain", io::to_json(chain)}};
  out << j.dump(2) << "\n";
  return good ? 0 : 1;
}

int cmd_spectra(const Options& o, std::ostream& out) {
  JnfTuple t = io::tuple_from(load(o.input));
  auto a = io::exponents_from(load(o.exponents));
  out << io::to_json(spectra_invariants(t, a)).dump(2) << "\n";
  return 0;
}

int cmd_generic(const Options& o, std::ostream& out) {
  JnfTuple t = io::tuple_from(load(o.input));
  auto a = io::exponents_from(load(o.exponents));
  validate_assignment(t, a);
  if (o.lift) {
    if (o.lift_mode != "A" && o.lift_mode != "B") throw Error("ParseError", "--lift-mode must be A or B");
    LiftMode mode = o.lift_mode == "A" ? LiftMode::A : LiftMode::B;
    GenericizeOptions gopts;
    gopts.kappa_min = o.kappa_min;
    auto lifted = genericize(t, a, static_cast<int>(*o.lift), mode, gopts);
    auto d = distance(t, lifted, mode == LiftMode::B, o.kappa_min);
    Json j{{"exponents", io::to_json(lifted)}};
    j["distance"] = d ? io::to_json(*d) : Json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.want_distance) {
    auto d = distance(t, a, o.exclude_star, o.kappa_min);
    Json j;
    j["distance"] = d ? io::to_json(*d) : Json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.mode != "generic" && o.mode != "strong") throw Error("ParseError", "--mode must be generic or strong");
  RelationMode mode = o.mode == "generic" ? RelationMode::Generic : RelationMode::StronglyGeneric;
  auto rel = find_relation(t, a, mode, {o.kappa_min, o.exclude_star});
  Json j{{"generic", !rel.has_value()}};
  j["relation"] = rel ? io::to_json(*rel) : Json(nullptr);
  out << j.dump(2) << "\n";
  return rel ? 1 : 0;
}

int cmd_verdict(const Options& o, std::ostream& out) {
  JnfTuple t = io::tuple_from(load(o.input));
  auto a = io::exponents_from(load(o.exponents));
  auto v = verdict(t, summarize(t, a));
  out << io::to_json(v).dump(2) << "\n";
  return v.status == VerdictStatus::NotSolvable ? 1 : 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  JnfTuple t = io::tuple_from(load(o.input));
  Json j = o.plan ? io::to_json(prepare_construction(t)) : io::to_json(classify_family(t));
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_construct(const Options& o, std::ostream& out) {
  int chosen = !o.example.empty() + !o.nice.empty() + !o.almost.empty();
  if (chosen != 1) throw Error("ParseError", "choose exactly one of --example, --nice, --almost-special");
  std::vector<Rat> alphas = o.alphas.empty() ? std::vector<Rat>{} : parse_alphas(o.alphas);
  MatrixTuple t;
  if (!o.example.empty()) {
    t = make_example(o.example, o.n.value_or(example_default_size(o.example)));
    if (!alphas.empty()) {
      if (alphas.size() != t.mats.size()) throw Error("DimensionMismatch", "one alpha per matrix expected");
      t.alphas = alphas;
    }
  } else if (!o.nice.empty()) {
    if (!o.m0) throw Error("ParseError", "--nice needs --m0");
    Json j = load(o.nice);
    const Json& arr = j.is_object() && j.contains("blocks") ? j["blocks"] : j;
    if (!arr.is_array()) throw Error("ParseError", "--nice expects an array of matrix tuples or {\"blocks\": [...]}");
    std::vector<MatrixTuple> blocks;
    for (const auto& b : arr) blocks.push_back(io::matrix_tuple_from(b));
    t = build_nice(blocks, *o.m0, alphas);
  } else {
    if (!o.g) throw Error("ParseError", "--almost-special needs --g");
    t = build_almost_special(o.almost, *o.g, alphas);
  }
  out << io::to_json(t).dump(2) << "\n";
  return 0;
}

int cmd_merge(const Options& o, std::ostream& out) {
  if (!o.n) throw Error("ParseError", "merge needs --n");
  out << io::to_json(make_merged(*o.n, o.r1, o.r2)).dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  MatrixTuple t = io::matrix_tuple_from(load(o.input));
  std::optional<JnfTuple> expected;
  if (!o.expected.empty()) expected = io::tuple_from(load(o.expected));
  auto r = verify_tuple(t, expected);
  out << io::to_json(r).dump(2) << "\n";
  return r.passed() ? 0 : 1;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.rigidity.has_value() == o.base_list.has_value())
    throw Error("ParseError", "choose exactly one of --rigidity and --base-list");
  std::vector<MvTuple> list;
  if (o.rigidity) {
    if (*o.rigidity != 2) throw Error("UnsupportedIndex", "direct enumeration is implemented for rigid tuples (index 2)");
    if (!o.p) throw Error("ParseError", "--rigidity needs --p");
    list = enumerate_rigid(o.n_max, *o.p);
  } else {
    list = base_list(*o.base_list, o.n_max);
  }
  for (const auto& t : list) out << io::to_json(t).dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Combinatorial and exact-arithmetic tools for tuples of conjugacy classes", "dsp"};
  app.require_subcommand(1);
  Options o;

  auto tuple_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("input", o.input, "Jordan form tuple (JSON, '-' for stdin)")->required();
    return c;
  };
  auto* check = tuple_cmd("check", "goodness test with the reduction chain");
  auto* reduce = tuple_cmd("reduce", "reduction chain only");
  auto* spectra = tuple_cmd("spectra", "q, d, m0 and primitivity of xi");
  auto* generic = tuple_cmd("generic", "relation scan, distance, integer lifts");
  auto* verd = tuple_cmd("verdict", "solvability verdict");
  auto* classify = tuple_cmd("classify", "family label of a nilpotent tuple");
  for (auto* c : {spectra, generic, verd})
    c->add_option("--exponents,-e", o.exponents, "exponent assignment (JSON)")->required();
  generic->add_option("--mode", o.mode, "generic | strong");
  generic->add_option("--kappa-min", o.kappa_min, "smallest kappa scanned");
  generic->add_flag("--exclude-gamma-star", o.exclude_star, "ignore multiples of the star relation");
  generic->add_flag("--distance", o.want_distance, "report the distance instead of a relation");
  generic->add_option("--lift", o.lift, "lift the residues to distance >= H");
  generic->add_option("--lift-mode", o.lift_mode, "A | B");
  classify->add_flag("--plan", o.plan, "rank lowering and merging plan");

  auto* construct = app.add_subcommand("construct", "explicit matrix tuples");
  construct->add_option("--example", o.example, "ex0 .. ex7");
  construct->add_option("--n", o.n, "size");
  construct->add_option("--nice", o.nice, "diagonal block tuples (JSON)");
  construct->add_option("--m0", o.m0, "rank of the extra matrix");
  construct->add_option("--almost-special", o.almost, "a1 b1 c1 c2 d1 d2 d3");
  construct->add_option("--g", o.g, "number of diagonal blocks");
  construct->add_option("--alphas", o.alphas, "comma separated weights");

  auto* merge = app.add_subcommand("merge", "merge two classes of minimal dimension");
  merge->add_option("--n", o.n, "size")->required();
  merge->add_option("--r1", o.r1, "rank of the first class")->required();
  merge->add_option("--r2", o.r2, "rank of the second class")->required();

  auto* verify = app.add_subcommand("verify", "certify a matrix tuple");
  verify->add_option("input", o.input, "matrix tuple (JSON, '-' for stdin)")->required();
  verify->add_option("--expected", o.expected, "expected Jordan form tuple (JSON)");

  auto* enumerate = app.add_subcommand("enumerate", "catalogs as JSON lines");
  enumerate->add_option("--rigidity", o.rigidity, "index of rigidity (2)");
  enumerate->add_option("--n-max", o.n_max, "largest size");
  enumerate->add_option("--p", o.p, "number of forms minus one");
  enumerate->add_option("--base-list", o.base_list, "base list index (0 or even negative)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    app.exit(e, out, out);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << io::to_json(Error("UsageError", e.what())).dump(2) << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, true);
    if (reduce->parsed()) return cmd_check(o, out, false);
    if (spectra->parsed()) return cmd_spectra(o, out);
    if (generic->parsed()) return cmd_generic(o, out);
    if (verd->parsed()) return cmd_verdict(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (merge->parsed()) return cmd_merge(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
  } catch (const Error& e) {
    out << io::to_json(e).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << io::to_json(Error("InternalError", e.what())).dump(2) << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dsp
