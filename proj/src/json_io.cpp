#include "dsp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dsp::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error("ParseError", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

int int_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

Rat rat_from(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) fail("rational numbers are integers or strings \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.what());
  }
}

Partition partition_from(const Json& j) {
  if (!j.is_array() || j.empty()) fail("block sizes must be a non-empty array");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(int_from(x, "block size"));
  return Partition(parts);
}

JordanForm form_from(const Json& j) {
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_object()) fail("'blocks' must map labels to block sizes");
  std::map<std::string, Partition> m;
  for (auto it = blocks.begin(); it != blocks.end(); ++it) m.emplace(it.key(), partition_from(it.value()));
  JordanForm f(m);
  if (j.contains("n") && int_from(j["n"], "n") != f.n()) fail("'n' disagrees with the block sizes");
  return f;
}

JnfTuple tuple_from(const Json& j) {
  const Json& forms = field(j, "forms");
  if (!forms.is_array() || forms.empty()) fail("'forms' must be a non-empty array");
  std::vector<JordanForm> out;
  for (const auto& f : forms) out.push_back(form_from(f));
  return JnfTuple(out);
}

ExponentAssignment exponents_from(const Json& j) {
  ExponentAssignment a;
  std::string v = field(j, "version").is_string() ? j["version"].get<std::string>() : "";
  if (v == "additive")
    a.version = Version::Additive;
  else if (v == "multiplicative")
    a.version = Version::Multiplicative;
  else
    fail("'version' must be \"additive\" or \"multiplicative\"");
  const Json& values = field(j, "values");
  if (!values.is_array()) fail("'values' must be an array");
  for (const auto& form : values) {
    if (!form.is_object()) fail("each entry of 'values' maps labels to exponents");
    std::map<std::string, Rat> m;
    for (auto it = form.begin(); it != form.end(); ++it) m.emplace(it.key(), rat_from(it.value()));
    a.values.push_back(std::move(m));
  }
  if (j.contains("offsets")) {
    if (!j["offsets"].is_object()) fail("'offsets' must map labels to counts");
    for (auto it = j["offsets"].begin(); it != j["offsets"].end(); ++it)
      a.offsets[it.key()] = int_from(it.value(), "offset");
  }
  return a;
}

Mat mat_from(const Json& j) {
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || rows.empty()) fail("'entries' must be a non-empty array of rows");
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) fail("matrices must be square");
    std::vector<Rat> vals;
    for (const auto& x : row) vals.push_back(rat_from(x));
    r.push_back(std::move(vals));
  }
  Mat m = Mat::from_rows(r);
  if (j.contains("n") && int_from(j["n"], "n") != m.size()) fail("'n' disagrees with the entries");
  return m;
}

MatrixTuple matrix_tuple_from(const Json& j) {
  MatrixTuple t;
  const Json& mats = field(j, "mats");
  if (!mats.is_array() || mats.empty()) fail("'mats' must be a non-empty array");
  for (const auto& m : mats) t.mats.push_back(mat_from(m));
  for (const auto& m : t.mats)
    if (m.size() != t.mats.front().size()) throw Error("DimensionMismatch", "matrices of a tuple must share one size");
  if (j.contains("alphas")) {
    if (!j["alphas"].is_array()) fail("'alphas' must be an array");
    for (const auto& a : j["alphas"]) t.alphas.push_back(rat_from(a));
  } else {
    t.alphas = default_alphas(static_cast<int>(t.mats.size()));
  }
  return t;
}

MvTuple mv_tuple_from(const Json& j) {
  const Json& mvs = field(j, "mvs");
  if (!mvs.is_array() || mvs.empty()) fail("'mvs' must be a non-empty array");
  std::vector<Partition> out;
  for (const auto& m : mvs) out.push_back(partition_from(m));
  return MvTuple(out);
}

// integers as JSON numbers when they fit, everything else as "p/q"
Json to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Json to_json(const Int& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Partition& p) { return p.parts; }

Json to_json(const JordanForm& f) {
  Json blocks = Json::object();
  for (const auto& [label, p] : f.blocks) blocks[label] = to_json(p);
  return Json{{"n", f.n()}, {"blocks", blocks}};
}

Json to_json(const JnfTuple& t) {
  Json forms = Json::array();
  for (const auto& f : t.forms) forms.push_back(to_json(f));
  return Json{{"forms", forms}};
}

Json to_json(const ExponentAssignment& a) {
  Json values = Json::array();
  for (const auto& form : a.values) {
    Json m = Json::object();
    for (const auto& [label, v] : form) m[label] = to_json(v);
    values.push_back(m);
  }
  Json offsets = Json::object();
  for (const auto& [label, k] : a.offsets) offsets[label] = k;
  return Json{{"version", to_string(a.version)}, {"values", values}, {"offsets", offsets}};
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"n", m.size()}, {"entries", rows}};
}

Json to_json(const MatrixTuple& t) {
  Json alphas = Json::array(), mats = Json::array();
  for (const auto& a : t.alphas) alphas.push_back(to_json(a));
  for (const auto& m : t.mats) mats.push_back(to_json(m));
  return Json{{"alphas", alphas}, {"mats", mats}, {"zero_sum", t.zero_sum()}};
}

Json to_json(const ConditionReport& r) {
  return Json{{"n", r.n},
              {"sum_d", r.sum_d},
              {"sum_r", r.sum_r},
              {"alpha", r.alpha_holds},
              {"alpha_equality", r.alpha_equality},
              {"beta", r.beta_holds},
              {"omega", r.omega_holds},
              {"kappa", r.kappa},
              {"rigidity_index", r.rigidity_index}};
}

Json to_json(const ReductionChain& c) {
  Json stages = Json::array();
  for (const auto& s : c.stages) stages.push_back(Json{{"tuple", to_json(s.tuple)}, {"report", to_json(s.report)}});
  return Json{{"sizes", c.sizes()}, {"stop_reason", to_string(c.stop_reason)}, {"stages", stages}};
}

Json to_json(const SpectraInvariants& s) {
  return Json{{"q", s.q}, {"d", s.d}, {"m0", s.m0}, {"xi_primitive", s.xi_primitive}};
}

Json to_json(const Relation& r) {
  Json counts = Json::array();
  for (const auto& form : r.counts) {
    Json m = Json::object();
    for (const auto& [slot, k] : form) m[slot] = k;
    counts.push_back(m);
  }
  Json j{{"kappa", r.kappa}, {"counts", counts}, {"value", to_json(r.value)}};
  j["defect"] = r.defect ? to_json(*r.defect) : Json(nullptr);
  j["gamma_star_multiple"] = r.gamma_star_multiple;
  return j;
}

Json to_json(const Verdict& v) {
  return Json{{"status", to_string(v.status)},
              {"theorem", v.theorem.empty() ? Json(nullptr) : Json(v.theorem)},
              {"notes", v.notes}};
}

Json to_json(const CaseLabel& l) {
  static const char* kinds[] = {"special", "almost-special", "neighbouring", "case", "other"};
  Json j{{"label", l.to_string()}, {"kind", kinds[static_cast<int>(l.kind)]}, {"name", l.name}};
  j["g"] = l.g > 0 ? Json(l.g) : Json(nullptr);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json types = Json::array();
  for (const auto& t : r.jordan_types) types.push_back(t ? to_json(*t) : Json(nullptr));
  Json coeffs = Json::array();
  for (const auto& c : r.b_charpoly.coeffs()) coeffs.push_back(to_json(c));
  Json j{{"n", r.n},
         {"zero_sum", r.zero_sum},
         {"nilpotent", r.nilpotent_flags},
         {"jordan_types", types},
         {"ranks", r.ranks},
         {"closure_dim", r.closure_dim},
         {"irreducible", r.irreducible},
         {"centralizer_dim", r.centralizer_dim},
         {"centralizer_trivial", r.centralizer_trivial},
         {"b_charpoly", to_string(r.b_charpoly)},
         {"b_charpoly_coeffs", coeffs},
         {"simple_nonzero_count", r.simple_nonzero_count},
         {"b_distinct_nonzero", r.b_distinct_nonzero}};
  j["apparent_condition"] = r.apparent_condition ? Json(*r.apparent_condition) : Json(nullptr);
  j["jordan_match"] = r.jordan_match ? Json(*r.jordan_match) : Json(nullptr);
  j["passed"] = r.passed();
  return j;
}

Json to_json(const ConstructionPlan& p) {
  Json merges = Json::array();
  for (auto [a, b] : p.merges) merges.push_back(Json::array({a, b}));
  Json profile = Json::array();
  for (const auto& part : p.final_profile) profile.push_back(to_json(part));
  return Json{{"identity", p.identity},
              {"ranks", p.ranks},
              {"lowered_ranks", p.lowered_ranks},
              {"merges", merges},
              {"final_profile", profile},
              {"label", to_json(p.label)}};
}

Json to_json(const MvTuple& t) {
  Json mvs = Json::array();
  for (const auto& m : t.mvs) mvs.push_back(to_json(m));
  return Json{{"n", t.n()}, {"p", t.p()}, {"q", t.q()}, {"mvs", mvs}, {"report", to_json(t.report())}};
}

Json to_json(const Merged& m) {
  return Json{{"a", to_json(m.a)}, {"a_prime", to_json(m.a_prime)}, {"merged", to_json(m.merged)}};
}

Json to_json(const Error& e) { return Json{{"error", {{"code", e.code()}, {"message", e.what()}}}}; }

}  // namespace dsp::io
