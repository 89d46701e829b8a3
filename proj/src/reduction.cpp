#include "dsp/reduction.hpp"

#include <algorithm>

#include "dsp/errors.hpp"

namespace dsp {

ConditionReport condition_report(const JnfTuple& t) {
  ConditionReport c;
  c.n = t.n();
  const long n = c.n;
  std::vector<long> r;
  for (const auto& f : t.forms) {
    c.sum_d += d_of(f);
    r.push_back(r_of(f));
    c.sum_r += r.back();
  }
  const long bound = 2 * n * n - 2;
  c.alpha_holds = c.sum_d >= bound;
  c.alpha_equality = c.sum_d == bound;
  c.beta_holds = std::all_of(r.begin(), r.end(), [&](long rj) { return c.sum_r - rj >= n; });
  c.omega_holds = c.sum_r >= 2 * n;
  c.kappa = c.sum_d - bound;
  c.rigidity_index = 2 - c.kappa;
  return c;
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::OmegaHolds: return "omega-holds";
    case StopReason::BetaFails: return "beta-fails";
    case StopReason::SizeOne: return "size-one";
  }
  return "";
}

std::vector<int> ReductionChain::sizes() const {
  std::vector<int> s;
  for (const auto& st : stages) s.push_back(st.tuple.n());
  return s;
}

std::vector<std::vector<std::string>> psi_candidates(const JnfTuple& t) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : t.forms) {
    int m = max_block_count(f);
    std::vector<std::string> labels;
    for (const auto& [label, p] : f.blocks)
      if (p.length() == m) labels.push_back(label);
    out.push_back(std::move(labels));
  }
  return out;
}

std::pair<JnfTuple, int> psi_step_with(const JnfTuple& t, const std::vector<std::string>& labels) {
  auto rep = condition_report(t);
  if (rep.n <= 1 || !rep.beta_holds || rep.omega_holds)
    throw Error("NotReducible", "reduction needs n > 1, condition beta, and omega failing");
  if (labels.size() != t.forms.size()) throw Error("DimensionMismatch", "one label per form expected");
  const int n1 = static_cast<int>(rep.sum_r) - rep.n;
  const int cut = rep.n - n1;
  std::vector<JordanForm> forms;
  for (std::size_t j = 0; j < t.forms.size(); ++j) {
    const auto& f = t.forms[j];
    auto it = f.blocks.find(labels[j]);
    if (it == f.blocks.end() || it->second.length() != max_block_count(f))
      throw Error("NotReducible", "label '" + labels[j] + "' does not have the maximal block count");
    std::vector<int> parts = it->second.parts;  // non-increasing
    for (int k = 0; k < cut; ++k) parts[parts.size() - 1 - k] -= 1;
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    JordanForm g = f;
    if (parts.empty())
      g.blocks.erase(labels[j]);
    else
      g.blocks[labels[j]] = Partition(parts);
    forms.push_back(std::move(g));
  }
  return {JnfTuple(std::move(forms)), n1};
}

std::pair<JnfTuple, int> psi_step(const JnfTuple& t) {
  auto cands = psi_candidates(t);
  std::vector<std::string> labels;
  for (const auto& c : cands) labels.push_back(c.front());  // map order: smallest label
  return psi_step_with(t, labels);
}

ReductionChain reduce_chain(const JnfTuple& t) {
  ReductionChain chain;
  JnfTuple cur = t;
  while (true) {
    auto rep = condition_report(cur);
    chain.stages.push_back({cur, rep});
    if (rep.omega_holds) {
      chain.stop_reason = StopReason::OmegaHolds;
      break;
    }
    if (rep.n == 1) {
      chain.stop_reason = StopReason::SizeOne;
      break;
    }
    if (!rep.beta_holds) {
      chain.stop_reason = StopReason::BetaFails;
      break;
    }
    cur = psi_step(cur).first;
  }
  return chain;
}

bool is_good(const ReductionChain& chain) {
  const auto& top = chain.stages.front().report;
  if (top.n == 1) return true;
  return top.alpha_holds && top.beta_holds && chain.stop_reason != StopReason::BetaFails;
}

bool is_good(const JnfTuple& t) { return is_good(reduce_chain(t)); }

std::string to_string(Version v) { return v == Version::Additive ? "additive" : "multiplicative"; }

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::SolvableIrreducible: return "SolvableIrreducible";
    case VerdictStatus::SolvableTrivialCentralizer: return "SolvableTrivialCentralizer";
    case VerdictStatus::NotSolvable: return "NotSolvable";
    case VerdictStatus::OpenCase: return "OpenCase";
  }
  return "";
}

Verdict verdict(const JnfTuple& t, const SpectraSummary& s) {
  const auto chain = reduce_chain(t);
  const auto& top = chain.stages.front().report;
  const long n = top.n;
  const bool mult = s.version == Version::Multiplicative;

  if (!is_good(chain))
    return {VerdictStatus::NotSolvable, "Thm-necessary",
            "the Jordan forms are not good, so no tuple with trivial centralizer exists"};
  if (s.generic) {
    if (!mult || s.d == 1)
      return {VerdictStatus::SolvableIrreducible, "Thm-generic1",
              "good Jordan forms with generic eigenvalues"};
    return {VerdictStatus::SolvableIrreducible, "Thm-generic2",
            "good Jordan forms with generic eigenvalues, d > 1"};
  }
  if (mult && s.d > 1 && s.xi_primitive)
    return {VerdictStatus::SolvableTrivialCentralizer, "Thm-suff",
            "good Jordan forms, d > 1 and xi is a primitive root of unity"};
  if (mult && s.d > 1 && top.sum_d >= 2 * n * n + 2) {
    if (s.relatively_generic)
      return {VerdictStatus::SolvableIrreducible, "Thm-suff1",
              "good Jordan forms, d > 1, sum of d at least 2n^2+2, relatively generic eigenvalues"};
    return {VerdictStatus::SolvableTrivialCentralizer, "Thm-suff1",
            "good Jordan forms, d > 1, sum of d at least 2n^2+2"};
  }
  if (top.alpha_equality)
    return {VerdictStatus::OpenCase, "Conjecture-1",
            s.q == 1 ? "rigid case with q = 1: expected solvable exactly when the forms are good"
                     : "rigid case with q > 1: goodness is expected to be sufficient only sometimes"};
  if (s.d > 1 && top.sum_d == 2 * n * n && (!mult || !s.xi_primitive))
    return {VerdictStatus::OpenCase, "Conjecture-2",
            "d > 1, sum of d equal to 2n^2, xi not primitive: no trivial-centralizer tuple is expected"};
  return {VerdictStatus::OpenCase, "", "non-generic eigenvalues outside the decided cases"};
}

}  // namespace dsp
