#include <algorithm>
#include <functional>
#include <set>

#include "dsp/constructions.hpp"
#include "dsp/errors.hpp"

namespace dsp {

namespace {

JnfTuple omega0_tuple(int n, const std::vector<int>& ranks) {
  std::vector<JordanForm> forms;
  for (int r : ranks) forms.push_back(nilpotent_form(omega0(n, r)));
  return JnfTuple(forms);
}

bool exceptional(const CaseLabel& l) {
  return l.kind == CaseLabel::Kind::Special || l.kind == CaseLabel::Kind::AlmostSpecial;
}

struct MergeSearch {
  int n;
  std::set<std::vector<int>> dead;  // sorted rank multisets known to fail
  std::vector<std::pair<int, int>> merges;
  std::vector<int> result;

  bool run(const std::vector<int>& ranks) {
    std::vector<int> key = ranks;
    std::sort(key.begin(), key.end());
    if (dead.count(key)) return false;
    int count = static_cast<int>(ranks.size());
    if (count == 3 || count == 4) {
      if (!exceptional(classify_family(omega0_tuple(n, ranks)))) {
        result = ranks;
        return true;
      }
    }
    if (count > 3) {
      for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) {
          if (ranks[a] + ranks[b] > n - 1) continue;
          std::vector<int> next = ranks;
          next[a] += next[b];
          next.erase(next.begin() + b);
          merges.push_back({a, b});
          if (run(next)) return true;
          merges.pop_back();
        }
    }
    dead.insert(key);
    return false;
  }
};

}  // namespace

ConstructionPlan prepare_construction(const JnfTuple& t) {
  const int n = t.n();
  ConstructionPlan plan;
  std::vector<Partition> original;
  for (const auto& f : t.forms) {
    if (!f.single_label()) throw Error("PreconditionViolation", "construction plans need nilpotent (single-label) forms");
    original.push_back(f.only());
    plan.ranks.push_back(r_of(f));
  }
  int total = 0;
  for (int r : plan.ranks) total += r;
  if (total < 2 * n) throw Error("PreconditionViolation", "the ranks must sum to at least 2n");

  const int count = static_cast<int>(plan.ranks.size());
  if (total == 2 * n && (count == 3 || count == 4)) {
    CaseLabel label = classify_family(t);
    if (!exceptional(label)) {
      plan.lowered_ranks = plan.ranks;
      plan.final_profile = original;
      plan.label = label;
      plan.identity = true;
      return plan;
    }
  }

  MergeSearch search{n, {}, {}, {}};
  std::vector<int> lowered(count);
  // Lowered ranks are tried with the earliest forms kept as high as possible.
  std::function<bool(int, int)> lower = [&](int j, int remaining) -> bool {
    if (j == count) return remaining == 0 && search.run(lowered);
    int rest_max = 0, rest_min = 0;
    for (int k = j + 1; k < count; ++k) {
      rest_max += plan.ranks[k];
      rest_min += std::min(1, plan.ranks[k]);
    }
    int lo = std::min(1, plan.ranks[j]);
    for (int r = plan.ranks[j]; r >= lo; --r) {
      if (remaining - r < rest_min || remaining - r > rest_max) continue;
      lowered[j] = r;
      if (lower(j + 1, remaining - r)) return true;
    }
    return false;
  };
  if (!lower(0, 2 * n))
    throw Error("Unavoidable", "every admissible rank lowering and merging schedule ends in a special or almost-special profile");

  plan.lowered_ranks = lowered;
  plan.merges = search.merges;
  for (int r : search.result) plan.final_profile.push_back(omega0(n, r));
  plan.label = classify_family(omega0_tuple(n, search.result));
  return plan;
}

}  // namespace dsp
