#include "dsp/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "dsp/errors.hpp"

namespace dsp {

MvTuple::MvTuple(std::vector<Partition> m) : mvs(std::move(m)) {
  if (mvs.empty()) throw Error("InvalidForm", "a tuple needs at least one form");
  for (const auto& mv : mvs)
    if (mv.size() != mvs.front().size()) throw Error("DimensionMismatch", "all multiplicity vectors must share one size");
  std::sort(mvs.begin(), mvs.end());
}

int MvTuple::q() const {
  long g = 0;
  for (const auto& mv : mvs)
    for (int m : mv.parts) g = std::gcd(g, static_cast<long>(m));
  return static_cast<int>(g);
}

JnfTuple MvTuple::to_jnf() const {
  std::vector<JordanForm> forms;
  for (const auto& mv : mvs) forms.push_back(diagonal_form(mv.parts));
  return JnfTuple(forms);
}

MvTuple mv_tuple_of(const JnfTuple& t) {
  std::vector<Partition> mvs;
  for (const auto& f : t.forms) {
    std::vector<int> m;
    for (const auto& [label, blocks] : f.blocks) {
      (void)label;
      m.push_back(blocks.size());
    }
    mvs.emplace_back(m);
  }
  return MvTuple(mvs);
}

std::vector<MvTuple> inverse_psi_extensions(const MvTuple& t) {
  const int n1 = t.n();
  const int p = t.p();
  const std::size_t forms = t.mvs.size();
  // Per form: distinct existing multiplicities, plus 0 for a fresh slot.
  std::vector<std::vector<int>> choices(forms);
  for (std::size_t j = 0; j < forms; ++j) {
    std::set<int> s(t.mvs[j].parts.begin(), t.mvs[j].parts.end());
    choices[j].push_back(0);
    choices[j].insert(choices[j].end(), s.begin(), s.end());
  }
  std::set<MvTuple> out;
  std::vector<int> pick(forms, 0);
  while (true) {
    int sum = 0;
    for (std::size_t j = 0; j < forms; ++j) sum += choices[j][pick[j]];
    const int n = p * n1 - sum;
    if (n > n1) {
      const int grow = n - n1;
      std::vector<Partition> mvs;
      bool maximal = true;
      for (std::size_t j = 0; j < forms && maximal; ++j) {
        std::vector<int> parts = t.mvs[j].parts;
        int chosen = choices[j][pick[j]];
        if (chosen == 0) {
          parts.push_back(grow);
        } else {
          *std::find(parts.begin(), parts.end(), chosen) += grow;
        }
        int top = chosen + grow;
        maximal = std::all_of(parts.begin(), parts.end(), [top](int m) { return m <= top; });
        mvs.emplace_back(parts);
      }
      if (maximal) {
        MvTuple cand(mvs);
        JnfTuple jt = cand.to_jnf();
        auto rep = condition_report(jt);
        if (rep.beta_holds && !rep.omega_holds) {
          auto [down, size] = psi_step(jt);
          if (size == n1 && mv_tuple_of(down) == t) out.insert(cand);
        }
      }
    }
    std::size_t j = 0;
    while (j < forms && ++pick[j] == static_cast<int>(choices[j].size())) pick[j++] = 0;
    if (j == forms) break;
  }
  return {out.begin(), out.end()};
}

namespace {

bool by_size(const MvTuple& a, const MvTuple& b) { return a.n() != b.n() ? a.n() < b.n() : a < b; }

}  // namespace

std::vector<MvTuple> enumerate_rigid(int n_max, int p) {
  if (n_max < 1) throw Error("PreconditionViolation", "n_max must be at least 1");
  if (p < 1) throw Error("PreconditionViolation", "p must be at least 1");
  MvTuple start(std::vector<Partition>(p + 1, Partition({1})));
  std::set<MvTuple> seen{start};
  std::queue<MvTuple> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    MvTuple cur = frontier.front();
    frontier.pop();
    for (auto& ext : inverse_psi_extensions(cur)) {
      if (ext.n() > n_max || seen.count(ext)) continue;
      seen.insert(ext);
      frontier.push(ext);
    }
  }
  std::vector<MvTuple> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), by_size);
  return out;
}

std::vector<MvTuple> base_list(int h, int n_max) {
  auto scaled = [](std::initializer_list<std::vector<int>> mvs, int d) {
    std::vector<Partition> out;
    for (auto mv : mvs) {
      for (int& m : mv) m *= d;
      out.emplace_back(mv);
    }
    return MvTuple(out);
  };
  auto family = [&](int d) {
    return std::vector<MvTuple>{scaled({{1, 1}, {1, 1}, {1, 1}, {1, 1}}, d),
                                scaled({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, d),
                                scaled({{1, 1, 1, 1}, {1, 1, 1, 1}, {2, 2}}, d),
                                scaled({{1, 1, 1, 1, 1, 1}, {2, 2, 2}, {3, 3}}, d)};
  };
  if (h == 0) return family(1);
  if (h > 0 || h % 2 != 0) throw Error("UnsupportedIndex", "base lists exist for index 0 and even negative indices");
  std::vector<MvTuple> out;
  for (int d = 1;; ++d) {
    bool any = false;
    for (auto& t : family(d))
      if (t.n() <= n_max) {
        out.push_back(t);
        any = true;
      }
    if (!any) break;
  }
  std::sort(out.begin(), out.end(), by_size);
  return out;
}

}  // namespace dsp
