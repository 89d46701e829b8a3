#include "dsp/jnf.hpp"

#include <algorithm>

#include "dsp/errors.hpp"

namespace dsp {

JordanForm::JordanForm(std::map<std::string, Partition> b) : blocks(std::move(b)) {
  if (blocks.empty()) throw Error("InvalidForm", "a Jordan form needs at least one eigenvalue");
  for (const auto& [label, p] : blocks)
    if (p.empty()) throw Error("InvalidForm", "eigenvalue '" + label + "' has no blocks");
}

int JordanForm::n() const {
  int s = 0;
  for (const auto& [label, p] : blocks) s += p.size();
  return s;
}

const Partition& JordanForm::only() const {
  if (!single_label()) throw Error("PreconditionViolation", "form has several eigenvalues");
  return blocks.begin()->second;
}

JnfTuple::JnfTuple(std::vector<JordanForm> f) : forms(std::move(f)) {
  for (const auto& j : forms)
    if (j.n() != forms.front().n())
      throw Error("DimensionMismatch", "forms of a tuple must have the same size");
}

JordanForm nilpotent_form(const Partition& p) { return JordanForm({{"0", p}}); }

JordanForm diagonal_form(const std::vector<int>& mv) {
  std::map<std::string, Partition> b;
  for (std::size_t i = 0; i < mv.size(); ++i)
    b["e" + std::to_string(i + 1)] = Partition(std::vector<int>(mv[i], 1));
  return JordanForm(std::move(b));
}

int max_block_count(const JordanForm& j) {
  int m = 0;
  for (const auto& [label, p] : j.blocks) m = std::max(m, p.length());
  return m;
}

int r_of(const JordanForm& j) { return j.n() - max_block_count(j); }

int d_of(const JordanForm& j) {
  int n = j.n();
  int c = 0;
  for (const auto& [label, p] : j.blocks)
    for (int k : p.dual().parts) c += k * k;
  return n * n - c;
}

JordanForm corresponding_diagonal(const JordanForm& j) {
  std::map<std::string, Partition> b;
  for (const auto& [label, p] : j.blocks) {
    Partition d = p.dual();
    for (std::size_t k = 0; k < d.parts.size(); ++k)
      b[label + "." + std::to_string(k + 1)] = Partition(std::vector<int>(d.parts[k], 1));
  }
  return JordanForm(std::move(b));
}

JordanForm corresponding_single(const JordanForm& j) {
  std::vector<int> sum;
  for (const auto& [label, p] : j.blocks) {
    if (sum.size() < p.parts.size()) sum.resize(p.parts.size(), 0);
    for (std::size_t k = 0; k < p.parts.size(); ++k) sum[k] += p.parts[k];
  }
  return JordanForm({{j.blocks.begin()->first, Partition(sum)}});
}

bool correspond(const JordanForm& a, const JordanForm& b) {
  return corresponding_single(a).only() == corresponding_single(b).only();
}

static bool dominates_partition(const Partition& p1, const Partition& p2) {
  int top = std::max(p1.empty() ? 0 : p1.parts.front(), p2.empty() ? 0 : p2.parts.front());
  for (int i = 1; i <= top; ++i)
    if (p2.power_rank(i) > p1.power_rank(i)) return false;
  return true;
}

bool dominates(const JordanForm& j1, const JordanForm& j2) {
  if (j1.n() != j2.n()) throw Error("ProfileMismatch", "forms have different sizes");
  if (j1.single_label() && j2.single_label()) return dominates_partition(j1.only(), j2.only());
  if (j1.blocks.size() != j2.blocks.size())
    throw Error("ProfileMismatch", "forms have different eigenvalue sets");
  for (const auto& [label, p1] : j1.blocks) {
    auto it = j2.blocks.find(label);
    if (it == j2.blocks.end() || it->second.size() != p1.size())
      throw Error("ProfileMismatch", "multiplicity of eigenvalue '" + label + "' differs");
  }
  for (const auto& [label, p1] : j1.blocks)
    if (!dominates_partition(p1, j2.blocks.at(label))) return false;
  return true;
}

JordanForm apply_op_sl(const JordanForm& j, const std::string& label, int s, int l) {
  auto it = j.blocks.find(label);
  if (it == j.blocks.end()) throw Error("BlocksAbsent", "no eigenvalue '" + label + "'");
  if (l < 1 || s < l) throw Error("BlocksAbsent", "operation (s,l) needs s >= l >= 1");
  std::vector<int> parts = it->second.parts;
  auto take = [&](int v) {
    auto pos = std::find(parts.begin(), parts.end(), v);
    if (pos == parts.end()) return false;
    parts.erase(pos);
    return true;
  };
  if (!take(s) || !take(l))
    throw Error("BlocksAbsent", "blocks of sizes " + std::to_string(s) + " and " +
                                    std::to_string(l) + " are not both present");
  parts.push_back(s + 1);
  if (l - 1 > 0) parts.push_back(l - 1);
  JordanForm out = j;
  out.blocks[label] = Partition(parts);
  return out;
}

Partition omega0(int n, int r) {
  if (r < 0 || r >= n) throw Error("BadRank", "rank must satisfy 0 <= r < n");
  int k = n - r;
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) parts.push_back(n / k + (i < n % k ? 1 : 0));
  return Partition(parts);
}

bool is_omega0(const Partition& p) {
  return !p.empty() && p.parts.front() - p.parts.back() <= 1;
}

}  // namespace dsp
