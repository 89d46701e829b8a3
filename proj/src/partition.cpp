#include "dsp/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dsp/errors.hpp"

namespace dsp {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw Error("InvalidPartition", "partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::dual() const {
  Partition d;
  if (parts.empty()) return d;
  for (int k = 1; k <= parts.front(); ++k) {
    int c = 0;
    for (int b : parts)
      if (b >= k) ++c;
    d.parts.push_back(c);
  }
  return d;
}

int Partition::power_rank(int i) const {
  int s = 0;
  for (int b : parts) s += std::max(b - i, 0);
  return s;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s + ")";
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(p);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(n, n);
  return out;
}

}  // namespace dsp
