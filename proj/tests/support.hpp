#pragma once

// Hand-rolled generators and independent reference computations shared by the tests.

#include <algorithm>
#include <ostream>
#include <queue>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "dsp/exactmat.hpp"
#include "dsp/jnf.hpp"
#include "dsp/rational.hpp"
#include "dsp/reduction.hpp"

namespace dsp {
// gtest printers
inline void PrintTo(const Partition& p, std::ostream* os) { *os << to_string(p); }
}  // namespace dsp

namespace testing_support {

using dsp::Int;
using dsp::JnfTuple;
using dsp::JordanForm;
using dsp::Mat;
using dsp::Partition;
using dsp::Rat;
using dsp::make_rat;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rat small_rat(int num_bound = 5, int den_bound = 3) {
  return make_rat(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

inline Mat random_mat(int n, int num_bound = 5, int den_bound = 3, int zero_percent = 30) {
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (uniform(0, 99) >= zero_percent) m(i, j) = small_rat(num_bound, den_bound);
  return m;
}

// Product of random rank-one-ish factors: a matrix of prescribed rank <= r.
inline Mat random_low_rank(int n, int r) {
  Mat m(n);
  for (int k = 0; k < r; ++k) {
    std::vector<Rat> u(n), v(n);
    for (auto& x : u) x = small_rat();
    for (auto& x : v) x = small_rat();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += u[i] * v[j];
  }
  return m;
}

inline Mat random_invertible(int n) {
  // unit lower times unit upper triangular
  Mat l = Mat::identity(n), u = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      l(i, j) = small_rat();
      u(j, i) = small_rat();
    }
  return l * u;
}

inline Partition random_partition(int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    int p = uniform(1, left);
    parts.push_back(p);
    left -= p;
  }
  return Partition(parts);
}

inline JordanForm random_form(int n, int max_labels = 3) {
  int labels = uniform(1, std::min(n, max_labels));
  // split n into `labels` positive sizes
  std::vector<int> sizes(labels, 1);
  for (int i = labels; i < n; ++i) sizes[uniform(0, labels - 1)]++;
  std::map<std::string, Partition> blocks;
  for (int l = 0; l < labels; ++l) blocks.emplace("s" + std::to_string(l), random_partition(sizes[l]));
  return JordanForm(blocks);
}

inline JnfTuple random_tuple(int n, int forms, int max_labels = 3) {
  std::vector<JordanForm> f;
  for (int j = 0; j < forms; ++j) f.push_back(random_form(n, max_labels));
  return JnfTuple(f);
}

inline JnfTuple nilpotent_tuple(const std::vector<Partition>& ps) {
  std::vector<JordanForm> f;
  for (const auto& p : ps) f.push_back(dsp::nilpotent_form(p));
  return JnfTuple(f);
}

inline JnfTuple diagonal_tuple(const std::vector<std::vector<int>>& mvs) {
  std::vector<JordanForm> f;
  for (const auto& m : mvs) f.push_back(dsp::diagonal_form(m));
  return JnfTuple(f);
}

// Plain Gaussian elimination over Q, no fraction-free tricks.
inline int naive_rank(std::vector<std::vector<Rat>> a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) piv = i;
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<Rat>> rows_of(const Mat& m) {
  std::vector<std::vector<Rat>> r(m.size(), std::vector<Rat>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r[i][j] = m(i, j);
  return r;
}

inline int naive_rank(const Mat& m) { return naive_rank(rows_of(m)); }

// Faddeev-LeVerrier: coefficients of det(xI - m), lowest degree first.
inline std::vector<Rat> leverrier(const Mat& a) {
  int n = a.size();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  Mat m(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * Mat::identity(n);
    Mat am = a * m;
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rat(k);
  }
  return c;
}

// Laplace expansion along the first row.
inline Rat laplace_det(const Mat& m) {
  int n = m.size();
  if (n == 1) return m(0, 0);
  Rat det = 0;
  for (int j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Mat minor(n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    Rat term = m(0, j) * laplace_det(minor);
    det += (j % 2 == 0) ? term : Rat(-term);
  }
  return det;
}

// Rank of the stacked system X -> ([X, m_j])_j, built entry by entry.
inline int naive_centralizer_dim(const std::vector<Mat>& ms) {
  int n = ms.front().size();
  std::vector<std::vector<Rat>> rows;
  for (const auto& m : ms)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        std::vector<Rat> row(n * n);
        for (int l = 0; l < n; ++l) {
          row[i * n + l] += m(l, k);  // (X m)_{ik}
          row[l * n + k] -= m(i, l);  // (m X)_{ik}
        }
        rows.push_back(row);
      }
  return n * n - naive_rank(rows);
}

// Jordan type from power ranks, computed with the naive rank.
inline Partition naive_jordan_type(const Mat& m) {
  int n = m.size();
  std::vector<int> ranks{n};
  Mat p = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    p = p * m;
    ranks.push_back(naive_rank(p));
  }
  std::vector<int> parts;
  for (int k = 1; k <= n; ++k) {
    int at_least_k = ranks[k - 1] - ranks[k];
    int at_least_next = k < n ? ranks[k] - ranks[k + 1] : 0;
    for (int c = 0; c < at_least_k - at_least_next; ++c) parts.push_back(k);
  }
  return Partition(parts);
}

// Forms reachable from p by operations (s,l).
inline std::set<Partition> reachable(const Partition& p) {
  std::set<Partition> seen{p};
  std::queue<Partition> todo;
  todo.push(p);
  while (!todo.empty()) {
    Partition cur = todo.front();
    todo.pop();
    for (std::size_t a = 0; a < cur.parts.size(); ++a)
      for (std::size_t b = a + 1; b < cur.parts.size(); ++b) {
        std::vector<int> next = cur.parts;
        next[a] += 1;
        next[b] -= 1;
        next.erase(std::remove(next.begin(), next.end(), 0), next.end());
        Partition q(next);
        if (seen.insert(q).second) todo.push(q);
      }
  }
  return seen;
}

// Half of the sample is drawn from tuples whose chain has more than one stage.
inline std::vector<JnfTuple> random_good_tuples(int count, int n_max, int p_max) {
  std::vector<JnfTuple> flat, deep;
  for (int attempt = 0; attempt < 500000 && static_cast<int>(flat.size() + deep.size()) < count; ++attempt) {
    int n = uniform(2, n_max);
    int p = uniform(1, p_max);
    JnfTuple t = random_tuple(n, p + 1, uniform(1, 4) == 1 ? 1 : n);
    if (!dsp::is_good(t)) continue;
    bool multi = !dsp::condition_report(t).omega_holds;
    if (multi && static_cast<int>(deep.size()) < count / 2) deep.push_back(t);
    if (!multi && static_cast<int>(flat.size()) < count - count / 2) flat.push_back(t);
  }
  flat.insert(flat.end(), deep.begin(), deep.end());
  return flat;
}

}  // namespace testing_support
