#include "dsp/exactmat.hpp"

#include <algorithm>

#include "dsp/errors.hpp"

namespace dsp {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  int n = static_cast<int>(rows.size());
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error("DimensionMismatch", "matrix rows must form a square array");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::unit(int n, int i, int j, const Rat& v) {
  Mat m(n);
  m(i, j) = v;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Mat Mat::power(int k) const {
  Mat r = identity(n_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Mat Mat::transpose() const {
  Mat t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

static void check_same(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "matrix sizes differ");
}

Mat operator+(const Mat& a, const Mat& b) {
  check_same(a, b);
  Mat r(a.n_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same(a, b);
  Mat r(a.n_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Mat operator-(const Mat& a) {
  Mat r(a.n_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = -a.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  check_same(a, b);
  int n = a.n_;
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rat& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

Mat operator*(const Rat& s, const Mat& a) {
  Mat r(a.n_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = s * a.a_[i];
  return r;
}

int rank_rows(const RowMatrix& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<Int>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error("DimensionMismatch", "ragged row matrix");
    Int l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> r(cols);
    bool any = false;
    for (std::size_t j = 0; j < cols; ++j) {
      r[j] = row[j].get_num() * (l / row[j].get_den());
      if (r[j] != 0) any = true;
    }
    if (any) a.push_back(std::move(r));
  }
  std::size_t m = a.size();
  Int prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < m; ++col) {
    std::size_t piv = rk;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rk]);
    const Int p = a[rk][col];
    for (std::size_t i = rk + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int v = p * a[i][j] - a[i][col] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rk;
  }
  return static_cast<int>(rk);
}

static RowMatrix to_rows(const Mat& m) {
  RowMatrix r(m.size(), std::vector<Rat>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r[i][j] = m(i, j);
  return r;
}

int rank(const Mat& m) { return rank_rows(to_rows(m)); }

std::vector<int> rref(RowMatrix& rows, int cols) {
  std::vector<int> pivots;
  int m = static_cast<int>(rows.size());
  int r = 0;
  for (int col = 0; col < cols && r < m; ++col) {
    int piv = r;
    while (piv < m && rows[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[r]);
    Rat inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (std::size_t j = col; j < rows[i].size(); ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::optional<std::vector<Rat>> solve_linear(const RowMatrix& a, const std::vector<Rat>& b, int cols) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "right-hand side length differs");
  RowMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug, cols + 1);
  std::vector<Rat> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

std::vector<std::vector<Rat>> kernel_basis(const RowMatrix& a, int cols) {
  RowMatrix r = a;
  auto pivots = rref(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> inverse(const Mat& m) {
  int n = m.size();
  RowMatrix aug(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  Mat inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
  return inv;
}

Rat determinant(const Mat& m) {
  int n = m.size();
  RowMatrix a = to_rows(m);
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

Poly charpoly(const Mat& m) {
  int n = m.size();
  Mat h = m;
  // Similarity reduction to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    int piv = c + 1;
    while (piv < n && h(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    for (int i = c + 2; i < n; ++i) {
      if (h(i, c) == 0) continue;
      Rat t = h(i, c) / h(c + 1, c);
      for (int j = 0; j < n; ++j) h(i, j) -= t * h(c + 1, j);
      for (int k = 0; k < n; ++k) h(k, c + 1) += t * h(k, i);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = Poly({Rat(1)});
  for (int k = 1; k <= n; ++k) {
    p[k] = (Poly::x() - Poly({h(k - 1, k - 1)})) * p[k - 1];
    Rat prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      Rat coef = h(i - 1, k - 1) * prod;
      if (coef != 0) p[k] = p[k] - coef * p[i - 1];
    }
  }
  return p[n];
}

Partition jordan_type_nilpotent(const Mat& m) {
  int n = m.size();
  std::vector<int> ranks{n};
  Mat pw = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    pw = pw * m;
    ranks.push_back(rank(pw));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw Error("NotNilpotent", "matrix is not nilpotent");
  // at_least[k] = number of blocks of size >= k
  std::vector<int> parts;
  int top = static_cast<int>(ranks.size()) - 1;
  for (int k = top; k >= 1; --k) {
    int ge_k = ranks[k - 1] - ranks[k];
    int ge_k1 = (k + 1 <= top) ? ranks[k] - ranks[k + 1] : 0;
    for (int c = 0; c < ge_k - ge_k1; ++c) parts.push_back(k);
  }
  Partition p;
  p.parts = parts;
  return p;
}

namespace {

// Incrementally maintained echelon basis of a subspace of Q^dim.
class EchelonSpan {
 public:
  explicit EchelonSpan(int dim) : dim_(dim) {}

  // Adds v if independent; returns whether it was added.
  bool add(std::vector<Rat> v) {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const Rat f = v[pivots_[b]];
      if (f == 0) continue;
      const auto& row = rows_[b];
      for (int j = pivots_[b]; j < dim_; ++j)
        if (row[j] != 0) v[j] -= f * row[j];
    }
    int p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    Rat inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  RowMatrix rows_;
  std::vector<int> pivots_;
};

}  // namespace

int algebra_closure_dim(const std::vector<Mat>& ms) {
  if (ms.empty()) return 1;
  int n = ms.front().size();
  for (const auto& m : ms) check_same(m, ms.front());
  const int full = n * n;
  EchelonSpan span(full);
  std::vector<Mat> queue{Mat::identity(n)};
  span.add(queue.front().data());
  for (std::size_t head = 0; head < queue.size() && span.dim() < full; ++head) {
    for (const auto& g : ms) {
      Mat w = queue[head] * g;
      if (span.add(w.data())) {
        queue.push_back(std::move(w));
        if (span.dim() == full) break;
      }
    }
  }
  return span.dim();
}

int centralizer_dim(const std::vector<Mat>& ms) {
  if (ms.empty()) return 0;
  int n = ms.front().size();
  for (const auto& m : ms) check_same(m, ms.front());
  RowMatrix rows;
  for (const auto& m : ms) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // (X m - m X)_{ij}
        std::vector<Rat> row(n * n);
        bool any = false;
        for (int k = 0; k < n; ++k) {
          if (m(k, j) != 0) {
            row[i * n + k] += m(k, j);
            any = true;
          }
          if (m(i, k) != 0) {
            row[k * n + j] -= m(i, k);
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  return n * n - rank_rows(rows);
}

std::optional<std::vector<Mat>> solve_coboundary_sum(const std::vector<std::pair<Mat, Mat>>& pairs,
                                                     const Mat& target) {
  int c = target.size();
  for (const auto& [a, b] : pairs)
    if (a.size() != c || b.size() != c)
      throw Error("DimensionMismatch", "coboundary blocks must share the target size");
  const int per = c * c;
  const int unknowns = per * static_cast<int>(pairs.size());
  RowMatrix rows;
  std::vector<Rat> rhs;
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < c; ++k) {
      std::vector<Rat> row(unknowns);
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const Mat& a = pairs[j].first;
        const Mat& ap = pairs[j].second;
        int off = static_cast<int>(j) * per;
        for (int l = 0; l < c; ++l) {
          row[off + l * c + k] += a(i, l);   // A D
          row[off + i * c + l] -= ap(l, k);  // D A'
        }
      }
      rows.push_back(std::move(row));
      rhs.push_back(target(i, k));
    }
  auto x = solve_linear(rows, rhs, unknowns);
  if (!x) return std::nullopt;
  std::vector<Mat> out;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    Mat d(c);
    for (int l = 0; l < c; ++l)
      for (int k = 0; k < c; ++k) d(l, k) = (*x)[j * per + l * c + k];
    out.push_back(std::move(d));
  }
  return out;
}

static std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v) {
  int n = m.size();
  std::vector<Rat> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) != 0 && v[j] != 0) r[i] += m(i, j) * v[j];
  return r;
}

Mat jordan_basis_nilpotent(const Mat& m) {
  int n = m.size();
  Partition type = jordan_type_nilpotent(m);
  int top = type.empty() ? 0 : type.parts.front();
  std::vector<std::vector<std::vector<Rat>>> kernels(top + 1);
  Mat pw = Mat::identity(n);
  for (int k = 1; k <= top; ++k) {
    pw = pw * m;
    kernels[k] = kernel_basis(to_rows(pw), n);
  }
  struct Chain {
    std::vector<Rat> v;
    int len;
  };
  std::vector<Chain> chains;
  for (int k = top; k >= 1; --k) {
    RowMatrix w;
    if (k > 1) w = kernels[k - 1];
    for (const auto& ch : chains) {
      std::vector<Rat> u = ch.v;
      for (int s = 0; s < ch.len - k; ++s) u = mat_vec(m, u);
      w.push_back(u);
    }
    int base = rank_rows(w.empty() ? RowMatrix{} : w);
    for (const auto& cand : kernels[k]) {
      w.push_back(cand);
      int r = rank_rows(w);
      if (r > base) {
        base = r;
        chains.push_back({cand, k});
      } else {
        w.pop_back();
      }
    }
  }
  Mat p(n);
  int col = 0;
  for (const auto& ch : chains) {
    std::vector<std::vector<Rat>> seq{ch.v};
    for (int s = 1; s < ch.len; ++s) seq.push_back(mat_vec(m, seq.back()));
    for (int s = ch.len - 1; s >= 0; --s, ++col)
      for (int i = 0; i < n; ++i) p(i, col) = seq[s][i];
  }
  return p;
}

}  // namespace dsp
