#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dsp/partition.hpp"
#include "dsp/poly.hpp"
#include "dsp/rational.hpp"

namespace dsp {

// Square n x n matrix over Q, row-major.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);
  static Mat unit(int n, int i, int j, const Rat& v = Rat(1));

  int size() const { return n_; }
  Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<Rat>& data() const { return a_; }

  bool is_zero() const;
  Mat power(int k) const;
  Mat transpose() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  int n_ = 0;
  std::vector<Rat> a_;
};

// Rectangular row lists are used for the linear systems behind the
// closure, centralizer and gluing computations.
using RowMatrix = std::vector<std::vector<Rat>>;

// Fraction-free (Bareiss) rank.
int rank(const Mat& m);
int rank_rows(const RowMatrix& rows);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RowMatrix& rows, int cols);
// Solution of A x = b with leftmost pivots and free variables set to 0.
std::optional<std::vector<Rat>> solve_linear(const RowMatrix& a, const std::vector<Rat>& b, int cols);
std::vector<std::vector<Rat>> kernel_basis(const RowMatrix& a, int cols);

std::optional<Mat> inverse(const Mat& m);
Rat determinant(const Mat& m);

// det(xI - m), via reduction to upper Hessenberg form.
Poly charpoly(const Mat& m);

// Throws Error("NotNilpotent") when m^n != 0.
Partition jordan_type_nilpotent(const Mat& m);

// Dimension of the unital algebra generated by ms (n^2 means irreducible).
int algebra_closure_dim(const std::vector<Mat>& ms);
// Dimension of the common commutant of ms.
int centralizer_dim(const std::vector<Mat>& ms);

// Finds D_j with sum_j (A_j D_j - D_j A'_j) = target, all blocks the same size.
std::optional<std::vector<Mat>> solve_coboundary_sum(const std::vector<std::pair<Mat, Mat>>& pairs,
                                                     const Mat& target);

// Columns form a basis in which the nilpotent m is in Jordan form, blocks in
// decreasing size, each chain ordered m^{k-1}v, ..., m v, v (superdiagonal ones).
Mat jordan_basis_nilpotent(const Mat& m);

}  // namespace dsp
