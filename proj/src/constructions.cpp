#include "dsp/constructions.hpp"

#include <algorithm>

#include "dsp/errors.hpp"

namespace dsp {

bool MatrixTuple::zero_sum() const {
  if (mats.empty()) return true;
  Mat s(mats.front().size());
  for (const auto& m : mats) s = s + m;
  return s.is_zero();
}

std::vector<Rat> default_alphas(int count) {
  std::vector<Rat> a;
  for (int j = 1; j <= count; ++j) a.push_back(Rat(j));
  return a;
}

namespace {

// Entries at (k,k+1), k=1..n-1, then at (n-1,1) and (n,2) (1-based).
Mat second_method(int n, const std::vector<int>& entries) {
  Mat m(n);
  for (int k = 0; k + 1 < n; ++k) m(k, k + 1) = entries[k];
  m(n - 2, 0) = entries[n - 1];
  m(n - 1, 1) = entries[n];
  return m;
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> repeat(const std::vector<int>& group, int times) {
  std::vector<int> out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), group.begin(), group.end());
  return out;
}

Partition parts(std::initializer_list<std::pair<int, int>> size_count) {
  std::vector<int> v;
  for (auto [s, c] : size_count)
    for (int i = 0; i < c; ++i) v.push_back(s);
  return Partition(v);
}

void require_size(const std::string& id, int n, bool ok) {
  if (!ok) throw Error("SizeUnsupported", "example " + id + " is not defined for n = " + std::to_string(n));
}

}  // namespace

int example_default_size(const std::string& id) {
  if (id == "ex0") return 2;
  if (id == "ex1") return 4;
  if (id == "ex2") return 3;
  if (id == "ex3") return 6;
  if (id == "ex4") return 9;
  if (id == "ex5") return 10;
  if (id == "ex6") return 12;
  if (id == "ex7") return 5;
  throw Error("SizeUnsupported", "unknown example '" + id + "'");
}

bool example_first_method(const std::string& id) { return id == "ex0" || id == "ex1" || id == "ex2"; }

MatrixTuple make_example(const std::string& id, int n) {
  int fixed = example_default_size(id);
  MatrixTuple t;
  if (id == "ex0") {
    require_size(id, n, n == 2);
    Mat up = Mat::unit(2, 0, 1), low = Mat::unit(2, 1, 0);
    t.mats = {up, -up, low, -low};
  } else if (id == "ex1") {
    require_size(id, n, n >= 4);
    Mat a1(n), a2(n);
    for (int k = 0; k + 1 < n; ++k) {
      a1(k, k + 1) = 1;
      if (k != 1) a2(k, k + 1) = -1;
    }
    a2(n - 1, 0) = -1;
    t.mats = {a1, a2, -a1 - a2};
  } else if (id == "ex2") {
    require_size(id, n, n == 3);
    Mat a1(3), a2(3), a3(3);
    a1(0, 1) = 1;
    a1(1, 2) = 1;
    a2(0, 1) = -1;
    a2(2, 0) = 1;
    a3(1, 2) = -1;
    a3(2, 0) = -1;
    t.mats = {a1, a2, a3};
  } else if (id == "ex3") {
    require_size(id, n, n >= 6 && n % 2 == 0);
    int k = (n - 6) / 2;
    t.mats = {second_method(n, concat({{1, 1, 1, 1}, repeat({1}, n - 6), {1}, {1, -1}})),
              second_method(n, concat({{-1, -1, 0, -1}, repeat({0, -1}, k), {-1}, {0, 0}})),
              second_method(n, concat({{0, 0, -1, 0}, repeat({-1, 0}, k), {0}, {-1, 1}}))};
  } else if (id == "ex7") {
    require_size(id, n, n >= 5 && n % 2 == 1);
    int k = (n - 5) / 2;
    t.mats = {second_method(n, concat({{1, 1, 1, 1}, repeat({1}, n - 5), {1, -1}})),
              second_method(n, concat({{-1, -1, 0, -1}, repeat({0, -1}, k), {0, 0}})),
              second_method(n, concat({{0, 0, -1, 0}, repeat({-1, 0}, k), {-1, 1}}))};
  } else {
    require_size(id, n, n == fixed);
    if (id == "ex4")
      t.mats = {second_method(9, {1, 1, 1, 0, 1, 1, 1, 1, 1, -1}),
                second_method(9, {-1, -1, 0, -1, -1, 0, -1, -1, 0, 0}),
                second_method(9, {0, 0, -1, 1, 0, -1, 0, 0, -1, 1})};
    else if (id == "ex5")
      t.mats = {second_method(10, {1, 1, 1, 1, 0, 1, 1, 1, 1, 1, -1}),
                second_method(10, {-1, -1, 0, -1, -1, -1, 0, -1, -1, 0, 0}),
                second_method(10, {0, 0, -1, 0, 1, 0, -1, 0, 0, -1, 1})};
    else
      t.mats = {second_method(12, {1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, -1}),
                second_method(12, {-1, -1, 0, -1, -1, 0, -1, -1, 0, -1, -1, 0, 0}),
                second_method(12, {0, 0, -1, 1, 0, -1, 0, 1, -1, 0, 0, -1, 1})};
  }
  t.alphas = default_alphas(static_cast<int>(t.mats.size()));
  return t;
}

std::vector<Partition> example_jordan_types(const std::string& id, int n) {
  make_example(id, n);  // size validation
  if (id == "ex0") return {parts({{2, 1}}), parts({{2, 1}}), parts({{2, 1}}), parts({{2, 1}})};
  if (id == "ex1") return {parts({{n, 1}}), parts({{n, 1}}), parts({{2, 2}, {1, n - 4}})};
  if (id == "ex2") return {parts({{3, 1}}), parts({{3, 1}}), parts({{3, 1}})};
  if (id == "ex3") return {parts({{n, 1}}), parts({{3, 2}, {2, (n - 6) / 2}}), parts({{2, n / 2}})};
  if (id == "ex4") return {parts({{5, 1}, {4, 1}}), parts({{3, 3}}), parts({{3, 1}, {2, 3}})};
  if (id == "ex5") return {parts({{5, 2}}), parts({{4, 1}, {3, 2}}), parts({{2, 5}})};
  if (id == "ex6") return {parts({{4, 3}}), parts({{3, 4}}), parts({{3, 2}, {2, 3}})};
  return {parts({{n, 1}}), parts({{3, 1}, {2, (n - 3) / 2}}), parts({{3, 1}, {2, (n - 3) / 2}})};
}

Merged make_merged(int n, int r1, int r2) {
  if (n < 1 || r2 < 0 || r1 < r2 || r1 + r2 > n - 1)
    throw Error("PreconditionViolation", "merging needs r1 >= r2 >= 0 and r1 + r2 <= n - 1");
  Partition blocks = omega0(n, r1);
  Merged m{Mat(n), Mat(n), Mat(n)};
  std::vector<int> gaps;  // superdiagonal slots between consecutive blocks
  int pos = 0;
  for (std::size_t b = 0; b < blocks.parts.size(); ++b) {
    for (int i = 0; i + 1 < blocks.parts[b]; ++i) m.a(pos + i, pos + i + 1) = 1;
    pos += blocks.parts[b];
    if (b + 1 < blocks.parts.size()) gaps.push_back(pos - 1);
  }
  for (int i = 0; i < r2; ++i) m.a_prime(gaps[i], gaps[i] + 1) = 1;
  m.merged = m.a + m.a_prime;
  return m;
}

bool non_equivalent(const MatrixTuple& x, const MatrixTuple& y) {
  int c = x.n();
  if (y.n() != c || x.mats.size() != y.mats.size())
    throw Error("DimensionMismatch", "tuples must have the same shape");
  RowMatrix rows;
  for (std::size_t j = 0; j < x.mats.size(); ++j) {
    const Mat& a = x.mats[j];
    const Mat& b = y.mats[j];
    for (int i = 0; i < c; ++i)
      for (int k = 0; k < c; ++k) {
        std::vector<Rat> row(c * c);
        for (int l = 0; l < c; ++l) {
          row[l * c + k] += a(i, l);
          row[i * c + l] -= b(l, k);
        }
        rows.push_back(std::move(row));
      }
  }
  return rank_rows(rows) == c * c;
}

namespace {

MatrixTuple scaled(const MatrixTuple& t, const Rat& s) {
  MatrixTuple out = t;
  for (auto& m : out.mats) m = s * m;
  return out;
}

Mat weighted_sum(const std::vector<Mat>& mats, const std::vector<Rat>& alphas) {
  Mat b(mats.front().size());
  for (std::size_t j = 0; j < alphas.size() && j < mats.size(); ++j) b = b + alphas[j] * mats[j];
  return b;
}

void place(Mat& big, const Mat& small, int row0, int col0) {
  for (int i = 0; i < small.size(); ++i)
    for (int j = 0; j < small.size(); ++j) big(row0 + i, col0 + j) = small(i, j);
}

Mat extract(const Mat& big, int row0, int col0, int size) {
  Mat m(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = big(row0 + i, col0 + j);
  return m;
}

bool pairwise_non_equivalent(const std::vector<MatrixTuple>& blocks) {
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      if (!non_equivalent(blocks[a], blocks[b])) return false;
  return true;
}

// Off-diagonal block (mu, nu) of the matrices j != skip such that their sum is target.
void glue(std::vector<Mat>& mats, const std::vector<MatrixTuple>& blocks, int mu, int nu, const Mat& target,
          int skip) {
  int c = target.size();
  std::vector<std::pair<Mat, Mat>> pairs;
  std::vector<int> which;
  for (int j = 0; j < static_cast<int>(blocks[mu].mats.size()); ++j) {
    if (j == skip) continue;
    pairs.push_back({blocks[mu].mats[j], blocks[nu].mats[j]});
    which.push_back(j);
  }
  auto d = solve_coboundary_sum(pairs, target);
  if (!d) throw Error("NoSolution", "gluing equation has no solution (equivalent diagonal blocks?)");
  for (std::size_t i = 0; i < which.size(); ++i) {
    Mat h = pairs[i].first * (*d)[i] - (*d)[i] * pairs[i].second;
    place(mats[which[i]], h, mu * c, nu * c);
  }
}

}  // namespace

MatrixTuple build_nice(const std::vector<MatrixTuple>& blocks, int m0, const std::vector<Rat>& alphas,
                       const NiceOptions& opts) {
  if (blocks.size() < 2) throw Error("PreconditionViolation", "at least two diagonal blocks are needed");
  const int chi = blocks.front().n();
  const std::size_t mats = blocks.front().mats.size();
  if (chi != 2 && chi != 3 && chi != 4 && chi != 6)
    throw Error("PreconditionViolation", "diagonal blocks must have size 2, 3, 4 or 6");
  for (const auto& b : blocks)
    if (b.n() != chi || b.mats.size() != mats)
      throw Error("PreconditionViolation", "diagonal blocks must share size and tuple length");
  const int nb = static_cast<int>(blocks.size());
  const int ns = nb * chi;
  if (m0 < 1) throw Error("PreconditionViolation", "m0 must be at least 1");
  if (2 * m0 >= ns) throw Error("PreconditionViolation", "m0 must be smaller than half the size");
  const int kb = (m0 + chi - 1) / chi;  // blocks meeting the first m0 rows
  const int c = kb * chi;
  if (ns - c < m0) throw Error("PreconditionViolation", "not enough columns right of the first m0 rows");
  if (!pairwise_non_equivalent(blocks))
    throw Error("EquivalentBlocks", "two diagonal blocks define equivalent representations");

  std::vector<Rat> al = alphas.empty() ? default_alphas(static_cast<int>(mats)) : alphas;
  std::vector<MatrixTuple> diag;
  bool found = false;
  for (int s = 0; s < opts.max_scaling_attempts && !found; ++s) {
    diag.clear();
    Poly chi_b({Rat(1)});
    for (int k = 0; k < nb; ++k) {
      diag.push_back(scaled(blocks[k], Rat(1 + k * s)));
      chi_b = chi_b * charpoly(weighted_sum(diag.back().mats, al));
    }
    found = distinct_nonzero_root_count(chi_b) == ns && pairwise_non_equivalent(diag);
  }
  if (!found)
    throw Error("SearchExhausted", "no block scaling within " + std::to_string(opts.max_scaling_attempts) +
                                       " attempts gives distinct non-zero eigenvalues of B");

  MatrixTuple out;
  out.alphas = al;
  out.mats.assign(mats, Mat(ns));
  for (int k = 0; k < nb; ++k)
    for (std::size_t j = 0; j < mats; ++j) place(out.mats[j], diag[k].mats[j], k * chi, k * chi);
  Mat extra(ns);
  for (int i = 0; i < m0; ++i)
    for (int col = c; col < ns; ++col) extra(i, col) = (col - c == i) ? 2 : 1;
  for (int mu = 0; mu < kb; ++mu)
    for (int nu = kb; nu < nb; ++nu) {
      Mat target = -extract(extra, mu * chi, nu * chi, chi);
      glue(out.mats, diag, mu, nu, target, -1);
    }
  out.mats.push_back(extra);
  return out;
}

int almost_special_changed_index(const std::string& which) {
  if (which == "a1" || which == "b1" || which == "c2" || which == "d3") return 0;
  if (which == "d2") return 1;
  if (which == "c1" || which == "d1") return 2;
  throw Error("PreconditionViolation", "unknown almost-special case '" + which + "'");
}

MatrixTuple build_almost_special(const std::string& which, int g, const std::vector<Rat>& alphas) {
  const int changed = almost_special_changed_index(which);
  if (g < 2) throw Error("PreconditionViolation", "almost-special constructions need g > 1");
  MatrixTuple base;
  switch (which[0]) {
    case 'a': base = make_example("ex0", 2); break;
    case 'b': base = make_example("ex2", 3); break;
    case 'c': base = make_example("ex1", 4); break;
    default: base = make_example("ex3", 6); break;
  }
  const int chi = base.n();
  Mat p = jordan_basis_nilpotent(base.mats[changed]);
  Mat pinv = *inverse(p);
  for (auto& m : base.mats) m = pinv * m * p;

  std::vector<MatrixTuple> diag;
  for (int k = 0; k < g; ++k) diag.push_back(scaled(base, Rat(k + 1)));
  if (!pairwise_non_equivalent(diag))
    throw Error("EquivalentBlocks", "scaled diagonal blocks are equivalent");

  const int n = g * chi;
  MatrixTuple out;
  out.alphas = alphas.empty() ? default_alphas(static_cast<int>(base.mats.size())) : alphas;
  out.mats.assign(base.mats.size(), Mat(n));
  for (int k = 0; k < g; ++k)
    for (std::size_t j = 0; j < base.mats.size(); ++j) place(out.mats[j], diag[k].mats[j], k * chi, k * chi);
  Mat h = Mat::unit(chi, chi - 1, chi - 1);
  for (int k = 0; k + 1 < g; ++k) {
    place(out.mats[changed], h, k * chi, (g - 1) * chi);
    glue(out.mats, diag, k, g - 1, -h, changed);
  }
  return out;
}

bool VerificationReport::passed() const {
  bool nil = std::all_of(nilpotent_flags.begin(), nilpotent_flags.end(), [](bool b) { return b; });
  return zero_sum && nil && centralizer_trivial && jordan_match.value_or(true);
}

VerificationReport verify_tuple(const MatrixTuple& t, const std::optional<JnfTuple>& expected) {
  VerificationReport r;
  r.n = t.n();
  if (t.mats.empty()) return r;
  for (const auto& m : t.mats)
    if (m.size() != r.n) throw Error("DimensionMismatch", "matrices of a tuple must share one size");
  r.zero_sum = t.zero_sum();
  for (const auto& m : t.mats) {
    r.ranks.push_back(rank(m));
    try {
      r.jordan_types.push_back(jordan_type_nilpotent(m));
      r.nilpotent_flags.push_back(true);
    } catch (const Error&) {
      r.jordan_types.push_back(std::nullopt);
      r.nilpotent_flags.push_back(false);
    }
  }
  r.closure_dim = algebra_closure_dim(t.mats);
  r.irreducible = r.closure_dim == r.n * r.n;
  r.centralizer_dim = centralizer_dim(t.mats);
  r.centralizer_trivial = r.centralizer_dim == 1;
  Mat b = weighted_sum(t.mats, t.alphas);
  r.b_charpoly = charpoly(b);
  r.simple_nonzero_count = simple_nonzero_root_count(r.b_charpoly);
  r.b_distinct_nonzero = r.simple_nonzero_count == r.n;
  if (t.mats.size() == t.alphas.size() + 1) {
    int m0 = r.ranks.back();
    bool ok = true;
    for (int i = m0; i < r.n; ++i)
      for (int j = 0; j < m0; ++j)
        if (b(i, j) != 0) ok = false;
    r.apparent_condition = ok;
  }
  if (expected) {
    bool match = expected->forms.size() <= t.mats.size();
    for (std::size_t j = 0; match && j < expected->forms.size(); ++j) {
      const auto& f = expected->forms[j];
      match = f.single_label() && r.jordan_types[j] && *r.jordan_types[j] == f.only();
    }
    r.jordan_match = match;
  }
  return r;
}

}  // namespace dsp
