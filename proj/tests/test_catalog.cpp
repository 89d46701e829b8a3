#include <gtest/gtest.h>

#include <set>

#include "dsp/catalog.hpp"
#include "dsp/errors.hpp"
#include "support.hpp"

using namespace dsp;

namespace {

MvTuple mv(std::vector<std::vector<int>> forms) {
  std::vector<Partition> ps;
  for (auto& f : forms) ps.emplace_back(f);
  return MvTuple(ps);
}

// Every multiset of p+1 multiplicity vectors of size n.
void all_tuples(int n, int p, std::vector<MvTuple>& out) {
  auto parts = all_partitions(n);
  std::vector<std::size_t> idx(p + 1, 0);
  while (true) {
    std::vector<Partition> ps;
    for (auto i : idx) ps.push_back(parts[i]);
    out.emplace_back(ps);
    int k = p;
    while (k >= 0 && idx[k] + 1 == parts.size()) --k;
    if (k < 0) break;
    ++idx[k];
    for (int m = k + 1; m <= p; ++m) idx[m] = idx[k];
  }
}

std::set<MvTuple> brute_rigid(int n_max, int p) {
  std::set<MvTuple> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<MvTuple> all;
    all_tuples(n, p, all);
    for (const auto& t : all) {
      auto chain = reduce_chain(t.to_jnf());
      if (is_good(chain) && chain.final_size() == 1) out.insert(t);
    }
  }
  return out;
}

}  // namespace

TEST(MvTuple, CanonicalOrder) {
  auto a = mv({{1, 1}, {2}, {1, 1}});
  auto b = mv({{2}, {1, 1}, {1, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.n(), 2);
  EXPECT_EQ(a.p(), 2);
  EXPECT_EQ(mv({{2, 2}, {4}}).q(), 2);
  EXPECT_THROW(mv({{1, 1}, {3}}), Error);
  EXPECT_EQ(mv_tuple_of(a.to_jnf()), a);
}

TEST(Extensions, Examples) {
  auto ext = inverse_psi_extensions(mv({{1}, {1}, {1}}));
  EXPECT_NE(std::find(ext.begin(), ext.end(), mv({{1, 1}, {1, 1}, {1, 1}})), ext.end());
  auto ext2 = inverse_psi_extensions(mv({{1, 1}, {1, 1}, {1, 1}}));
  EXPECT_NE(std::find(ext2.begin(), ext2.end(), mv({{2, 1}, {1, 1, 1}, {1, 1, 1}})), ext2.end());
  for (const auto& e : ext2) EXPECT_GT(e.n(), 2);
}

TEST(Extensions, RoundTrip) {
  for (int p = 1; p <= 3; ++p)
    for (const auto& t : enumerate_rigid(5, p))
      for (const auto& e : inverse_psi_extensions(t)) {
        EXPECT_GT(e.n(), t.n());
        auto [down, size] = psi_step(e.to_jnf());
        EXPECT_EQ(size, t.n());
        EXPECT_EQ(mv_tuple_of(down), t);
      }
}

TEST(Rigid, SmallCases) {
  EXPECT_EQ(enumerate_rigid(1, 2), (std::vector<MvTuple>{mv({{1}, {1}, {1}})}));
  auto two = enumerate_rigid(2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1], mv({{1, 1}, {1, 1}, {1, 1}}));
  EXPECT_THROW(enumerate_rigid(0, 2), Error);
  EXPECT_THROW(enumerate_rigid(3, 0), Error);
}

TEST(Rigid, MatchesBruteForce) {
  for (int p = 1; p <= 3; ++p) {
    auto got = enumerate_rigid(6, p);
    std::set<MvTuple> gs(got.begin(), got.end());
    EXPECT_EQ(gs.size(), got.size()) << "duplicates for p=" << p;
    auto expect = brute_rigid(6, p);
    EXPECT_EQ(gs, expect) << "p=" << p;
    for (std::size_t i = 1; i < got.size(); ++i) EXPECT_LE(got[i - 1].n(), got[i].n());
  }
}

TEST(Rigid, AlphaEqualityAndKappaZero) {
  for (int p = 1; p <= 3; ++p)
    for (const auto& t : enumerate_rigid(7, p)) {
      auto rep = t.report();
      EXPECT_EQ(rep.kappa, 0);
      EXPECT_EQ(rep.rigidity_index, 2);
      EXPECT_EQ(rep.sum_d, 2L * t.n() * t.n() - 2);
    }
}

TEST(Rigid, KnownHypergeometricFamily) {
  // n ones in two forms and one reflection: rigid for every n
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> ones(n, 1);
    auto t = mv({ones, ones, {n - 1, 1}});
    auto all = enumerate_rigid(n, 2);
    EXPECT_NE(std::find(all.begin(), all.end(), t), all.end()) << n;
  }
}

TEST(BaseList, IndexZero) {
  auto l0 = base_list(0, 100);
  std::vector<MvTuple> expect = {mv({{1, 1}, {1, 1}, {1, 1}, {1, 1}}), mv({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}),
                                 mv({{1, 1, 1, 1}, {1, 1, 1, 1}, {2, 2}}),
                                 mv({{1, 1, 1, 1, 1, 1}, {2, 2, 2}, {3, 3}})};
  EXPECT_EQ(l0, expect);
  for (const auto& t : l0) {
    auto rep = t.report();
    EXPECT_TRUE(rep.omega_holds);
    EXPECT_EQ(rep.sum_d, 2L * t.n() * t.n());
    EXPECT_EQ(rep.kappa, 2);
  }
}

TEST(BaseList, ScaledSeries) {
  auto l = base_list(-2, 12);
  // sizes 2d, 3d, 4d, 6d up to 12
  EXPECT_EQ(l.size(), 4u + 4u + 3u + 2u + 1u + 1u);
  for (const auto& t : l) {
    EXPECT_LE(t.n(), 12);
    EXPECT_TRUE(t.report().omega_holds);
  }
  EXPECT_NE(std::find(l.begin(), l.end(), mv({{2, 2}, {2, 2}, {2, 2}, {2, 2}})), l.end());
  EXPECT_THROW(base_list(-1, 10), Error);
  EXPECT_THROW(base_list(1, 10), Error);
  try {
    base_list(-3, 10);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "UnsupportedIndex");
  }
}
