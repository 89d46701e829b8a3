#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "dsp/errors.hpp"
#include "dsp/spectra.hpp"
#include "spectra_oracle.hpp"
#include "support.hpp"

using namespace dsp;
using namespace testing_support;

namespace {

JnfTuple two_block_triple() { return nilpotent_tuple({Partition({2}), Partition({2}), Partition({2})}); }

ExponentAssignment mult(std::vector<std::map<std::string, Rat>> v) {
  ExponentAssignment a;
  a.version = Version::Multiplicative;
  a.values = std::move(v);
  return a;
}

ExponentAssignment two_block_residues(bool product_minus_one) {
  return mult({{{"0", make_rat(1, 4)}}, {{"0", product_minus_one ? make_rat(1, 4) : make_rat(3, 4)}}, {{"0", Rat(0)}}});
}

JnfTuple four_diagonal() { return diagonal_tuple({{2, 2}, {2, 2}, {2, 2}, {2, 2}}); }

ExponentAssignment four_diagonal_values() {
  return mult({{{"e1", Rat(0)}, {"e2", make_rat(1, 8)}},
               {{"e1", Rat(0)}, {"e2", make_rat(1, 8)}},
               {{"e1", Rat(0)}, {"e2", make_rat(-1, 16)}},
               {{"e1", make_rat(1, 4)}, {"e2", make_rat(1, 16)}}});
}

}  // namespace

TEST(Invariants, TwoBlockTriple) {
  auto inv = spectra_invariants(two_block_triple(), two_block_residues(true));
  EXPECT_EQ(inv.q, 2);
  EXPECT_EQ(inv.d, 1);
  EXPECT_EQ(inv.m0, 1);
  EXPECT_TRUE(inv.xi_primitive);
  auto plus = spectra_invariants(two_block_triple(), two_block_residues(false));
  EXPECT_EQ(plus.m0, 0);
  EXPECT_FALSE(plus.xi_primitive);
}

TEST(Invariants, FourDiagonalForms) {
  auto inv = spectra_invariants(four_diagonal(), four_diagonal_values());
  EXPECT_EQ(inv.q, 2);
  EXPECT_EQ(inv.d, 2);
  EXPECT_EQ(inv.m0, 1);
  EXPECT_TRUE(inv.xi_primitive);
}

TEST(Invariants, ScalarForms) {
  JnfTuple t = diagonal_tuple({{3}, {3}, {3}});
  auto inv = spectra_invariants(t, mult({{{"e1", Rat(0)}}, {{"e1", Rat(0)}}, {{"e1", Rat(0)}}}));
  EXPECT_EQ(inv.q, 3);
  EXPECT_EQ(inv.d, 3);
  EXPECT_EQ(inv.m0, 0);
  EXPECT_FALSE(inv.xi_primitive);
}

TEST(Invariants, DivisibilityOnRandomData) {
  for (int trial = 0; trial < 100; ++trial) {
    auto [t, a] = random_assignment(Version::Multiplicative, 8, 3);
    auto inv = spectra_invariants(t, a);
    EXPECT_EQ(t.n() % inv.q, 0);
    EXPECT_EQ(inv.q % inv.d, 0);
  }
}

TEST(Validation, Errors) {
  EXPECT_THROW(spectra_invariants(two_block_triple(), mult({{{"0", make_rat(1, 4)}}, {{"0", make_rat(1, 3)}}, {{"0", Rat(0)}}})),
               Error);
  EXPECT_THROW(validate_assignment(two_block_triple(), mult({{{"0", Rat(0)}}, {{"0", Rat(0)}}})), Error);
  EXPECT_THROW(validate_assignment(two_block_triple(), mult({{{"x", Rat(0)}}, {{"0", Rat(0)}}, {{"0", Rat(0)}}})), Error);
  ExponentAssignment add = two_block_residues(true);
  add.version = Version::Additive;
  EXPECT_THROW(spectra_invariants(two_block_triple(), add), Error);
  // equal residues inside one form
  EXPECT_THROW(validate_assignment(diagonal_tuple({{1, 1}, {1, 1}}),
                                   mult({{{"e1", Rat(0)}, {"e2", Rat(1)}}, {{"e1", Rat(0)}, {"e2", Rat(0)}}})),
               Error);
}

TEST(Relations, TwoBlockTriple) {
  EXPECT_FALSE(find_relation(two_block_triple(), two_block_residues(true), RelationMode::Generic));
  auto r = find_relation(two_block_triple(), two_block_residues(false), RelationMode::Generic);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kappa, 1);
  EXPECT_TRUE(is_integer(r->value));
}

TEST(Relations, FourDiagonalForms) {
  auto r = find_relation(four_diagonal(), four_diagonal_values(), RelationMode::Generic);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kappa, 1);
  EXPECT_EQ(r->value, 0);
  auto r2 = find_relation(four_diagonal(), four_diagonal_values(), RelationMode::Generic, {2, false});
  ASSERT_TRUE(r2);
  EXPECT_EQ(r2->kappa, 2);
}

TEST(Relations, AllZeroHasKappaOne) {
  JnfTuple t = diagonal_tuple({{1, 1}, {1, 1}, {1, 1}});
  ExponentAssignment a;
  a.version = Version::Additive;
  a.values = {{{"e1", Rat(0)}, {"e2", Rat(1)}}, {{"e1", Rat(0)}, {"e2", Rat(-4)}}, {{"e1", Rat(0)}, {"e2", Rat(3)}}};
  auto r = find_relation(t, a, RelationMode::Generic);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kappa, 1);
  EXPECT_EQ(r->value, 0);
}

TEST(Relations, AgreeWithBruteForce) {
  int with_relation = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Version v = trial % 2 ? Version::Additive : Version::Multiplicative;
    auto [t, a] = random_assignment(v, 6, 3);
    for (bool excl : {false, true}) {
      auto combos = all_integer_combos(t, a);
      for (auto mode : {RelationMode::Generic, RelationMode::StronglyGeneric}) {
        bool zero_only = mode == RelationMode::Generic && v == Version::Additive;
        auto expect = oracle_best(combos, excl, zero_only);
        auto got = find_relation(t, a, mode, {1, excl});
        ASSERT_EQ(expect.has_value(), got.has_value()) << "trial " << trial;
        if (got) {
          EXPECT_EQ(got->kappa, expect->kappa);
          EXPECT_EQ(got->value, expect->value);
          // witness counts reproduce the value
          Rat v2 = 0;
          for (std::size_t j = 0; j < got->counts.size(); ++j) {
            int total = 0;
            for (const auto& [slot, c] : got->counts[j]) {
              bool lowered = !t.forms[j].blocks.count(slot);
              std::string label = lowered ? slot.substr(0, slot.size() - 2) : slot;
              v2 += (a.values[j].at(label) - (lowered ? 1 : 0)) * c;
              total += c;
            }
            EXPECT_EQ(total, got->kappa);
          }
          EXPECT_EQ(v2, got->value);
        }
      }
      if (!combos.empty()) ++with_relation;
      EXPECT_EQ(distance(t, a, excl), oracle_distance(combos, excl));
      for (int h : {1, 2, 5}) {
        long expect_count = 0;
        for (const auto& c : combos)
          if (!(excl && c.star) && abs(c.value) < h) ++expect_count;
        EXPECT_EQ(count_close_relations(t, a, Int(h), excl), expect_count);
      }
    }
  }
  EXPECT_GT(with_relation, 30);
}

TEST(Relations, KappaLowerBound) {
  for (int trial = 0; trial < 20; ++trial) {
    auto [t, a] = random_assignment(Version::Multiplicative, 6, 3);
    auto combos = all_integer_combos(t, a, 2);
    auto expect = oracle_best(combos, false, false);
    auto got = find_relation(t, a, RelationMode::StronglyGeneric, {2, false});
    ASSERT_EQ(expect.has_value(), got.has_value());
    if (got) {
      EXPECT_EQ(got->kappa, expect->kappa);
    }
  }
}

TEST(Relations, SymmetricUnderPermutationAndRelabeling) {
  for (int trial = 0; trial < 30; ++trial) {
    auto [t, a] = random_assignment(Version::Multiplicative, 6, 3);
    auto base = find_relation(t, a, RelationMode::StronglyGeneric);
    // reverse forms and prefix labels
    std::vector<JordanForm> fs;
    ExponentAssignment b;
    b.version = a.version;
    for (std::size_t j = t.forms.size(); j-- > 0;) {
      std::map<std::string, Partition> blocks;
      std::map<std::string, Rat> vals;
      for (const auto& [l, p] : t.forms[j].blocks) {
        blocks.emplace("z" + l, p);
        vals["z" + l] = a.values[j].at(l);
      }
      fs.push_back(JordanForm(blocks));
      b.values.push_back(vals);
    }
    auto other = find_relation(JnfTuple(fs), b, RelationMode::StronglyGeneric);
    ASSERT_EQ(base.has_value(), other.has_value());
    if (base) {
      EXPECT_EQ(base->kappa, other->kappa);
      EXPECT_EQ(base->value, other->value);
    }
  }
}

TEST(Relations, NonPrimitiveXiReportsStarRelation) {
  // q = 2 and product +1: the halved multiplicities give a relation
  auto r = find_relation(two_block_triple(), two_block_residues(false), RelationMode::StronglyGeneric);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->gamma_star_multiple);
  EXPECT_FALSE(find_relation(two_block_triple(), two_block_residues(false), RelationMode::StronglyGeneric, {1, true}));
}

TEST(RelativeGenericity, Examples) {
  auto inv = spectra_invariants(two_block_triple(), two_block_residues(false));
  EXPECT_TRUE(is_relatively_generic(two_block_triple(), two_block_residues(false), inv));
  auto prim = spectra_invariants(two_block_triple(), two_block_residues(true));
  EXPECT_THROW(is_relatively_generic(two_block_triple(), two_block_residues(true), prim), Error);

  // q = 2, xi = 1 and an extra kappa = 1 relation 0 + 0 + 0 = 0
  JnfTuple t = diagonal_tuple({{2, 2}, {2, 2}, {2, 2}});
  auto a = mult({{{"e1", Rat(0)}, {"e2", make_rat(1, 3)}},
                 {{"e1", Rat(0)}, {"e2", make_rat(1, 3)}},
                 {{"e1", Rat(0)}, {"e2", make_rat(1, 3)}}});
  auto inv2 = spectra_invariants(t, a);
  ASSERT_FALSE(inv2.xi_primitive);
  EXPECT_FALSE(is_relatively_generic(t, a, inv2));
}

TEST(Distance, Examples) {
  JnfTuple t = diagonal_tuple({{1, 1}, {1, 1}, {1, 1}});
  ExponentAssignment a;
  a.version = Version::Additive;
  a.values = {{{"e1", make_rat(1, 7)}, {"e2", make_rat(2, 7)}},
              {{"e1", make_rat(3, 7)}, {"e2", make_rat(-4, 7)}},
              {{"e1", make_rat(5, 7)}, {"e2", make_rat(-1, 1)}}};
  a.values[2]["e2"] = -(make_rat(1, 7) + make_rat(2, 7) + make_rat(3, 7) + make_rat(-4, 7) + make_rat(5, 7));
  EXPECT_FALSE(distance(t, a, false).has_value());

  // plant a kappa = 1 relation with value 3: 1 + 1 + 1
  ExponentAssignment b;
  b.version = Version::Additive;
  b.values = {{{"e1", Rat(1)}, {"e2", make_rat(1, 2)}},
              {{"e1", Rat(1)}, {"e2", make_rat(1, 3)}},
              {{"e1", Rat(1)}, {"e2", Rat(0)}}};
  b.values[2]["e2"] = -(Rat(3) + make_rat(1, 2) + make_rat(1, 3));
  EXPECT_EQ(distance(t, b, false), Int(3));
}

TEST(Genericize, TwoBlockResidues) {
  auto out = genericize(two_block_triple(), two_block_residues(true), 5, LiftMode::A);
  validate_assignment(two_block_triple(), out);
  auto d = oracle_distance(all_integer_combos(two_block_triple(), out), false);
  EXPECT_TRUE(!d || *d >= 5);
  EXPECT_THROW(genericize(two_block_triple(), two_block_residues(false), 5, LiftMode::A), Error);
}

TEST(Genericize, FourDiagonalFormsModeB) {
  auto out = genericize(four_diagonal(), four_diagonal_values(), 4, LiftMode::B);
  validate_assignment(four_diagonal(), out);
  auto d = oracle_distance(all_integer_combos(four_diagonal(), out), true);
  EXPECT_TRUE(!d || *d >= 4);
}

TEST(Genericize, RandomResiduesAgainstOracle) {
  int done = 0;
  for (int trial = 0; trial < 200 && done < 20; ++trial) {
    auto [t, a] = random_assignment(Version::Multiplicative, 6, 3, 2);
    auto inv = spectra_invariants(t, a);
    if (inv.q > 1 && !inv.xi_primitive) continue;
    auto out = genericize(t, a, 5, LiftMode::A);
    validate_assignment(t, out);
    // equal shifts on equal residues, integer shifts only
    for (std::size_t j = 0; j < t.forms.size(); ++j)
      for (const auto& [l, v] : out.values[j]) EXPECT_EQ(frac_of(v), frac_of(a.values[j].at(l)));
    auto d = oracle_distance(all_integer_combos(t, out), false);
    EXPECT_TRUE(!d || *d >= 5);
    ++done;
  }
  EXPECT_EQ(done, 20);
}

TEST(Limits, ScanCap) {
  JnfTuple big = diagonal_tuple({std::vector<int>(13, 1), std::vector<int>(13, 1), std::vector<int>(13, 1)});
  ExponentAssignment a;
  a.version = Version::Additive;
  a.values.resize(3);
  for (int j = 0; j < 3; ++j)
    for (int k = 1; k <= 13; ++k) a.values[j]["e" + std::to_string(k)] = Rat(k) * (j == 2 ? -2 : 1);
  EXPECT_THROW(find_relation(big, a, RelationMode::Generic), Error);
}
