#pragma once

#include <vector>

#include "dsp/jnf.hpp"
#include "dsp/reduction.hpp"

namespace dsp {

// Tuple of diagonal Jordan forms given by multiplicity vectors.
struct MvTuple {
  std::vector<Partition> mvs;

  MvTuple() = default;
  // Validates a common size; stores the canonical order (forms sorted).
  explicit MvTuple(std::vector<Partition> m);

  int n() const { return mvs.empty() ? 0 : mvs.front().size(); }
  int p() const { return static_cast<int>(mvs.size()) - 1; }
  int q() const;  // gcd of all multiplicities
  JnfTuple to_jnf() const;
  ConditionReport report() const { return condition_report(to_jnf()); }

  friend bool operator==(const MvTuple&, const MvTuple&) = default;
  friend auto operator<=>(const MvTuple&, const MvTuple&) = default;
};

// Multiplicities per label; labels of multiplicity zero are dropped.
MvTuple mv_tuple_of(const JnfTuple& t);

std::vector<MvTuple> inverse_psi_extensions(const MvTuple& t);
// Diagonal tuples of size <= n_max reducing to size one; sorted by (n, tuple).
std::vector<MvTuple> enumerate_rigid(int n_max, int p);
std::vector<MvTuple> base_list(int h, int n_max);

}  // namespace dsp
