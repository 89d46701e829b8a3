#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dsp/exactmat.hpp"
#include "dsp/jnf.hpp"

namespace dsp {

struct MatrixTuple {
  std::vector<Mat> mats;
  std::vector<Rat> alphas;  // pole weights for the first alphas.size() matrices

  int n() const { return mats.empty() ? 0 : mats.front().size(); }
  bool zero_sum() const;
};

// alpha_j = j for j = 1..count
std::vector<Rat> default_alphas(int count);

// "ex0".."ex7"; throws SizeUnsupported when n does not fit the example.
MatrixTuple make_example(const std::string& id, int n);
// Default size of an example ("ex1" -> 4, "ex3" -> 6, "ex7" -> 5, fixed sizes otherwise).
int example_default_size(const std::string& id);
// Jordan types stated for the example at size n, in matrix order.
std::vector<Partition> example_jordan_types(const std::string& id, int n);
// true for examples whose B has the shape x^n + a; false for x^n + b x.
bool example_first_method(const std::string& id);

struct Merged {
  Mat a, a_prime, merged;
};
Merged make_merged(int n, int r1, int r2);

// Certifies that two tuples of equal size admit no nonzero intertwiner.
bool non_equivalent(const MatrixTuple& x, const MatrixTuple& y);

struct NiceOptions {
  int max_scaling_attempts = 32;
};

// Block upper-triangular (p+2)-tuple glued from the given diagonal blocks.
MatrixTuple build_nice(const std::vector<MatrixTuple>& blocks, int m0, const std::vector<Rat>& alphas,
                       const NiceOptions& opts = {});

// Cases "a1","b1","c1","c2","d1","d2","d3" with g >= 2.
MatrixTuple build_almost_special(const std::string& which, int g, const std::vector<Rat>& alphas = {});
// Index of the matrix whose Jordan type differs from the special case.
int almost_special_changed_index(const std::string& which);

struct VerificationReport {
  int n = 0;
  bool zero_sum = false;
  std::vector<bool> nilpotent_flags;
  std::vector<std::optional<Partition>> jordan_types;
  std::vector<int> ranks;
  int closure_dim = 0;
  bool irreducible = false;
  int centralizer_dim = 0;
  bool centralizer_trivial = false;
  Poly b_charpoly;
  int simple_nonzero_count = 0;
  bool b_distinct_nonzero = false;
  std::optional<bool> apparent_condition;  // only for (p+2)-tuples
  std::optional<bool> jordan_match;        // only when expected types are given

  bool passed() const;
};

VerificationReport verify_tuple(const MatrixTuple& t, const std::optional<JnfTuple>& expected = std::nullopt);

struct ConstructionPlan {
  std::vector<int> ranks;          // of the input forms
  std::vector<int> lowered_ranks;  // after rank normalization, same order
  std::vector<std::pair<int, int>> merges;  // index pairs, applied in order to the current list
  std::vector<Partition> final_profile;
  CaseLabel label;
  bool identity = false;
};

ConstructionPlan prepare_construction(const JnfTuple& t);

}  // namespace dsp
