#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsp/jnf.hpp"
#include "dsp/rational.hpp"
#include "dsp/reduction.hpp"

namespace dsp {

// Rational exponents lambda per eigenvalue label (sigma = exp(2 pi i lambda)).
// In the last form, offsets[label] = k means k copies of that eigenvalue sit
// at lambda - 1 instead of lambda.
struct ExponentAssignment {
  Version version = Version::Additive;
  std::vector<std::map<std::string, Rat>> values;
  std::map<std::string, int> offsets;

  friend bool operator==(const ExponentAssignment&, const ExponentAssignment&) = default;
};

struct SpectraInvariants {
  int q = 1;
  int d = 1;
  int m0 = 0;
  bool xi_primitive = true;
};

struct Relation {
  int kappa = 0;
  // Per form, the number of copies taken from each slot. A slot is a label,
  // or "label-1" for the copies lowered by an offset.
  std::vector<std::map<std::string, int>> counts;
  Rat value;
  std::optional<Int> defect;  // value when integer
  bool gamma_star_multiple = false;
};

struct ScanOptions {
  int kappa_min = 1;
  bool exclude_gamma_star = false;
};

enum class RelationMode { Generic, StronglyGeneric };

// Checks labels against the tuple, residue distinctness and the global
// sum constraint; throws ProfileMismatch / ConstraintViolation.
void validate_assignment(const JnfTuple& t, const ExponentAssignment& a);

SpectraInvariants spectra_invariants(const JnfTuple& t, const ExponentAssignment& a);

std::optional<Relation> find_relation(const JnfTuple& t, const ExponentAssignment& a, RelationMode mode,
                                      const ScanOptions& opts = {});

bool is_relatively_generic(const JnfTuple& t, const ExponentAssignment& a, const SpectraInvariants& inv,
                           int kappa_min = 1);

// Minimal |m| over integer-valued relations; nullopt means infinity.
std::optional<Int> distance(const JnfTuple& t, const ExponentAssignment& a, bool exclude_gamma_star,
                            int kappa_min = 1);

// Number of relations (as per-slot count choices) with integer value of
// absolute value < h.
long count_close_relations(const JnfTuple& t, const ExponentAssignment& a, const Int& h,
                           bool exclude_gamma_star, int kappa_min = 1);

enum class LiftMode { A, B };

struct GenericizeOptions {
  int sweep_bound = 64;  // u ranges over 1..sweep_bound
  int kappa_min = 1;
};

// Integer lift of the residues with zero total sum and distance >= h
// (mode B: for relations that are not multiples of the gamma* relation).
ExponentAssignment genericize(const JnfTuple& t, const ExponentAssignment& residues, int h, LiftMode mode,
                              const GenericizeOptions& opts = {});

// Size cap for relation scans, read from DSP_MAX_N (default 12).
int relation_scan_cap();

SpectraSummary summarize(const JnfTuple& t, const ExponentAssignment& a);

}  // namespace dsp
