#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsp/jnf.hpp"

namespace dsp {

struct ConditionReport {
  int n = 0;
  long sum_d = 0;
  long sum_r = 0;
  bool alpha_holds = false;
  bool alpha_equality = false;
  bool beta_holds = false;
  bool omega_holds = false;
  long kappa = 0;
  long rigidity_index = 0;
};

ConditionReport condition_report(const JnfTuple& t);

enum class StopReason { OmegaHolds, BetaFails, SizeOne };
std::string to_string(StopReason r);

struct ReductionStage {
  JnfTuple tuple;
  ConditionReport report;
};

struct ReductionChain {
  std::vector<ReductionStage> stages;
  StopReason stop_reason = StopReason::SizeOne;

  std::vector<int> sizes() const;
  int final_size() const { return stages.back().tuple.n(); }
};

// Labels with the maximal number of blocks in each form.
std::vector<std::vector<std::string>> psi_candidates(const JnfTuple& t);
// One reduction step with the lexicographically smallest candidate label.
std::pair<JnfTuple, int> psi_step(const JnfTuple& t);
// One reduction step with an explicit label per form (each must be a candidate).
std::pair<JnfTuple, int> psi_step_with(const JnfTuple& t, const std::vector<std::string>& labels);

ReductionChain reduce_chain(const JnfTuple& t);
bool is_good(const JnfTuple& t);
bool is_good(const ReductionChain& chain);

enum class Version { Additive, Multiplicative };
std::string to_string(Version v);

// Eigenvalue-side facts consumed by the verdict table.
struct SpectraSummary {
  Version version = Version::Additive;
  bool generic = false;
  bool relatively_generic = false;
  int d = 1;
  int q = 1;
  bool xi_primitive = false;
};

enum class VerdictStatus { SolvableIrreducible, SolvableTrivialCentralizer, NotSolvable, OpenCase };
std::string to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::OpenCase;
  std::string theorem;  // empty only for an OpenCase without a matching conjecture
  std::string notes;
};

Verdict verdict(const JnfTuple& t, const SpectraSummary& s);

}  // namespace dsp
