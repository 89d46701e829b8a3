#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsp/partition.hpp"

namespace dsp {

// Block sizes per (abstract) eigenvalue label.
struct JordanForm {
  std::map<std::string, Partition> blocks;

  JordanForm() = default;
  // Validates: non-empty, every partition non-empty.
  explicit JordanForm(std::map<std::string, Partition> b);

  int n() const;
  bool single_label() const { return blocks.size() == 1; }
  // The partition of a single-label form.
  const Partition& only() const;

  friend bool operator==(const JordanForm&, const JordanForm&) = default;
};

struct JnfTuple {
  std::vector<JordanForm> forms;

  JnfTuple() = default;
  // Validates that all forms share one size.
  explicit JnfTuple(std::vector<JordanForm> f);

  int n() const { return forms.empty() ? 0 : forms.front().n(); }
  int p() const { return static_cast<int>(forms.size()) - 1; }

  friend bool operator==(const JnfTuple&, const JnfTuple&) = default;
};

// Convenience builders.
JordanForm nilpotent_form(const Partition& p);          // one label "0"
JordanForm diagonal_form(const std::vector<int>& mv);   // labels "e1", "e2", ...

int r_of(const JordanForm& j);
int d_of(const JordanForm& j);
int max_block_count(const JordanForm& j);

JordanForm corresponding_diagonal(const JordanForm& j);
JordanForm corresponding_single(const JordanForm& j);
// Same eigenvalue data up to the choice of labels and the correspondence.
bool correspond(const JordanForm& a, const JordanForm& b);

// j2 lies in the closure of j1.
bool dominates(const JordanForm& j1, const JordanForm& j2);
JordanForm apply_op_sl(const JordanForm& j, const std::string& label, int s, int l);
Partition omega0(int n, int r);
bool is_omega0(const Partition& p);

struct CaseLabel {
  enum class Kind { Special, AlmostSpecial, Neighbouring, Case, Other };
  Kind kind = Kind::Other;
  std::string name;  // "a".."d", "a1".."d3", a letter "A".."K"
  int g = 0;         // for special / almost-special / neighbouring

  std::string to_string() const;
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

CaseLabel classify_family(const JnfTuple& t);

// Block-size templates of the exceptional families, for size n = (l-multiple) * g.
std::vector<Partition> special_profile(const std::string& name, int g);
std::vector<Partition> almost_special_profile(const std::string& name, int g);
bool is_special_or_almost(const std::vector<Partition>& profile);

}  // namespace dsp
