#include <algorithm>

#include "dsp/errors.hpp"
#include "dsp/spectra.hpp"

namespace dsp {

namespace {

struct PairShift {
  int form;
  std::string a, b;
};

std::string label_of_slot(const JordanForm& f, const std::string& slot) {
  if (f.blocks.count(slot)) return slot;
  return slot.substr(0, slot.size() - 2);
}

}  // namespace

ExponentAssignment genericize(const JnfTuple& t, const ExponentAssignment& residues, int h, LiftMode mode,
                              const GenericizeOptions& opts) {
  if (residues.version != Version::Multiplicative)
    throw Error("PreconditionViolation", "genericize expects residues (multiplicative version)");
  if (!residues.offsets.empty()) throw Error("PreconditionViolation", "residues must not carry offsets");
  auto inv = spectra_invariants(t, residues);
  if (mode == LiftMode::A && inv.q > 1 && !inv.xi_primitive)
    throw Error("PreconditionViolation", "mode A needs q = 1 or a primitive xi; use mode B");
  const bool exclude = mode == LiftMode::B;
  const int n = t.n();

  ExponentAssignment cur;
  cur.version = Version::Additive;
  for (std::size_t j = 0; j < t.forms.size(); ++j) {
    std::map<std::string, Rat> vals;
    for (const auto& entry : t.forms[j].blocks)
      vals[entry.first] = frac_of(residues.values[j].at(entry.first));
    cur.values.push_back(std::move(vals));
  }
  Rat exact = 0;
  for (std::size_t j = 0; j < t.forms.size(); ++j)
    for (const auto& [label, p] : t.forms[j].blocks) exact += cur.values[j][label] * p.size();
  Int s = exact.get_num();  // exact is an integer by validation
  Int l;
  mpz_fdiv_r_ui(l.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n));
  long lower = l.get_si();
  for (const auto& [label, p] : t.forms.back().blocks) {
    if (lower == 0) break;
    int k = static_cast<int>(std::min<long>(lower, p.size()));
    cur.offsets[label] = k;
    lower -= k;
  }
  Int shift = -(s - l) / n;
  for (auto& [label, v] : cur.values.front()) v += Rat(shift);

  std::vector<PairShift> all_pairs;
  for (std::size_t j = 0; j < t.forms.size(); ++j) {
    std::vector<std::string> labels;
    for (const auto& [label, p] : t.forms[j].blocks) labels.push_back(label);
    for (std::size_t x = 0; x < labels.size(); ++x)
      for (std::size_t y = x + 1; y < labels.size(); ++y)
        all_pairs.push_back({static_cast<int>(j), labels[x], labels[y]});
  }

  const Int hh(h);
  long deficiency = count_close_relations(t, cur, hh, exclude, opts.kappa_min);
  while (deficiency > 0) {
    // Pairs whose shift moves the current worst relation come first.
    auto rel = find_relation(t, cur, RelationMode::StronglyGeneric, {opts.kappa_min, exclude});
    std::vector<PairShift> order, rest;
    for (const auto& ps : all_pairs) {
      bool moves = false;
      if (rel) {
        const auto& f = t.forms[ps.form];
        std::map<std::string, int> per_label;
        for (const auto& [slot, c] : rel->counts[ps.form]) per_label[label_of_slot(f, slot)] += c;
        long ma = f.blocks.at(ps.a).size(), mb = f.blocks.at(ps.b).size();
        moves = per_label[ps.a] * mb != per_label[ps.b] * ma;
      }
      (moves ? order : rest).push_back(ps);
    }
    order.insert(order.end(), rest.begin(), rest.end());

    bool improved = false;
    for (const auto& ps : order) {
      const auto& f = t.forms[ps.form];
      int ma = f.blocks.at(ps.a).size(), mb = f.blocks.at(ps.b).size();
      for (int u = 1; u <= opts.sweep_bound && !improved; ++u) {
        ExponentAssignment trial = cur;
        trial.values[ps.form][ps.a] += u * mb;
        trial.values[ps.form][ps.b] -= u * ma;
        long d = count_close_relations(t, trial, hh, exclude, opts.kappa_min);
        if (d < deficiency) {
          cur = std::move(trial);
          deficiency = d;
          improved = true;
        }
      }
      if (improved) break;
    }
    if (!improved)
      throw Error("SearchExhausted",
                  "no pair shift with u <= " + std::to_string(opts.sweep_bound) + " reduced the close relations");
  }

  auto dist = distance(t, cur, exclude, opts.kappa_min);
  if (dist && *dist < h) throw Error("SearchExhausted", "lift failed its distance re-check");
  return cur;
}

}  // namespace dsp
