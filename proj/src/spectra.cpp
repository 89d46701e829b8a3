#include "dsp/spectra.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cstdlib>
#include <numeric>
#include <set>

#include "dsp/errors.hpp"

namespace dsp {

int relation_scan_cap() {
  if (const char* env = std::getenv("DSP_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

void validate_assignment(const JnfTuple& t, const ExponentAssignment& a) {
  if (a.values.size() != t.forms.size())
    throw Error("ProfileMismatch", "one value map per form expected");
  for (std::size_t j = 0; j < t.forms.size(); ++j) {
    const auto& f = t.forms[j];
    const auto& v = a.values[j];
    if (v.size() != f.blocks.size()) throw Error("ProfileMismatch", "labels of form " + std::to_string(j) + " differ");
    std::set<Rat> seen;
    for (const auto& [label, p] : f.blocks) {
      auto it = v.find(label);
      if (it == v.end()) throw Error("ProfileMismatch", "no value for label '" + label + "'");
      Rat key = a.version == Version::Multiplicative ? frac_of(it->second) : it->second;
      if (!seen.insert(key).second)
        throw Error("ConstraintViolation", "two eigenvalues of form " + std::to_string(j) + " coincide");
    }
  }
  const auto& last = t.forms.back();
  for (const auto& [label, k] : a.offsets) {
    auto it = last.blocks.find(label);
    if (it == last.blocks.end()) throw Error("ProfileMismatch", "offset for unknown label '" + label + "'");
    if (k < 0 || k > it->second.size()) throw Error("ConstraintViolation", "offset exceeds multiplicity");
  }
  Rat total = 0;
  for (std::size_t j = 0; j < t.forms.size(); ++j)
    for (const auto& [label, p] : t.forms[j].blocks) total += a.values[j].at(label) * p.size();
  for (const auto& [label, k] : a.offsets) total -= k;
  if (a.version == Version::Additive && total != 0)
    throw Error("ConstraintViolation", "eigenvalues do not sum to zero (sum " + to_string(total) + ")");
  if (a.version == Version::Multiplicative && !is_integer(total))
    throw Error("ConstraintViolation", "product of all eigenvalues is not 1");
}

namespace {

int multiplicity_gcd(const JnfTuple& t) {
  int q = 0;
  for (const auto& f : t.forms)
    for (const auto& [label, p] : f.blocks) q = std::gcd(q, p.size());
  return q;
}

int block_count_gcd(const JnfTuple& t) {
  int d = 0;
  for (const auto& f : t.forms)
    for (const auto& [label, p] : f.blocks) {
      std::map<int, int> by_size;
      for (int b : p.parts) ++by_size[b];
      for (auto [size, count] : by_size) d = std::gcd(d, count);
    }
  return d;
}

int compute_m0(const JnfTuple& t, const ExponentAssignment& a, int q) {
  Rat total = 0;
  for (std::size_t j = 0; j < t.forms.size(); ++j)
    for (const auto& [label, p] : t.forms[j].blocks) total += frac_of(a.values[j].at(label)) * p.size();
  Int m = floor_of(total);
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(q));
  return static_cast<int>(r.get_si());
}

// Factor g such that counts s*m/g (1 <= s < g) are the gamma* multiples;
// 0 when there is no such relation.
int star_factor(const JnfTuple& t, const ExponentAssignment& a) {
  int q = multiplicity_gcd(t);
  if (q <= 1) return 0;
  if (a.version == Version::Additive) return q;
  int g = std::gcd(compute_m0(t, a, q), q);
  return g > 1 ? g : 0;
}

struct Slot {
  std::string name;
  std::string label;
  Rat value;
  int mult;
};

struct Entry {
  Rat value;
  bool star;
  std::vector<int> counts;
};

struct Cell {
  long count = 0;
  std::vector<std::vector<int>> witness;
};

using CellMap = std::map<std::pair<Rat, bool>, Cell>;

class Scanner {
 public:
  Scanner(const JnfTuple& t, const ExponentAssignment& a) : t_(t), n_(t.n()) {
    validate_assignment(t, a);
    if (n_ > relation_scan_cap())
      throw Error("SizeUnsupported", "relation scan limited to n <= " + std::to_string(relation_scan_cap()));
    g_ = star_factor(t, a);
    for (std::size_t j = 0; j < t.forms.size(); ++j) {
      std::vector<Slot> slots;
      bool last = j + 1 == t.forms.size();
      for (const auto& [label, p] : t.forms[j].blocks) {
        const Rat& v = a.values[j].at(label);
        int m = p.size();
        int k = 0;
        if (last) {
          auto it = a.offsets.find(label);
          if (it != a.offsets.end()) k = it->second;
        }
        if (m - k > 0) slots.push_back({label, label, v, m - k});
        if (k > 0) slots.push_back({label + "-1", label, v - 1, k});
      }
      slots_.push_back(std::move(slots));
    }
  }

  int n() const { return n_; }
  int forms() const { return static_cast<int>(slots_.size()); }

  std::optional<Relation> best(int kappa, bool exclude_star) const {
    auto [left, right] = halves(kappa);
    auto groups = group_by_residue(right);
    std::optional<Relation> out;
    for (const auto& [key, cell] : left) {
      const auto& [lv, lflag] = key;
      auto git = groups.find(frac_of(-lv));
      if (git == groups.end()) continue;
      for (int rflag = 0; rflag < 2; ++rflag) {
        if (exclude_star && !lflag && !rflag) continue;
        const auto& vec = git->second[rflag];
        if (vec.empty()) continue;
        auto pos = std::lower_bound(vec.begin(), vec.end(), -lv,
                                    [](const auto& e, const Rat& x) { return e.first < x; });
        for (auto it : {pos, pos == vec.begin() ? vec.end() : pos - 1}) {
          if (it == vec.end()) continue;
          Rat total = lv + it->first;
          if (!out || better(total, out->value)) {
            Relation r;
            r.kappa = kappa;
            r.value = total;
            r.defect = total.get_num();
            r.gamma_star_multiple = !lflag && !rflag;
            std::vector<std::vector<int>> all = cell.witness;
            const auto& rw = right.at({it->first, rflag != 0}).witness;
            all.insert(all.end(), rw.begin(), rw.end());
            r.counts = named(all);
            out = std::move(r);
          }
        }
      }
    }
    return out;
  }

  long count_below(int kappa, const Int& h, bool exclude_star) const {
    auto [left, right] = halves(kappa);
    // residue -> flag -> sorted (value, prefix count)
    std::map<Rat, std::array<std::vector<std::pair<Rat, long>>, 2>> groups;
    for (const auto& [key, cell] : right) groups[frac_of(key.first)][key.second].push_back({key.first, cell.count});
    for (auto& [res, arr] : groups)
      for (auto& vec : arr) {
        std::sort(vec.begin(), vec.end());
        long acc = 0;
        for (auto& e : vec) acc = (e.second += acc);
      }
    long total = 0;
    Rat hr(h);
    for (const auto& [key, cell] : left) {
      const auto& [lv, lflag] = key;
      auto git = groups.find(frac_of(-lv));
      if (git == groups.end()) continue;
      for (int rflag = 0; rflag < 2; ++rflag) {
        if (exclude_star && !lflag && !rflag) continue;
        const auto& vec = git->second[rflag];
        // values v with -h < lv + v < h
        Rat lo = -hr - lv, hi = hr - lv;
        auto cmp = [](const std::pair<Rat, long>& e, const Rat& x) { return e.first < x; };
        auto a = std::upper_bound(vec.begin(), vec.end(), lo,
                                  [](const Rat& x, const std::pair<Rat, long>& e) { return x < e.first; });
        auto b = std::lower_bound(vec.begin(), vec.end(), hi, cmp);
        if (b <= a) continue;
        long upto_b = (b - 1)->second;
        long upto_a = (a == vec.begin()) ? 0 : (a - 1)->second;
        total += cell.count * (upto_b - upto_a);
      }
    }
    return total;
  }

 private:
  static bool better(const Rat& a, const Rat& b) {
    Rat aa = abs(a), bb = abs(b);
    if (aa != bb) return aa < bb;
    return a < b;
  }

  std::vector<std::map<std::string, int>> named(const std::vector<std::vector<int>>& counts) const {
    std::vector<std::map<std::string, int>> out;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      std::map<std::string, int> m;
      for (std::size_t s = 0; s < counts[j].size(); ++s)
        if (counts[j][s]) m[slots_[j][s].name] = counts[j][s];
      out.push_back(std::move(m));
    }
    return out;
  }

  std::vector<Entry> entries(int j, int kappa) const {
    const auto& slots = slots_[j];
    std::vector<Entry> out;
    std::vector<int> c(slots.size(), 0);
    int star_s = (g_ > 0 && (kappa * g_) % n_ == 0) ? kappa * g_ / n_ : 0;
    std::function<void(std::size_t, int, Rat)> rec = [&](std::size_t i, int rest, Rat v) {
      if (i == slots.size()) {
        if (rest) return;
        bool star = false;
        if (star_s > 0 && star_s < g_) {
          std::map<std::string, int> per_label;
          for (std::size_t s = 0; s < slots.size(); ++s) per_label[slots[s].label] += c[s];
          star = true;
          for (const auto& [label, p] : t_.forms[j].blocks)
            if (per_label[label] * g_ != star_s * p.size()) star = false;
        }
        out.push_back({v, star, c});
        return;
      }
      for (int k = std::min(rest, slots[i].mult); k >= 0; --k) {
        c[i] = k;
        rec(i + 1, rest - k, v + slots[i].value * k);
      }
      c[i] = 0;
    };
    rec(0, kappa, Rat(0));
    return out;
  }

  CellMap partial(int from, int to, int kappa) const {
    CellMap cur;
    cur[{Rat(0), false}] = Cell{1, {}};
    for (int j = from; j < to; ++j) {
      auto es = entries(j, kappa);
      CellMap next;
      for (const auto& [key, cell] : cur)
        for (const auto& e : es) {
          auto nk = std::make_pair(key.first + e.value, key.second || !e.star);
          auto [it, fresh] = next.try_emplace(nk);
          it->second.count += cell.count;
          if (fresh) {
            it->second.witness = cell.witness;
            it->second.witness.push_back(e.counts);
          }
        }
      cur = std::move(next);
    }
    return cur;
  }

  std::pair<CellMap, CellMap> halves(int kappa) const {
    // Split the forms so that both sides have comparable entry products.
    std::vector<double> sz;
    for (int j = 0; j < forms(); ++j) sz.push_back(static_cast<double>(entries(j, kappa).size()));
    int split = 1;
    double best = -1;
    for (int s = 1; s < forms(); ++s) {
      double l = 1, r = 1;
      for (int j = 0; j < s; ++j) l *= sz[j];
      for (int j = s; j < forms(); ++j) r *= sz[j];
      double cost = std::max(l, r);
      if (best < 0 || cost < best) {
        best = cost;
        split = s;
      }
    }
    return {partial(0, split, kappa), partial(split, forms(), kappa)};
  }

  static std::map<Rat, std::array<std::vector<std::pair<Rat, int>>, 2>> group_by_residue(const CellMap& right) {
    std::map<Rat, std::array<std::vector<std::pair<Rat, int>>, 2>> groups;
    for (const auto& [key, cell] : right) groups[frac_of(key.first)][key.second].push_back({key.first, 0});
    for (auto& [res, arr] : groups)
      for (auto& vec : arr) std::sort(vec.begin(), vec.end());
    return groups;
  }

  const JnfTuple& t_;
  int n_;
  int g_ = 0;
  std::vector<std::vector<Slot>> slots_;
};

}  // namespace

SpectraInvariants spectra_invariants(const JnfTuple& t, const ExponentAssignment& a) {
  if (a.version != Version::Multiplicative)
    throw Error("PreconditionViolation", "spectral invariants are defined for the multiplicative version");
  validate_assignment(t, a);
  SpectraInvariants inv;
  inv.q = multiplicity_gcd(t);
  inv.d = block_count_gcd(t);
  inv.m0 = compute_m0(t, a, inv.q);
  inv.xi_primitive = std::gcd(inv.m0, inv.q) == 1;
  return inv;
}

std::optional<Relation> find_relation(const JnfTuple& t, const ExponentAssignment& a, RelationMode mode,
                                      const ScanOptions& opts) {
  Scanner sc(t, a);
  bool zero_only = mode == RelationMode::Generic && a.version == Version::Additive;
  for (int kappa = std::max(1, opts.kappa_min); kappa < sc.n(); ++kappa) {
    auto r = sc.best(kappa, opts.exclude_gamma_star);
    if (!r) continue;
    if (zero_only && r->value != 0) continue;
    return r;
  }
  return std::nullopt;
}

bool is_relatively_generic(const JnfTuple& t, const ExponentAssignment& a, const SpectraInvariants& inv,
                           int kappa_min) {
  if (inv.q <= 1) throw Error("PreconditionViolation", "relative genericity needs q > 1");
  if (a.version == Version::Multiplicative && std::gcd(inv.m0, inv.q) <= 1)
    throw Error("PreconditionViolation", "relative genericity needs a non-primitive xi");
  ScanOptions opts{kappa_min, true};
  return !find_relation(t, a, RelationMode::Generic, opts).has_value();
}

std::optional<Int> distance(const JnfTuple& t, const ExponentAssignment& a, bool exclude_gamma_star,
                            int kappa_min) {
  Scanner sc(t, a);
  std::optional<Int> best;
  for (int kappa = std::max(1, kappa_min); kappa < sc.n(); ++kappa) {
    auto r = sc.best(kappa, exclude_gamma_star);
    if (!r) continue;
    Int m = abs(r->value.get_num());
    if (!best || m < *best) best = m;
  }
  return best;
}

long count_close_relations(const JnfTuple& t, const ExponentAssignment& a, const Int& h,
                           bool exclude_gamma_star, int kappa_min) {
  Scanner sc(t, a);
  long total = 0;
  for (int kappa = std::max(1, kappa_min); kappa < sc.n(); ++kappa)
    total += sc.count_below(kappa, h, exclude_gamma_star);
  return total;
}

SpectraSummary summarize(const JnfTuple& t, const ExponentAssignment& a) {
  validate_assignment(t, a);
  SpectraSummary s;
  s.version = a.version;
  s.q = multiplicity_gcd(t);
  s.d = block_count_gcd(t);
  if (a.version == Version::Multiplicative) {
    auto inv = spectra_invariants(t, a);
    s.xi_primitive = inv.xi_primitive;
  }
  s.generic = !find_relation(t, a, RelationMode::Generic).has_value();
  if (!s.generic && star_factor(t, a) > 0)
    s.relatively_generic = !find_relation(t, a, RelationMode::Generic, {1, true}).has_value();
  return s;
}

}  // namespace dsp
