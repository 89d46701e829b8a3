#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "dsp/errors.hpp"
#include "dsp/jnf.hpp"

namespace dsp {

namespace {

Partition blocks_of(std::initializer_list<std::pair<int, int>> size_count) {
  std::vector<int> parts;
  for (auto [size, count] : size_count)
    for (int i = 0; i < count; ++i) parts.push_back(size);
  return Partition(parts);
}

// Size of one unit of g for each family letter.
int unit_of(char family) {
  switch (family) {
    case 'a': return 2;
    case 'b': return 3;
    case 'c': return 4;
    case 'd': return 6;
  }
  return 0;
}

std::vector<Partition> sorted(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const std::array<const char*, 4> kSpecial{"a", "b", "c", "d"};
const std::array<const char*, 7> kAlmost{"a1", "b1", "c1", "c2", "d1", "d2", "d3"};
const std::array<const char*, 4> kNeighbourSources{"a1", "b1", "c2", "d3"};

using SizeSet = std::set<int>;

SizeSet sizes(const Partition& p) { return SizeSet(p.parts.begin(), p.parts.end()); }

struct CaseRow {
  const char* name;
  std::vector<SizeSet> first, second, third;  // empty = any
};

const std::vector<CaseRow>& case_rows() {
  static const SizeSet s12{1, 2}, s2{2}, s23{2, 3}, s3{3}, s34{3, 4}, s4{4}, s45{4, 5}, s5{5},
      s56{5, 6};
  static const std::vector<CaseRow> rows{
      {"A", {s12}, {}, {}},
      {"B", {s2, s23}, {s23}, {}},
      {"C", {s23}, {s3}, {s34}},
      {"D", {s23}, {s3}, {s4}},
      {"E", {s23}, {s3}, {s45}},
      {"F", {s23}, {s3}, {s5}},
      {"G", {s23}, {s3}, {s56}},
      {"H", {s2, s23}, {s34}, {s4}},
      {"I", {s2, s23}, {s34}, {s45}},
      {"J", {s2, s23}, {s34}, {s5}},
      {"K", {s2, s23}, {s34}, {s56}},
  };
  return rows;
}

bool fits(const std::vector<SizeSet>& allowed, const SizeSet& s) {
  return allowed.empty() || std::find(allowed.begin(), allowed.end(), s) != allowed.end();
}

}  // namespace

std::vector<Partition> special_profile(const std::string& name, int g) {
  if (name == "a") return {blocks_of({{2, g}}), blocks_of({{2, g}}), blocks_of({{2, g}}), blocks_of({{2, g}})};
  if (name == "b") return {blocks_of({{3, g}}), blocks_of({{3, g}}), blocks_of({{3, g}})};
  if (name == "c") return {blocks_of({{4, g}}), blocks_of({{4, g}}), blocks_of({{2, 2 * g}})};
  if (name == "d") return {blocks_of({{6, g}}), blocks_of({{3, 2 * g}}), blocks_of({{2, 3 * g}})};
  throw Error("PreconditionViolation", "unknown special case '" + name + "'");
}

std::vector<Partition> almost_special_profile(const std::string& name, int g) {
  if (g < 2) throw Error("PreconditionViolation", "almost-special cases need g > 1");
  if (name == "a1")
    return {blocks_of({{3, 1}, {1, 1}, {2, g - 2}}), blocks_of({{2, g}}), blocks_of({{2, g}}),
            blocks_of({{2, g}})};
  if (name == "b1")
    return {blocks_of({{4, 1}, {2, 1}, {3, g - 2}}), blocks_of({{3, g}}), blocks_of({{3, g}})};
  if (name == "c1")
    return {blocks_of({{4, g}}), blocks_of({{4, g}}), blocks_of({{3, 1}, {1, 1}, {2, 2 * g - 2}})};
  if (name == "c2")
    return {blocks_of({{5, 1}, {3, 1}, {4, g - 2}}), blocks_of({{4, g}}), blocks_of({{2, 2 * g}})};
  if (name == "d1")
    return {blocks_of({{6, g}}), blocks_of({{3, 2 * g}}), blocks_of({{3, 1}, {1, 1}, {2, 3 * g - 2}})};
  if (name == "d2")
    return {blocks_of({{6, g}}), blocks_of({{4, 1}, {2, 1}, {3, 2 * g - 2}}), blocks_of({{2, 3 * g}})};
  if (name == "d3")
    return {blocks_of({{7, 1}, {5, 1}, {6, g - 2}}), blocks_of({{3, 2 * g}}), blocks_of({{2, 3 * g}})};
  throw Error("PreconditionViolation", "unknown almost-special case '" + name + "'");
}

static std::optional<CaseLabel> match_exceptional(const std::vector<Partition>& profile, int n) {
  auto target = sorted(profile);
  for (const char* name : kSpecial) {
    int unit = unit_of(name[0]);
    if (n % unit || n / unit < 2) continue;
    if (sorted(special_profile(name, n / unit)) == target)
      return CaseLabel{CaseLabel::Kind::Special, name, n / unit};
  }
  for (const char* name : kAlmost) {
    int unit = unit_of(name[0]);
    if (n % unit || n / unit < 2) continue;
    if (sorted(almost_special_profile(name, n / unit)) == target)
      return CaseLabel{CaseLabel::Kind::AlmostSpecial, name, n / unit};
  }
  return std::nullopt;
}

bool is_special_or_almost(const std::vector<Partition>& profile) {
  if (profile.empty()) return false;
  return match_exceptional(profile, profile.front().size()).has_value();
}

std::string CaseLabel::to_string() const {
  switch (kind) {
    case Kind::Special: return "special-" + name;
    case Kind::AlmostSpecial: return "almost-" + name;
    case Kind::Neighbouring: return "neighbouring-of-" + name;
    case Kind::Case: return "case-(" + name + ")";
    case Kind::Other: return "other";
  }
  return "other";
}

CaseLabel classify_family(const JnfTuple& t) {
  int p = t.p();
  if (p != 2 && p != 3) throw Error("PreconditionViolation", "classification needs p = 2 or p = 3");
  int n = t.n();
  std::vector<Partition> profile;
  int sum_r = 0;
  for (const auto& f : t.forms) {
    if (!f.single_label())
      throw Error("PreconditionViolation", "classification needs nilpotent (single-eigenvalue) forms");
    profile.push_back(f.only());
    sum_r += r_of(f);
  }
  if (sum_r != 2 * n) throw Error("PreconditionViolation", "classification needs sum of r equal to 2n");

  if (auto hit = match_exceptional(profile, n)) return *hit;

  auto target = sorted(profile);
  for (const char* name : kNeighbourSources) {
    int unit = unit_of(name[0]);
    if (n % unit || n / unit < 2) continue;
    int g = n / unit;
    auto base = almost_special_profile(name, g);
    if (static_cast<int>(base.size()) != p + 1) continue;
    for (std::size_t j = 0; j < base.size(); ++j) {
      SizeSet present = sizes(base[j]);
      for (int s : present)
        for (int l : present) {
          if (l > s) continue;
          try {
            auto next = apply_op_sl(nilpotent_form(base[j]), "0", s, l).only();
            auto cand = base;
            cand[j] = next;
            if (sorted(cand) == target) return CaseLabel{CaseLabel::Kind::Neighbouring, name, g};
          } catch (const Error&) {
            // (s,s) with a single block of size s
          }
        }
    }
  }

  if (p == 2 && std::all_of(profile.begin(), profile.end(), is_omega0)) {
    std::array<int, 3> idx{0, 1, 2};
    for (const auto& row : case_rows()) {
      std::sort(idx.begin(), idx.end());
      do {
        if (fits(row.first, sizes(profile[idx[0]])) && fits(row.second, sizes(profile[idx[1]])) &&
            fits(row.third, sizes(profile[idx[2]])))
          return CaseLabel{CaseLabel::Kind::Case, row.name, 0};
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  return CaseLabel{};
}

}  // namespace dsp
