#include "trop/families.hpp"

#include <algorithm>
#include <charconv>

#include "trop/error.hpp"

namespace trop {

namespace {

char atom_letter(AtomKind kind) {
  switch (kind) {
    case AtomKind::cross: return 'V';
    case AtomKind::punctured_cross: return 'W';
    case AtomKind::cell: return 'Z';
  }
  return '?';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_index(std::string_view s, std::string_view atom) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad index '" + std::string(s) + "' in atom '" + std::string(atom) + "'");
  }
  return value;
}

}  // namespace

FamilySpec::FamilySpec(int n) : n_(n), generic_(NormalMatrix::identity(n)) {}

FamilySpec FamilySpec::cross(int n, int p, int q) { return FamilySpec(n).add(AtomKind::cross, p, q); }

FamilySpec FamilySpec::punctured_cross(int n, int p, int q) {
  return FamilySpec(n).add(AtomKind::punctured_cross, p, q);
}

FamilySpec FamilySpec::cell(int n, int p, int q) { return FamilySpec(n).add(AtomKind::cell, p, q); }

FamilySpec& FamilySpec::add(AtomKind kind, int p, int q) {
  check_index(n_, p);
  check_index(n_, q);
  atoms_.push_back({kind, p, q});
  std::array<LineMask, kMaxOrder> rows{};
  for (int i = 0; i < n_; ++i) rows[i] = generic_.row(i);
  const LineMask full = full_line(n_);
  switch (kind) {
    case AtomKind::cross:
      rows[p] = full;
      for (int i = 0; i < n_; ++i) rows[i] |= static_cast<LineMask>(1u << q);
      break;
    case AtomKind::punctured_cross:
      rows[p] |= static_cast<LineMask>(full & ~(1u << q));
      for (int i = 0; i < n_; ++i) {
        if (i != p) rows[i] |= static_cast<LineMask>(1u << q);
      }
      break;
    case AtomKind::cell:
      rows[p] |= static_cast<LineMask>(1u << q);
      break;
  }
  generic_ = NormalMatrix::from_rows({rows.data(), static_cast<std::size_t>(n_)});
  return *this;
}

FamilySpec FamilySpec::operator&(const FamilySpec& other) const {
  if (other.n_ != n_) throw DimensionMismatch(n_, other.n_);
  FamilySpec out = *this;
  for (const FamilyAtom& atom : other.atoms_) out.add(atom.kind, atom.p, atom.q);
  return out;
}

FamilySpec FamilySpec::parse(int n, std::string_view text) {
  if (n < 1 || n > kMaxOrder) {
    throw InvalidArgument("order " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxOrder) + "]");
  }
  FamilySpec spec(n);
  text = trim(text);
  if (text.empty()) return spec;
  while (true) {
    const auto amp = text.find('&');
    const std::string_view atom = trim(text.substr(0, amp));
    if (atom.size() < 3 || atom[1] != ':') {
      throw ParseError("bad family atom '" + std::string(atom) + "', expected e.g. V:1,2");
    }
    AtomKind kind;
    switch (atom[0]) {
      case 'V': kind = AtomKind::cross; break;
      case 'W': kind = AtomKind::punctured_cross; break;
      case 'Z': kind = AtomKind::cell; break;
      default: throw ParseError("unknown family letter in atom '" + std::string(atom) + "'");
    }
    const std::string_view args = atom.substr(2);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("atom '" + std::string(atom) + "' needs two indices");
    }
    const int p = parse_index(args.substr(0, comma), atom);
    const int q = parse_index(args.substr(comma + 1), atom);
    if (p < 1 || p > n || q < 1 || q > n) {
      throw InvalidArgument("atom '" + std::string(atom) + "' has an index outside [1, " +
                            std::to_string(n) + "]");
    }
    spec.add(kind, p - 1, q - 1);
    if (amp == std::string_view::npos) break;
    text = text.substr(amp + 1);
  }
  return spec;
}

bool FamilySpec::contains(const NormalMatrix& a) const {
  if (a.order() != n_) throw DimensionMismatch(n_, a.order());
  for (int i = 0; i < n_; ++i) {
    if ((generic_.row(i) & ~a.row(i)) != 0) return false;
  }
  return true;
}

std::string FamilySpec::to_string() const {
  std::string out;
  for (const FamilyAtom& atom : atoms_) {
    if (!out.empty()) out += '&';
    out += atom_letter(atom.kind);
    out += ':' + std::to_string(atom.p + 1) + ',' + std::to_string(atom.q + 1);
  }
  return out;
}

int pair_indicator(int p, int q) { return p == q ? -1 : 0; }

std::pair<FamilySpec, FamilySpec> minimal_family_specs(int n, const MinimalVariant& v) {
  const int k = v.k;
  const int m = v.m;
  check_index(n, k);
  check_index(n, m);
  using F = FamilySpec;
  switch (v.variant) {
    case 0: return {F::cross(n, m, k), F::cross(n, k, m)};
    case 1:
      return {F::punctured_cross(n, m, k) & F::cell(n, k, m),
              F::punctured_cross(n, k, m) & F::cell(n, m, k)};
    case 2:
      return {F::punctured_cross(n, m, k),
              F::punctured_cross(n, k, m) & F::cell(n, m, k) & F::cell(n, k, m)};
    case 3:
      return {F::punctured_cross(n, m, k) & F::cell(n, m, k) & F::cell(n, k, m),
              F::punctured_cross(n, k, m)};
    default: break;
  }
  throw InvalidArgument("variant " + std::to_string(v.variant) + " outside [0, 3]");
}

std::pair<NormalMatrix, NormalMatrix> minimal_family_pair(int n, const MinimalVariant& v) {
  auto [fa, fb] = minimal_family_specs(n, v);
  return {fa.generic(), fb.generic()};
}

std::optional<MinimalVariant> classify_minimal_family(const NormalMatrix& a,
                                                      const NormalMatrix& b) {
  check_same_order(a, b);
  const int n = a.order();
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      for (int variant = 0; variant < 4; ++variant) {
        const MinimalVariant v{k, m, variant};
        const auto [ga, gb] = minimal_family_pair(n, v);
        if (ga == a && gb == b) return v;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> recover_minimal_family(const IndicatorReport& report) {
  if (report.same_matrices || report.duplicate_count != 0) return std::nullopt;
  const int n = report.order();
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      if (k == m) continue;
      if (report.cell(k, m).kind != ZeroKind::propagation ||
          report.cell(m, k).kind != ZeroKind::propagation) {
        continue;
      }
      bool all_gifts = true;
      for (int s = 0; s < n && all_gifts; ++s) {
        if (s == k || s == m) continue;
        for (int t = 0; t < n; ++t) {
          if (t == s || t == k || t == m) continue;
          const CellClass& c = report.cell(s, t);
          if (c.kind != ZeroKind::gift ||
              std::find(c.gift_witnesses.begin(), c.gift_witnesses.end(), std::pair{k, m}) ==
                  c.gift_witnesses.end()) {
            all_gifts = false;
            break;
          }
        }
      }
      if (all_gifts) return std::pair{k, m};
    }
  }
  return std::nullopt;
}

}  // namespace trop
