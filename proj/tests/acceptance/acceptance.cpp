// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails. Every comparison is exact; the only tolerances are the
// wall-clock ceilings below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "trop/error.hpp"
#include "trop/families.hpp"
#include "trop/graphs.hpp"
#include "trop/ortho.hpp"
#include "trop/search.hpp"

namespace {

using trop::MatrixPair;
using trop::NormalMatrix;

constexpr double kOrderTwoSeconds = 1.0;
constexpr double kOrderThreeSeconds = 1.0;
constexpr double kOrderFourSeconds = 60.0;
constexpr double kBoundedSeconds = 3600.0;
constexpr std::uint64_t kBoundedNodeCap = 2'000'000'000;
constexpr double kForwardSeconds = 10.0;
constexpr double kSelfFiveSeconds = 30.0;
constexpr double kOrthoFourSeconds = 300.0;
constexpr int kPropertyCases = 1000;
constexpr int kOracleProducts = 100'000;
constexpr std::uint64_t kSeed = 0x5eed'2024;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  const std::string& notes() const { return notes_; }

 private:
  std::string failure_;
  std::string notes_;
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

bool oracle_orthogonal(const NormalMatrix& a, const NormalMatrix& b) {
  return oracle::orthogonal(oracle::dense(a), oracle::dense(b));
}

void exhaustive_table(Check& c) {
  const int want[] = {2, 6, 8};
  const double ceiling[] = {kOrderTwoSeconds, kOrderThreeSeconds, kOrderFourSeconds};
  for (int n = 2; n <= 4; ++n) {
    Stopwatch clock;
    const auto cert = trop::exhaustive_pair_minimum(n);
    const double t = clock.seconds();
    c.expect(cert.completeness == trop::Completeness::exhaustive, "not exhaustive at n=" + std::to_string(n));
    c.expect(cert.value == want[n - 2], "value " + std::to_string(cert.value) + " at n=" + std::to_string(n));
    c.expect(t < ceiling[n - 2], "n=" + std::to_string(n) + " took " + fmt_seconds(t));
    for (const auto& [a, b] : cert.witnesses) c.expect(oracle_orthogonal(a, b), "witness not orthogonal");
    c.note("n=" + std::to_string(n) + " value " + std::to_string(cert.value) + " in " + fmt_seconds(t));
  }
}

void bounded_five(Check& c) {
  Stopwatch clock;
  const auto cert = trop::bounded_pair_minimum(5, 13, {kBoundedNodeCap, kBoundedSeconds, 0});
  const double t = clock.seconds();
  c.expect(cert.completeness == trop::Completeness::bounded_proof, "no bounded proof");
  c.expect(cert.budget == 13, "budget " + std::to_string(cert.budget));
  c.expect(cert.value == 14, "value " + std::to_string(cert.value));
  const auto [a, b] = trop::minimal_family_pair(5, {0, 1, 0});
  c.expect(oracle_orthogonal(a, b) && trop::pair_weight(a, b) == 14, "generic family pair is not a weight-14 witness");
  for (const auto& [wa, wb] : cert.witnesses) {
    c.expect(oracle_orthogonal(wa, wb) && trop::pair_weight(wa, wb) == 14, "bad witness");
  }
  c.note("no pair of weight <= 13, weight-14 witnesses attached: " + std::to_string(cert.witness_total) + ", " +
         std::to_string(cert.stats.nodes) + " nodes in " + fmt_seconds(t));
}

void order_two_census(Check& c) {
  const auto cert = trop::exhaustive_pair_minimum(2);
  const auto z = NormalMatrix::all_zero(2), id = NormalMatrix::identity(2);
  const auto u12 = NormalMatrix::single_zero(2, 0, 1), u21 = NormalMatrix::single_zero(2, 1, 0);
  const std::set<MatrixPair> want{{z, id}, {id, z}, {u12, u21}, {u21, u12}};
  const std::set<MatrixPair> got(cert.witnesses.begin(), cert.witnesses.end());
  c.expect(got == want && cert.witness_total == 4, "witness set differs");
  c.note(std::to_string(got.size()) + " minimal pairs");
}

void forward_direction(Check& c) {
  Stopwatch clock;
  int pairs = 0;
  for (int n = 7; n <= 10; ++n) {
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) {
        if (k == m) continue;
        for (int variant = 0; variant < 4; ++variant) {
          const auto [a, b] = trop::minimal_family_pair(n, {k, m, variant});
          const auto rep = trop::indicator(a, b);
          const std::string where = "n=" + std::to_string(n) + " (" + std::to_string(k + 1) + "," +
                                    std::to_string(m + 1) + ") variant " + std::to_string(variant);
          c.expect(rep.indicator.is_all_zero() && oracle_orthogonal(a, b), "not orthogonal at " + where);
          c.expect(trop::pair_weight(a, b) == 4 * n - 6, "weight at " + where);
          c.expect(rep.prop_count == 4 * n - 6, "propagation count at " + where);
          c.expect(rep.gift_count == (n - 2) * (n - 3), "gift count at " + where);
          ++pairs;
        }
      }
    }
  }
  const double t = clock.seconds();
  c.expect(t < kForwardSeconds, "took " + fmt_seconds(t));
  c.note(std::to_string(pairs) + " generic pairs in " + fmt_seconds(t));
}

void outside_pairs(Check& c) {
  const int want[] = {6, 8, 14, 18};
  for (int n = 3; n <= 6; ++n) {
    const auto a = trop::parse_matrix(fixtures::kOutsideA[n - 3]);
    const auto b = trop::parse_matrix(fixtures::kOutsideB[n - 3]);
    const std::string where = " at n=" + std::to_string(n);
    c.expect(oracle_orthogonal(a, b) && trop::is_orthogonal(a, b), "not orthogonal" + where);
    c.expect(trop::pair_weight(a, b) == want[n - 3], "weight " + std::to_string(trop::pair_weight(a, b)) + where);
    c.expect(!trop::classify_minimal_family(a, b).has_value(), "classified as generic" + where);
  }
  c.note("weights 6, 8, 14, 18, none generic");
}

void family_pairs_at_six(Check& c) {
  for (int variant = 0; variant < 4; ++variant) {
    const auto a = fixtures::matrix(fixtures::kFamilyA[variant]);
    const auto b = fixtures::matrix(fixtures::kFamilyB[variant]);
    const std::string where = " for variant " + std::to_string(variant);
    c.expect(oracle_orthogonal(a, b), "not orthogonal" + where);
    c.expect(trop::minimal_family_pair(6, {3, 2, variant}) == std::pair{a, b}, "generic pair differs" + where);
    const auto rep = trop::indicator(a, b);
    for (int s = 0; s < 6; ++s) {
      for (int t = 0; t < 6; ++t) {
        const auto& cell = rep.cell(s, t);
        const bool outside = s != t && s != 2 && s != 3 && t != 2 && t != 3;
        const bool gift = cell.kind == trop::ZeroKind::gift;
        c.expect(gift == outside, "gift pattern" + where);
        if (gift) {
          c.expect(cell.gift_witnesses == std::vector<std::pair<int, int>>{{3, 2}}, "gift witness" + where);
        }
      }
    }
    c.expect(rep.gift_count == 12, "gift count" + where);
    c.expect(trop::recover_minimal_family(rep) == std::pair{3, 2}, "indicator does not recover (4,3)" + where);
  }
  c.note("12 gift cells with witness (4,3) in each of 4 pairs");
}

void self_extremals(Check& c) {
  const auto three = trop::exhaustive_self_minimum(3);
  const auto circ = fixtures::matrix(fixtures::kCirculant3);
  c.expect(three.value == 3, "value at n=3 " + std::to_string(three.value));
  bool has_circ = false;
  for (const auto& w : three.witnesses) has_circ = has_circ || w.first == circ;
  c.expect(has_circ, "circulant missing at n=3");
  for (int k = 0; k < 3; ++k) {
    c.expect(trop::FamilySpec::cross(3, k, k).generic() != circ, "circulant is a generic cross");
  }

  Stopwatch clock;
  const auto five = trop::exhaustive_self_minimum(5);
  const double t = clock.seconds();
  std::set<NormalMatrix> want, got;
  for (int k = 0; k < 5; ++k) want.insert(trop::FamilySpec::cross(5, k, k).generic());
  for (const auto& w : five.witnesses) got.insert(w.first);
  c.expect(five.value == 8, "value at n=5 " + std::to_string(five.value));
  c.expect(got == want && five.witness_total == 5, "minimizers at n=5 differ");
  c.expect(t < kSelfFiveSeconds, "n=5 took " + fmt_seconds(t));
  c.note("n=3 value 3 with " + std::to_string(three.witness_total) + " minimizers; n=5 value 8 with " +
         std::to_string(five.witness_total) + " minimizers in " + fmt_seconds(t));
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "inf"; }

void graph_metrics(Check& c) {
  using trop::GraphKind;
  using trop::RelationGraph;
  const auto ortho3 = RelationGraph::build(GraphKind::ortho, 3);
  const auto vnl3 = RelationGraph::build(GraphKind::vnl, 3);
  c.expect(ortho3.girth() == 3, "girth ORTHO(3) " + opt_text(ortho3.girth()));
  c.expect(vnl3.girth() == 3, "girth VNL(3) " + opt_text(vnl3.girth()));
  c.expect(ortho3.is_connected() && ortho3.diameter() == 3, "diameter ORTHO(3) " + opt_text(ortho3.diameter()));

  Stopwatch clock;
  const auto ortho4 = RelationGraph::build(GraphKind::ortho, 4);
  const double t = clock.seconds();
  c.expect(ortho4.is_connected() && ortho4.diameter() == 3, "diameter ORTHO(4) " + opt_text(ortho4.diameter()));
  c.expect(t < kOrthoFourSeconds, "ORTHO(4) build took " + fmt_seconds(t));

  const auto vnl4 = RelationGraph::build(GraphKind::vnl, 4);
  c.expect(vnl3.diameter() == 2, "diameter VNL(3) " + opt_text(vnl3.diameter()));
  c.expect(vnl4.diameter() == 2, "diameter VNL(4) " + opt_text(vnl4.diameter()));
  const auto wnl4 = RelationGraph::build(GraphKind::wnl, 4);
  c.expect(wnl4.diameter() == 2, "diameter WNL(4) " + opt_text(wnl4.diameter()));

  const auto wnl3 = RelationGraph::build(GraphKind::wnl, 3);
  const auto a = fixtures::matrix(fixtures::kWnlFar[0]), b = fixtures::matrix(fixtures::kWnlFar[1]);
  const auto d = wnl3.distance(wnl3.index_of(a), wnl3.index_of(b));
  c.expect(d == 3, "WNL(3) distance " + opt_text(d));
  c.note("ORTHO(4) " + std::to_string(ortho4.vertex_count()) + " vertices, " +
         std::to_string(ortho4.edge_count()) + " edges, built in " + fmt_seconds(t));
}

void property_suites(Check& c) {
  for (const auto& suite : testkit::law_suites()) {
    const auto out = suite.run(kSeed, kPropertyCases);
    c.expect(out.ok(), out.name + ": " + std::to_string(out.failures) + " failures, first " + out.first_failure);
    std::printf("    %-40s %8llu cases, %llu failures\n", out.name.c_str(),
                static_cast<unsigned long long>(out.cases), static_cast<unsigned long long>(out.failures));
  }
  c.note(std::to_string(testkit::law_suites().size()) + " suites");
}

void oracle_products(Check& c) {
  const auto out = testkit::product_matches_oracle(kSeed, kOracleProducts);
  c.expect(out.ok(), std::to_string(out.failures) + " mismatches, first " + out.first_failure);
  c.note(std::to_string(out.cases) + " products");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "exhaustive minimal pair weight for n = 2, 3, 4", exhaustive_table},
      {2, "bounded proof of the minimum at n = 5", bounded_five},
      {3, "minimal pairs at n = 2", order_two_census},
      {4, "generic family pairs for n = 7..10", forward_direction},
      {5, "minimal pairs outside the generic families", outside_pairs},
      {6, "generic family pairs at (4,3), n = 6", family_pairs_at_six},
      {7, "self-orthogonal minimizers at n = 3 and 5", self_extremals},
      {8, "relation graph metrics", graph_metrics},
      {9, "property suites", property_suites},
      {10, "bit-parallel product against the max-plus oracle", oracle_products},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    Stopwatch clock;
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.ok();
    failed += !ok;
    std::printf("%s %2d  %s  [%s]  %s\n", ok ? "PASS" : "FAIL", cr.id, cr.title, fmt_seconds(clock.seconds()).c_str(),
                ok ? check.notes().c_str() : check.failure().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
