#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "recfront/point.hpp"
#include "recfront/record_set.hpp"
#include "recfront/montecarlo.hpp"
#include "recfront/rng.hpp"

using namespace recfront;

namespace {

// quadratic-time reference: maxima of the full point list under strict dominance
std::vector<std::vector<double>> naive_maxima(const std::vector<std::vector<double>>& pts) {
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (i == j) continue;
      bool all = true;
      for (std::size_t k = 0; k < pts[i].size(); ++k) all = all && pts[i][k] < pts[j][k];
      dominated = all;
    }
    if (!dominated) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<double>> sorted_records(const RecordSet& rs) {
  std::vector<std::vector<double>> out;
  for (const Point& p : rs.records()) out.push_back(p.coords());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("dominance predicates") {
  const Point a({1, 2, 3}), b({2, 3, 4}), c({2, 1, 5});
  CHECK(strictly_dominates(a, b));
  CHECK_FALSE(strictly_dominates(b, a));
  CHECK_FALSE(strictly_dominates(a, a));  // irreflexive
  CHECK_FALSE(strictly_dominates(a, c));  // incomparable
  CHECK_FALSE(strictly_dominates(c, a));
  CHECK(weakly_leq(a, a));
  CHECK(weakly_leq(a, b));
  CHECK_THROWS_AS((void)strictly_dominates(a, Point({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS((void)Point({1.0, -0.5}), std::invalid_argument);
}

TEST_CASE("record set equals naive maxima on random streams") {
  for (int d = 1; d <= 5; ++d) {
    auto eng = replication_engine(101, static_cast<std::uint64_t>(d));
    RecordSet rs(static_cast<std::size_t>(d));
    std::vector<std::vector<double>> all;
    for (int i = 0; i < 400; ++i) {
      std::vector<double> x(static_cast<std::size_t>(d));
      for (double& v : x) v = sample_exponential(eng);
      all.push_back(x);
      rs.insert(std::span<const double>(x));
      if (i % 97 == 0) CHECK(sorted_records(rs) == naive_maxima(all));
    }
    CHECK(sorted_records(rs) == naive_maxima(all));
    CHECK(rs.epoch() == 400);
  }
}

TEST_CASE("linear and sorted d=2 insertion agree") {
  auto eng = replication_engine(102, 0);
  RecordSet lin(2, TiePolicy::Strict, InsertAlgorithm::LinearScan);
  RecordSet srt(2, TiePolicy::Strict, InsertAlgorithm::SortedD2);
  for (int i = 0; i < 3000; ++i) {
    std::vector<double> x{sample_exponential(eng), sample_exponential(eng)};
    const auto a = lin.insert(std::span<const double>(x));
    const auto b = srt.insert(std::span<const double>(x));
    CHECK(a.was_record == b.was_record);
    CHECK(a.displaced.size() == b.displaced.size());
  }
  CHECK(sorted_records(lin) == sorted_records(srt));
  const auto fa = lin.frontier_record_stats();
  const auto fb = srt.frontier_record_stats();
  CHECK(fa.f_plus == fb.f_plus);
  CHECK(fa.hat_f_minus == fb.hat_f_minus);
  CHECK(fa.leading == fb.leading);
}

TEST_CASE("insertion outcome reports displaced records") {
  RecordSet rs(2);
  CHECK(rs.insert(Point({1, 4})).was_record);
  CHECK(rs.insert(Point({4, 1})).was_record);
  const auto out = rs.insert(Point({5, 5}));
  CHECK(out.was_record);
  CHECK(out.displaced.size() == 2);
  CHECK(rs.size() == 1);
  const auto dup = rs.insert(Point({2, 2}));  // strictly below (5,5)
  CHECK_FALSE(dup.was_record);
  CHECK(rs.size() == 1);
}

TEST_CASE("rho_truncated counts record sums") {
  RecordSet rs(2);
  rs.insert(Point({1, 4}));   // sum 5
  rs.insert(Point({4, 1}));   // sum 5
  rs.insert(Point({3, 3}));   // sum 6
  CHECK(rs.size() == 3);
  CHECK(rs.rho_truncated(4.9) == 0);
  CHECK(rs.rho_truncated(5.0) == 2);  // boundary is inclusive
  CHECK(rs.rho_truncated(6.0) == 3);
  CHECK(rs.rho_truncated(std::numeric_limits<double>::infinity()) == 3);
}

TEST_CASE("frontier record stats identify leading point and extremes") {
  RecordSet rs(3);
  rs.insert(Point({6, 1, 1}));    // sum 8
  rs.insert(Point({1, 2, 4}));    // sum 7
  rs.insert(Point({2, 3, 0.5}));  // sum 5.5
  const auto st = rs.frontier_record_stats();
  CHECK(st.rho == 3);
  CHECK(st.f_plus == 8.0);
  CHECK(st.hat_f_minus == 5.5);
  CHECK(st.leading == Point({6, 1, 1}));
  CHECK_THROWS_AS((void)RecordSet(2).frontier_record_stats(), std::invalid_argument);
}

TEST_CASE("record-setting region membership") {
  RecordSet rs(2);
  CHECK(rs.rs_contains(Point({0, 0})));  // RS_0 is the whole orthant
  rs.insert(Point({2, 3}));
  CHECK_FALSE(rs.rs_contains(Point({1, 1})));
  CHECK(rs.rs_contains(Point({2, 0})));  // equal coordinate blocks strict dominance
  CHECK(rs.rs_contains(Point({5, 0})));
  CHECK(rs.rs_contains(Point({2, 3})));
}

TEST_CASE("tie policy: strict throws, permissive proceeds") {
  RecordSet strict(2);
  strict.insert(Point({1, 2}));
  CHECK_THROWS_AS(strict.insert(Point({1, 5})), TieError);

  RecordSet perm(2, TiePolicy::Permissive);
  perm.insert(Point({1, 2}));
  const auto out = perm.insert(Point({1, 5}));  // tie in coordinate 0: incomparable
  CHECK(out.was_record);
  CHECK(perm.size() == 2);

  // a tie never produces dominance in either direction
  RecordSet perm2(2, TiePolicy::Permissive);
  perm2.insert(Point({2, 2}));
  CHECK(perm2.insert(Point({2, 3})).was_record);
  CHECK(perm2.size() == 2);
}

TEST_CASE("min record sum can dip when a new record undercuts the frontier") {
  // (6, 0.1) is not dominated by (5, 5) yet carries a smaller coordinate sum,
  // so the minimum over current records is not monotone along a path
  RecordSet rs(2);
  rs.insert(Point({5, 5}));
  CHECK(rs.frontier_record_stats().hat_f_minus == 10.0);
  const auto out = rs.insert(Point({6, 0.1}));
  CHECK(out.was_record);
  CHECK(out.displaced.empty());
  CHECK(rs.size() == 2);
  CHECK(rs.frontier_record_stats().hat_f_minus == 6.1);
}

TEST_CASE("epochs track when each record arrived") {
  auto eng = replication_engine(103, 0);
  RecordSet rs(2);
  for (int i = 0; i < 200; ++i) rs.insert(sample_point(eng, 2));
  const auto& ep = rs.insertion_epochs();
  CHECK(ep.size() == rs.size());
  for (const auto e : ep) {
    CHECK(e >= 1);
    CHECK(e <= 200);
  }
}
