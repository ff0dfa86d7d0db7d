#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "recfront/generators.hpp"
#include "recfront/record_set.hpp"
#include "recfront/montecarlo.hpp"
#include "recfront/rng.hpp"

using namespace recfront;

TEST_CASE("empty record set generates the origin") {
  RecordSet rs(3);
  const GeneratorSet gs = all_generators(rs);
  CHECK(gs.gamma() == 1);
  CHECK(gs.counts_by_dimension()[0] == 1);
  const auto g = gs.all();
  CHECK(g[0].point == Point({0, 0, 0}));
  CHECK(g[0].dimension == 0);
}

TEST_CASE("single record in d=2 generates the two axis points") {
  RecordSet rs(2);
  rs.insert(Point({3, 5}));
  const GeneratorSet gs = all_generators(rs);
  CHECK(gs.gamma() == 2);
  GeneratorSet want(2, 1);
  want.add(0x1u, Point({3, 0}));
  want.add(0x2u, Point({0, 5}));
  CHECK(gs == want);
}

TEST_CASE("two-record worked example in d=4") {
  RecordSet rs(4);
  rs.insert(Point({2, 8, 3, 7}));
  rs.insert(Point({5, 1, 4, 6}));
  const GeneratorSet gs = all_generators(rs);
  CHECK(gs.gamma() == 8);

  GeneratorSet want(4, 2);
  want.add(0x1u, Point({5, 0, 0, 0}));
  want.add(0x2u, Point({0, 8, 0, 0}));
  want.add(0x4u, Point({0, 0, 4, 0}));
  want.add(0x8u, Point({0, 0, 0, 7}));
  want.add(0x3u, Point({2, 1, 0, 0}));
  want.add(0x9u, Point({2, 0, 0, 6}));
  want.add(0x6u, Point({0, 1, 3, 0}));
  want.add(0xCu, Point({0, 0, 3, 6}));
  CHECK(gs == want);
  CHECK(gs.counts_by_dimension() == std::vector<std::size_t>{0, 4, 4, 0, 0});
}

TEST_CASE("generator count identities in d=2 and d=3") {
  for (const int d : {2, 3}) {
    auto eng = replication_engine(210, static_cast<std::uint64_t>(d));
    RecordSet rs(static_cast<std::size_t>(d));
    for (int i = 0; i < 500; ++i) {
      rs.insert(sample_point(eng, d));
      if (i % 50 != 0) continue;
      const GeneratorSet gs = all_generators(rs);
      const std::size_t rho = rs.size();
      CHECK(gs.gamma() == (d == 2 ? rho + 1 : 2 * rho + 1));
    }
  }
}

TEST_CASE("brute force agreement on random instances") {
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    auto eng = replication_engine(211, static_cast<std::uint64_t>(i));
    const int d = 2 + static_cast<int>(eng() % 3);
    const int n = 1 + static_cast<int>(eng() % 40);
    RecordSet rs(static_cast<std::size_t>(d));
    for (int j = 0; j < n; ++j) rs.insert(sample_point(eng, d));
    CHECK(all_generators(rs) == brute_force_generators(rs));
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("every generator lies in the region and is minimal there") {
  auto eng = replication_engine(212, 7);
  RecordSet rs(3);
  for (int j = 0; j < 300; ++j) rs.insert(sample_point(eng, 3));
  const GeneratorSet gs = all_generators(rs);
  for (const Generator& g : gs.all()) {
    CHECK(rs.rs_contains(g.point));
    // strictly reducing any nonzero coordinate exits the region
    for (const std::size_t j : g.support) {
      std::vector<double> probe = g.point.coords();
      probe[j] *= 1.0 - 1e-9;
      CHECK_FALSE(rs.rs_contains(Point(probe)));
    }
    CHECK(g.dimension == g.support.size());
    for (const std::size_t j : g.support) CHECK(g.point[j] > 0.0);
  }
}

TEST_CASE("region equals union of generator up-sets") {
  auto eng = replication_engine(213, 1);
  RecordSet rs(3);
  for (int j = 0; j < 60; ++j) rs.insert(sample_point(eng, 3));
  const GeneratorSet gs = all_generators(rs);
  const auto gens = gs.all();
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> x{4 * sample_exponential(eng), 4 * sample_exponential(eng),
                          4 * sample_exponential(eng)};
    const Point p(x);
    bool above = false;
    for (const Generator& g : gens) above = above || weakly_leq(g.point, p);
    CHECK(above == rs.rs_contains(p));
  }
}

TEST_CASE("trailing summary finds the minimum generator sum") {
  RecordSet rs(4);
  rs.insert(Point({2, 8, 3, 7}));
  rs.insert(Point({5, 1, 4, 6}));
  const GeneratorSet gs = all_generators(rs);
  const TrailingSummary ts = trailing_summary(gs);
  CHECK(ts.f_minus == doctest::Approx(3.0).epsilon(1e-15));  // (2,1,0,0)
  CHECK(ts.trailing == Point({2, 1, 0, 0}));

  // F- <= hF- on random instances
  auto eng = replication_engine(214, 0);
  for (int i = 0; i < 40; ++i) {
    RecordSet r2(3);
    const int n = 1 + static_cast<int>(eng() % 200);
    for (int j = 0; j < n; ++j) r2.insert(sample_point(eng, 3));
    const auto st = r2.frontier_record_stats();
    const auto t2 = trailing_summary(all_generators(r2));
    CHECK(t2.f_minus <= st.hat_f_minus);
  }
}

TEST_CASE("gamma_truncated counts generator sums inclusively") {
  RecordSet rs(4);
  rs.insert(Point({2, 8, 3, 7}));
  rs.insert(Point({5, 1, 4, 6}));
  const GeneratorSet gs = all_generators(rs);
  CHECK(gamma_truncated(gs, 2.9) == 0);
  CHECK(gamma_truncated(gs, 3.0) == 1);   // (2,1,0,0)
  CHECK(gamma_truncated(gs, 4.0) == 3);   // + (0,1,3,0), (0,0,4,0)
  CHECK(gamma_truncated(gs, 100.0) == 8);
}

TEST_CASE("projection keeps order and coordinates") {
  const std::vector<Point> pts{Point({1, 2, 3}), Point({4, 5, 6})};
  const auto proj = project_records(pts, {2, 0});
  CHECK(proj[0] == Point({3, 1}));
  CHECK(proj[1] == Point({6, 4}));
}

TEST_CASE("interior generators reject tied minima") {
  // two records sharing the coordinate-wise minimum in coordinate 0
  const std::vector<Point> recs{Point({1, 5}), Point({1, 7}), Point({3, 2})};
  CHECK_THROWS_AS((void)interior_generators(recs), TieError);
  // a runner-up tie away from the minimum is fine: coordinate 0 holds 5,5,3
  const std::vector<Point> ok{Point({5, 9, 1}), Point({5, 1, 9}), Point({3, 4, 4})};
  const auto gens = interior_generators(ok);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == Point({3, 1, 1}));
}

TEST_CASE("zero coordinates in records are rejected") {
  RecordSet rs(2, TiePolicy::Permissive);
  rs.insert(Point({0, 3}));
  CHECK_THROWS_AS((void)all_generators(rs), std::invalid_argument);
}
