#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qfold/solutions.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

using namespace qfold;

namespace {

using Tuple4 = std::array<std::int64_t, 4>;

// Independent of the search path: plain nested loops in 64-bit arithmetic.
// Safe for bounds up to ~50 with the t=3 coefficients (|B3| * 50^5 < 2^63).
std::set<Tuple4> quadruple_loop_oracle(const GtInstance& inst, long bound01,
                                       long bound23) {
  std::array<std::int64_t, 4> B;
  for (int i = 0; i < 4; ++i) {
    REQUIRE(inst.B[i].fits_slong_p());
    B[i] = inst.B[i].get_si();
  }
  REQUIRE(inst.b.fits_slong_p());
  const std::int64_t b = inst.b.get_si();

  auto pow5 = [](std::int64_t x) { return x * x * x * x * x; };
  std::set<Tuple4> out;
  for (long x0 = -bound01; x0 <= bound01; ++x0)
    for (long x1 = -bound01; x1 <= bound01; ++x1)
      for (long x2 = -bound23; x2 <= bound23; ++x2)
        for (long x3 = -bound23; x3 <= bound23; ++x3) {
          if (x0 == 0 || x1 == 0 || x2 == 0 || x3 == 0) continue;
          if (B[0] * pow5(x0) + B[1] * pow5(x1) + B[2] * pow5(x2) +
                  B[3] * pow5(x3) ==
              b)
            out.insert({x0, x1, x2, x3});
        }
  return out;
}

std::set<Tuple4> as_tuples(const std::vector<SolutionRecord>& records) {
  std::set<Tuple4> out;
  for (const auto& r : records) {
    REQUIRE(r.X.size() == 4);
    Tuple4 t;
    for (int i = 0; i < 4; ++i) t[i] = r.X[i].get_si();
    out.insert(t);
  }
  return out;
}

}  // namespace

TEST_CASE("instance construction") {
  const GtInstance reduced = gt_instance(3, true);
  CHECK(reduced.B == std::array<BigInt, 4>{5, -5, -4, -1889280});
  CHECK(reduced.b == 400000);
  CHECK(reduced.b == BigInt(1 << 7) * 3125);

  const GtInstance raw = gt_instance(3, false);
  CHECK(raw.B == std::array<BigInt, 4>{10, -10, -8, -3778560});
  CHECK(raw.b == 800000);

  CHECK(gt_instance(5, false).b == 285153024);

  CHECK_THROWS_AS(gt_instance(4, true), std::domain_error);
  CHECK_THROWS_AS(gt_instance(1, true), std::domain_error);
  CHECK_THROWS_AS(gt_instance(-1, false), std::domain_error);
}

TEST_CASE("generated solutions reproduce the known small tuples") {
  const GtInstance inst = gt_instance(3, true);

  const SolutionRecord first = gt_solution(inst, 1);
  CHECK(first.X == std::vector<BigInt>{37526, 6982, 38170, 1909});
  CHECK(first.verified);
  CHECK(first.n == 1);
  CHECK(first.u == 83);
  CHECK(first.v == 23);

  const SolutionRecord second = gt_solution(inst, 2);
  CHECK(second.X == std::vector<BigInt>{183773534, 34226638, 186933610, 9346681});

  // explicit re-evaluation against the reduced instance
  CHECK(5 * fifth_power(BigInt(37526)) - 5 * fifth_power(BigInt(6982)) -
            4 * fifth_power(BigInt(38170)) -
            1889280 * fifth_power(BigInt(1909)) ==
        400000);

  CHECK_THROWS_AS(gt_solution(inst, 0), std::domain_error);
}

TEST_CASE("generator invariants across instances") {
  for (long t : {-3L, 3L, 5L, 7L, 9L, 11L}) {
    for (bool reduced : {false, true}) {
      const GtInstance inst = gt_instance(t, reduced);
      GtGenerator gen(inst);
      for (unsigned n = 1; n <= 25; ++n) {
        const SolutionRecord rec = gen.next();  // next() re-verifies G_t(X) = b
        CHECK(rec.n == n);
        CHECK(rec.verified);
        CHECK(verify_impeq(t, rec.u, rec.v));
        CHECK(eval_gt(inst, {rec.X[0], rec.X[1], rec.X[2], rec.X[3]}) == inst.b);
      }
    }
  }
}

TEST_CASE("coordinate growth is geometric") {
  GtGenerator gen(gt_instance(3, true));
  std::vector<double> bits;
  for (int n = 1; n <= 16; ++n) {
    const SolutionRecord rec = gen.next();
    BigInt largest = 0;
    for (const auto& x : rec.X) largest = std::max(largest, BigInt(abs(x)));
    bits.push_back(static_cast<double>(mpz_sizeinbase(largest.get_mpz_t(), 2)));
  }
  // successive bit-length increments settle to a constant (~ 2 log2 of the
  // unit), the mechanism behind the logarithmic solution count
  for (std::size_t i = 8; i + 1 < bits.size(); ++i) {
    const double delta = bits[i + 1] - bits[i];
    const double prev = bits[i] - bits[i - 1];
    CHECK(std::abs(delta - prev) <= 2.0);
  }
}

TEST_CASE("five-variable stream, recurrence source") {
  const auto records = vpoints(3, VPointSource::pell, 2);
  REQUIRE(records.size() == 2);
  CHECK(records[0].X == std::vector<BigInt>{1909, 37526, 6982, -10, 38170});
  CHECK(records[0].X[3] == -10);
  CHECK(records[0].verified);
  CHECK(records[0].nontrivial);
  CHECK(records[1].n == 2);

  CHECK(vpoints(3, VPointSource::pell, 0).empty());
  CHECK_THROWS_AS(vpoints(4, VPointSource::pell, 1), std::domain_error);
}

TEST_CASE("five-variable stream, grid source") {
  const auto records = vpoints(2, VPointSource::grid, 4);
  REQUIRE(records.size() == 4);
  // shell 1, canonical representatives in row-major order
  CHECK(records[0].u == 0);
  CHECK(records[0].v == 1);
  CHECK(records[0].X == std::vector<BigInt>{0, 2, 2, -2, -2});
  CHECK(!records[0].nontrivial);  // gcd 2 and vanishing sub-sums

  CHECK(records[3].u == 1);
  CHECK(records[3].v == 1);
  CHECK(records[3].X == std::vector<BigInt>{1, 7, 1, -5, 5});
  CHECK(records[3].verified);
  CHECK(records[3].nontrivial);

  // only coprime pairs are enumerated
  const auto more = vpoints(2, VPointSource::grid, 12);
  for (const auto& r : more) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t());
    CHECK(g == 1);
    CHECK(eval_F(family_coeffs(2), QuinticPoint{{r.X[0], r.X[1], r.X[2], r.X[3], r.X[4]}}) == 0);
  }
}

TEST_CASE("box search finds the known solutions in a small box") {
  const GtInstance inst = gt_instance(3, true);
  const BoxSearchResult res = box_search(inst, 20, 20);
  REQUIRE(res.solutions.size() == 2);
  CHECK(res.solutions[0].X == std::vector<BigInt>{2, -14, 10, 1});
  CHECK(res.solutions[1].X == std::vector<BigInt>{14, -2, 10, 1});
  CHECK(res.zero_coordinate_skipped > 0);  // the X3 = 0 family is excluded

  // spot check one tuple by hand
  CHECK(5 * 32 - 5 * (-537824LL) - 4 * 100000 - 1889280 == 400000);
}

TEST_CASE("box search equals the quadruple loop on tiny boxes") {
  const GtInstance inst = gt_instance(3, true);
  for (const auto& [b01, b23] : {std::pair{30L, 30L}, {25L, 12L}, {9L, 9L}}) {
    const auto got = as_tuples(box_search(inst, b01, b23).solutions);
    const auto expected = quadruple_loop_oracle(inst, b01, b23);
    CHECK(got == expected);
  }
}

TEST_CASE("box search is deterministic across thread counts") {
  const GtInstance inst = gt_instance(3, true);
  const auto single = box_search(inst, 40, 40, 1);
  const auto multi = box_search(inst, 40, 40, 4);
  CHECK(single.solutions == multi.solutions);
  CHECK(single.zero_coordinate_skipped == multi.zero_coordinate_skipped);
}

TEST_CASE("family counting bound") {
  CHECK(p_lower_bound(65279) == 0);
  CHECK(p_lower_bound(65280) == 1);
  CHECK(p_lower_bound(100000000) == 2);  // t = 2 and t = 4
  CHECK(p_lower_bound(1) == 0);
  CHECK_THROWS_AS(p_lower_bound(0), std::domain_error);

  BigInt previous = 0;
  for (const auto& n : {BigInt(10), BigInt(100000), pow_ui(10, 10), pow_ui(10, 14)}) {
    const std::uint64_t count = p_lower_bound(n);
    CHECK(count >= previous);
    previous = count;
  }
}

TEST_CASE("generated-solution counting") {
  const GtInstance inst = gt_instance(3, true);
  CHECK(cbb_count(inst, 1908).count == 0);
  CHECK(cbb_count(inst, 38169).count == 0);  // first tuple's max coordinate is 38170
  CHECK(cbb_count(inst, 38170).count == 1);
  CHECK(cbb_count(inst, 38170).positive == 1);

  std::uint64_t previous = 0;
  for (int k = 4; k <= 20; k += 2) {
    const std::uint64_t count = cbb_count(inst, pow_ui(10, k)).count;
    CHECK(count >= previous);
    previous = count;
  }

  // frozen counts (cross-checked against an independent recurrence script)
  CHECK(cbb_count(inst, pow_ui(10, 8)).count == 1);
  CHECK(cbb_count(inst, pow_ui(10, 16)).count == 4);
  CHECK(cbb_count(inst, pow_ui(10, 16)).positive == 4);
}
