#include "qfold/solutions.hpp"

#include <algorithm>
#include <thread>
#include <utility>

namespace qfold {

namespace {

BigInt abs_big(const BigInt& x) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

BigInt max_abs(const std::vector<BigInt>& xs) {
  BigInt m = 0;
  for (const auto& x : xs) m = std::max(m, abs_big(x));
  return m;
}

}  // namespace

GtInstance gt_instance(const BigInt& t, bool reduced) {
  if (mpz_even_p(t.get_mpz_t())) throw std::domain_error("G_t requires odd t");
  if (abs_big(t) < 3) throw std::domain_error("G_t requires |t| >= 3");

  const BigInt t2 = t * t;
  GtInstance inst;
  inst.t = t;
  inst.B = {t2 + 1, -(t2 + 1), 1 - t2, 64 * t2 * (1 - pow_ui(t, 8))};
  inst.b = (t2 - 1) * pow_ui(t2 + 1, 5);
  inst.reduced = reduced;
  if (reduced) {
    BigInt g = 0;
    for (const auto& c : inst.B) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (auto& c : inst.B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (mpz_divisible_p(inst.b.get_mpz_t(), g.get_mpz_t()) == 0)
      throw integrity_error("content of B does not divide b");
    mpz_divexact(inst.b.get_mpz_t(), inst.b.get_mpz_t(), g.get_mpz_t());
  }
  return inst;
}

BigInt eval_gt(const GtInstance& inst, const std::array<BigInt, 4>& X) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < 4; ++i) sum += inst.B[i] * fifth_power(X[i]);
  return sum;
}

GtGenerator::GtGenerator(GtInstance inst)
    : inst_(std::move(inst)), orbit_(make_orbit(make_params(inst_.t))) {}

SolutionRecord GtGenerator::next() {
  orbit_ = step(orbit_);
  const auto [u, v] = uv_at(orbit_);
  if (!verify_impeq(inst_.t, u, v))
    throw integrity_error("recovered (u_n, v_n) fail s3(u,v) = -(t^2+1)");

  const QuinticPoint p = point_at(inst_.t, u, v);
  SolutionRecord rec;
  rec.origin = SolutionRecord::Origin::generator;
  rec.X = {p.X[1], p.X[2], p.X[4], p.X[0]};
  rec.n = orbit_.n;
  rec.u = u;
  rec.v = v;
  if (eval_gt(inst_, {rec.X[0], rec.X[1], rec.X[2], rec.X[3]}) != inst_.b)
    throw integrity_error("generated tuple fails G_t(X) = b");
  rec.verified = true;
  return rec;
}

SolutionRecord gt_solution(const GtInstance& inst, unsigned n) {
  if (n < 1) throw std::domain_error("generator index starts at 1");
  GtGenerator gen(inst);
  SolutionRecord rec = gen.next();
  for (unsigned i = 1; i < n; ++i) rec = gen.next();
  return rec;
}

namespace {

SolutionRecord verified_vpoint(const CoefficientVector& A, const BigInt& t,
                               const BigInt& u, const BigInt& v,
                               SolutionRecord::Origin origin, unsigned n) {
  const QuinticPoint p = point_at(t, u, v);
  const SubsumAudit audit = audit_point(A, p);
  if (!audit.on_variety())
    throw integrity_error("curve point fails F_A = 0 at (u,v) = (" + to_string(u) +
                          ", " + to_string(v) + ")");
  SolutionRecord rec;
  rec.origin = origin;
  rec.X.assign(p.X.begin(), p.X.end());
  rec.n = n;
  rec.u = u;
  rec.v = v;
  rec.verified = true;
  rec.nontrivial = audit.nontrivial();
  return rec;
}

}  // namespace

void vpoint_stream(const BigInt& t, VPointSource source, std::uint64_t limit,
                   const std::function<void(const SolutionRecord&)>& sink) {
  const CoefficientVector A = family_coeffs(t);
  if (limit == 0) return;

  if (source == VPointSource::pell) {
    PellOrbit orbit = make_orbit(make_params(t));
    for (std::uint64_t i = 0; i < limit; ++i) {
      orbit = step(orbit);
      const auto [u, v] = uv_at(orbit);
      sink(verified_vpoint(A, t, u, v, SolutionRecord::Origin::generator, orbit.n));
    }
    return;
  }

  // Grid: coprime (u, v) by increasing max-norm, canonical sign
  // representative (u > 0, or u = 0 and v > 0), row-major within a shell.
  std::uint64_t emitted = 0;
  for (BigInt shell = 1;; ++shell) {
    for (BigInt u = 0; u <= shell; ++u) {
      for (BigInt v = -shell; v <= shell; ++v) {
        if (std::max(u, abs_big(v)) != shell) continue;
        if (u == 0 && v <= 0) continue;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (g != 1) continue;
        sink(verified_vpoint(A, t, u, v, SolutionRecord::Origin::search, 0));
        if (++emitted == limit) return;
      }
    }
  }
}

std::vector<SolutionRecord> vpoints(const BigInt& t, VPointSource source,
                                    std::uint64_t limit) {
  std::vector<SolutionRecord> out;
  out.reserve(std::min<std::uint64_t>(limit, 1024));
  vpoint_stream(t, source, limit, [&](const SolutionRecord& r) { out.push_back(r); });
  return out;
}

namespace {

struct TableEntry {
  BigInt value;  // b - B2 X2^5 - B3 X3^5
  long x2, x3;
};

long checked_long_bound(const BigInt& bound, const char* name) {
  if (bound < 1) throw std::domain_error(std::string(name) + " must be >= 1");
  if (!bound.fits_slong_p() || bound.get_si() > 1'000'000L)
    throw std::domain_error(std::string(name) + " is too large for an in-memory box");
  return bound.get_si();
}

/// Fifth powers of -bound..bound, indexed by x + bound.
std::vector<BigInt> fifth_power_row(long bound) {
  std::vector<BigInt> row(2 * bound + 1);
  for (long x = -bound; x <= bound; ++x) row[x + bound] = fifth_power(BigInt(x));
  return row;
}

}  // namespace

BoxSearchResult box_search(const GtInstance& inst, const BigInt& bound01,
                           const BigInt& bound23, unsigned threads) {
  const long b01 = checked_long_bound(bound01, "bound01");
  const long b23 = checked_long_bound(bound23, "bound23");
  if (threads == 0) threads = 1;

  const auto fifth01 = fifth_power_row(b01);
  const auto fifth23 = fifth_power_row(b23);

  // Range of the scan side B0 X0^5 + B1 X1^5; table entries outside it can
  // never match and are dropped up front.
  const auto side_range = [&](const BigInt& coeff, const std::vector<BigInt>& row) {
    BigInt lo = coeff * row.front(), hi = coeff * row.back();
    if (lo > hi) std::swap(lo, hi);
    return std::pair{lo, hi};
  };
  const auto [lo0, hi0] = side_range(inst.B[0], fifth01);
  const auto [lo1, hi1] = side_range(inst.B[1], fifth01);
  const BigInt scan_min = lo0 + lo1, scan_max = hi0 + hi1;

  std::vector<TableEntry> table;
  for (long x2 = -b23; x2 <= b23; ++x2) {
    const BigInt part = inst.b - inst.B[2] * fifth23[x2 + b23];
    for (long x3 = -b23; x3 <= b23; ++x3) {
      BigInt value = part - inst.B[3] * fifth23[x3 + b23];
      if (value < scan_min || value > scan_max) continue;
      table.push_back(TableEntry{std::move(value), x2, x3});
    }
  }
  std::sort(table.begin(), table.end(),
            [](const TableEntry& a, const TableEntry& b) { return a.value < b.value; });

  BoxSearchResult result;
  result.table_entries = table.size();
  result.scan_pairs =
      static_cast<std::uint64_t>(2 * b01 + 1) * static_cast<std::uint64_t>(2 * b01 + 1);

  const long span = 2 * b01 + 1;
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(span));
  std::vector<std::vector<SolutionRecord>> found(workers);
  std::vector<std::uint64_t> skipped(workers, 0);

  auto scan_rows = [&](unsigned w, long x0_begin, long x0_end) {
    BigInt value;
    for (long x0 = x0_begin; x0 < x0_end; ++x0) {
      const BigInt part = inst.B[0] * fifth01[x0 + b01];
      for (long x1 = -b01; x1 <= b01; ++x1) {
        value = part + inst.B[1] * fifth01[x1 + b01];
        auto lo = std::lower_bound(
            table.begin(), table.end(), value,
            [](const TableEntry& e, const BigInt& v) { return e.value < v; });
        for (auto it = lo; it != table.end() && it->value == value; ++it) {
          if (x0 == 0 || x1 == 0 || it->x2 == 0 || it->x3 == 0) {
            ++skipped[w];
            continue;
          }
          SolutionRecord rec;
          rec.origin = SolutionRecord::Origin::search;
          rec.X = {BigInt(x0), BigInt(x1), BigInt(it->x2), BigInt(it->x3)};
          if (eval_gt(inst, {rec.X[0], rec.X[1], rec.X[2], rec.X[3]}) != inst.b)
            throw integrity_error("search hit fails re-evaluation");
          rec.verified = true;
          found[w].push_back(std::move(rec));
        }
      }
    }
  };

  if (workers == 1) {
    scan_rows(0, -b01, b01 + 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const long chunk = (span + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const long begin = -b01 + chunk * static_cast<long>(w);
      const long end = std::min(begin + chunk, b01 + 1);
      if (begin >= end) break;
      pool.emplace_back([&, w, begin, end] {
        try {
          scan_rows(w, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (unsigned w = 0; w < workers; ++w) {
    result.zero_coordinate_skipped += skipped[w];
    std::move(found[w].begin(), found[w].end(), std::back_inserter(result.solutions));
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const SolutionRecord& a, const SolutionRecord& b) { return a.X < b.X; });
  result.solutions.erase(
      std::unique(result.solutions.begin(), result.solutions.end(),
                  [](const SolutionRecord& a, const SolutionRecord& b) { return a.X == b.X; }),
      result.solutions.end());
  return result;
}

std::uint64_t p_lower_bound(const BigInt& N) {
  if (N < 1) throw std::domain_error("N must be >= 1");
  std::uint64_t count = 0;
  for (BigInt t = 2;; t += 2) {
    if (64 * t * t * (pow_ui(t, 8) - 1) > N) break;
    ++count;
  }
  return count;
}

CbbCount cbb_count(const GtInstance& inst, const BigInt& N) {
  if (N < 1) throw std::domain_error("N must be >= 1");
  CbbCount result;
  GtGenerator gen(inst);
  for (;;) {
    const SolutionRecord rec = gen.next();
    if (max_abs(rec.X) > N) break;
    ++result.count;
    if (std::all_of(rec.X.begin(), rec.X.end(), [](const BigInt& x) { return x > 0; }))
      ++result.positive;
  }
  return result;
}

}  // namespace qfold
