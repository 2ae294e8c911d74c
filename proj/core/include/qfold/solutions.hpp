#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "qfold/family.hpp"
#include "qfold/pell.hpp"

namespace qfold {

/// The four-variable diagonal equation
///   B0 X0^5 + B1 X1^5 + B2 X2^5 + B3 X3^5 = b
/// with B = (t^2+1, -(t^2+1), 1-t^2, 64 t^2 (1-t^8)) and b = (t^2-1)(t^2+1)^5.
/// For odd t the entries share the factor 2; `reduced` divides it out.
struct GtInstance {
  BigInt t;
  std::array<BigInt, 4> B;
  BigInt b;
  bool reduced = false;
};

GtInstance gt_instance(const BigInt& t, bool reduced);

BigInt eval_gt(const GtInstance& inst, const std::array<BigInt, 4>& X);

/// A solution tuple with provenance. `verified` means the defining equation
/// was re-evaluated on the stored coordinates, never inherited.
struct SolutionRecord {
  enum class Origin { generator, search, external };

  Origin origin = Origin::external;
  std::vector<BigInt> X;  // 4 coordinates (G_t) or 5 (the threefold)
  unsigned n = 0;         // generator index, when origin == generator
  BigInt u, v;            // curve parameters, when known
  bool verified = false;
  bool nontrivial = false;  // 5-tuple records only

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// Incremental generator of solutions of G_t(X) = b: index n corresponds to
/// n multiplications of the Pell base solution by the fundamental unit, and
/// the tuple is (s1, s2, s4, s0) evaluated at the recovered (u_n, v_n).
class GtGenerator {
public:
  explicit GtGenerator(GtInstance inst);

  const GtInstance& instance() const { return inst_; }
  /// Record for the next index (1, 2, ...). Every emission re-verifies both
  /// G_t(X) = b and s3(u_n, v_n) = -(t^2+1); failures raise integrity_error.
  SolutionRecord next();

private:
  GtInstance inst_;
  PellOrbit orbit_;
};

/// One-shot form of the generator.
SolutionRecord gt_solution(const GtInstance& inst, unsigned n);

enum class VPointSource { pell, grid };

/// Streams verified 5-tuples on the family threefold for parameter t.
///   pell: the points at (u_n, v_n) from the norm-equation recurrence
///         (odd t only, as the recurrence requires);
///   grid: points at coprime (u, v) enumerated in increasing max-norm,
///         one representative per sign pair (forms are quadratic, so
///         (u,v) and (-u,-v) give the same point).
/// Each record is re-verified with eval_F and carries its nontriviality flag.
void vpoint_stream(const BigInt& t, VPointSource source, std::uint64_t limit,
                   const std::function<void(const SolutionRecord&)>& sink);

std::vector<SolutionRecord> vpoints(const BigInt& t, VPointSource source,
                                    std::uint64_t limit);

struct BoxSearchResult {
  std::vector<SolutionRecord> solutions;  // sorted lexicographically, unique
  std::uint64_t table_entries = 0;        // (X2, X3) cells kept after range pruning
  std::uint64_t scan_pairs = 0;           // (X0, X1) pairs scanned
  std::uint64_t zero_coordinate_skipped = 0;
};

/// Complete search of the box |X0|,|X1| <= bound01, |X2|,|X3| <= bound23 by
/// meet-in-the-middle: tabulate b - B2 X2^5 - B3 X3^5 over the (X2, X3) box,
/// then scan B0 X0^5 + B1 X1^5 against the table. Exact big-integer keys,
/// exact comparisons. Only solutions with X0 X1 X2 X3 != 0 are reported
/// (X3 = 0 admits the degenerate family X0 = X1, X2 fixed); skipped matches
/// are counted. The scan partitions across `threads` workers; the result is
/// deterministic regardless of thread count.
BoxSearchResult box_search(const GtInstance& inst, const BigInt& bound01,
                           const BigInt& bound23, unsigned threads = 1);

/// Number of even t >= 2 with 64 t^2 (t^8 - 1) <= N: each gives a coefficient
/// vector with gcd 1 and max entry within N, so this is a certified lower
/// bound for the count of such vectors admitting infinitely many points.
std::uint64_t p_lower_bound(const BigInt& N);

struct CbbCount {
  std::uint64_t count = 0;     // generator tuples with all |X_i| <= N
  std::uint64_t positive = 0;  // subcount with every coordinate > 0
};

/// Advances the generator until the max coordinate exceeds N.
CbbCount cbb_count(const GtInstance& inst, const BigInt& N);

}  // namespace qfold
