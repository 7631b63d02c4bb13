// Arithmetic feasibility sieve for half-flag parameter sets.
//
// Everything here is exact integer arithmetic on candidate parameters; no
// group ever enters. The search pipeline calls these as its first stage,
// but each predicate also stands alone.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hfd {

// A transitive action summarized by the numbers the sieve needs: degree,
// point stabilizer order, and the nontrivial subdegrees (which must sum to
// v - 1 when given).
struct CandidateAction {
  std::string label;
  std::uint64_t v = 0;
  std::uint64_t stab_order = 0;
  std::vector<std::uint64_t> subdegrees;  // nontrivial only; may be empty

  std::uint64_t group_order() const { return v * stab_order; }
  std::uint64_t r_max() const;
};

// gcd(v-1, stab_order, d_1, ..., d_s). An empty subdegree list means no
// orbit refinement is available and the gcd stops at stab_order. A
// non-empty list must sum to v - 1 (std::invalid_argument otherwise).
// The result always divides v - 1.
std::uint64_t r_max(std::uint64_t v, std::uint64_t stab_order,
                    const std::vector<std::uint64_t>& subdegrees);

// r_max^2 > v. Candidates failing this admit no parameter set at all,
// since r/(r,2lambda) is bounded by r_max and its square must exceed v.
bool passes_rmax(std::uint64_t v, std::uint64_t r_max);

// One feasible parameter set. gcd_r_2lambda is the recurring divisor
// gcd(r, 2*lambda); the identities are the standard 2-design ones.
struct ParamTuple {
  std::uint64_t v = 0;
  std::uint64_t b = 0;
  std::uint64_t r = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;

  std::uint64_t gcd_r_2lambda() const;
  bool replication_identity() const;  // v r == b k
  bool pair_identity() const;         // lambda (v-1) == r (k-1)
  bool fisher() const;                // b >= v
};

struct Step1Options {
  // When set, additionally require that r / gcd(r, 2 lambda) divides
  // r_max. Off by default: the raw enumeration keeps every arithmetic
  // survivor, the pipeline switches the filter on.
  bool require_rmax_divisibility = false;
  std::uint64_t r_max = 0;
};

// All (b, r, k, lambda) with k even in (2, v-1), r even, r/2 dividing
// stab_order, lambda = r(k-1)/(v-1) a positive integer, b = vr/k an
// integer with b >= v, and lambda >= gcd(r, 2 lambda)^2. Sorted by (b, k),
// so equal-b runs are contiguous. Requires v >= 4. Every returned tuple is
// re-verified by an independent checker; see step1_satisfies.
std::vector<ParamTuple> step1_enumerate(std::uint64_t v,
                                        std::uint64_t stab_order,
                                        const Step1Options& options = {});

// The full admission test applied to an arbitrary tuple: both identities,
// Fisher, evenness of r and k, 2 < k < v-1, r/2 | stab_order,
// lambda >= gcd(r, 2 lambda)^2, and the derived bound
// r^2 / gcd(r, 2 lambda)^2 > v. This is the checker step1_enumerate runs
// over its own output, exposed for tests and for vetting external tuples.
bool step1_satisfies(const ParamTuple& t, std::uint64_t stab_order);

// Sorted distinct block counts of a tuple list.
std::vector<std::uint64_t> distinct_b(const std::vector<ParamTuple>& rows);

// Sufficient conditions for point-primitivity of a half-flag-transitive
// group with these parameters. Any single true member settles primitivity.
// Input must satisfy the pair identity (std::invalid_argument otherwise).
struct PrimitivityCriteria {
  bool lambda_at_least_gcd_sq = false;  // lambda >= gcd(r, 2 lambda)^2
  bool r_exceeds_4lambda_k2 = false;    // r > 4 lambda (k - 2)
  bool pair_gcd_at_most_2 = false;      // gcd(v-1, 2k-2) <= 2

  bool any() const {
    return lambda_at_least_gcd_sq || r_exceeds_4lambda_k2 ||
           pair_gcd_at_most_2;
  }
};

PrimitivityCriteria primitivity_criteria(const ParamTuple& t);

// Necessary conditions for point-imprimitivity; a half-flag-transitive
// group acting imprimitively satisfies both. Either one failing excludes
// imprimitivity. Input must satisfy the pair identity.
struct ImprimitivityNecessities {
  bool lambda_below_gcd_sq = false;   // lambda < gcd(r, 2 lambda)^2
  bool r_within_4lambda_k2 = false;   // r <= 4 lambda (k - 2)

  bool both() const { return lambda_below_gcd_sq && r_within_4lambda_k2; }
};

ImprimitivityNecessities imprimitivity_necessities(const ParamTuple& t);

// Group-order cap: a half-flag-transitive group satisfies
// |G| <= 4 |G_alpha|^3. Returns true when the candidate survives. The
// string overload takes the group order in decimal, for orders beyond
// 64 bits. stab_order must be positive and divide group_order
// (std::invalid_argument otherwise).
bool passes_order_bound(std::uint64_t group_order, std::uint64_t stab_order);
bool passes_order_bound(const std::string& group_order_decimal,
                        std::uint64_t stab_order);

// r / gcd(r, 2 lambda) divides every listed subdegree. Vacuously true for
// an empty list.
bool subdegree_divisibility(const ParamTuple& t,
                            const std::vector<std::uint64_t>& subdegrees);

// Serialization with stable column order
// (v, b, r, k, lambda, gcd_r_2lambda, passes). The passes column records
// the r/(r,2lambda) | r_max divisibility status when r_max is nonzero and
// is true otherwise, so raw and refined runs share one schema.
std::string sieve_csv(const std::vector<ParamTuple>& rows,
                      std::uint64_t r_max = 0);
std::string sieve_json(const std::vector<ParamTuple>& rows,
                       std::uint64_t r_max = 0);

}  // namespace hfd
