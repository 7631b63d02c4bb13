#include "hfd/sieve.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace hfd {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using boost::multiprecision::cpp_int;

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d)
      continue;
    out.push_back(d);
    if (d != n / d)
      out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_pair_identity(const ParamTuple& t) {
  if (t.v < 2 || t.r == 0 || t.lambda == 0 || t.k == 0 ||
      u128(t.lambda) * (t.v - 1) != u128(t.r) * (t.k - 1))
    throw std::invalid_argument("parameter tuple violates lambda(v-1) = r(k-1)");
}

}  // namespace

std::uint64_t r_max(std::uint64_t v, std::uint64_t stab_order,
                    const std::vector<std::uint64_t>& subdegrees) {
  if (v < 2)
    throw std::invalid_argument("r_max needs degree at least 2");
  if (!subdegrees.empty()) {
    u64 sum = 0;
    for (u64 d : subdegrees)
      sum += d;
    if (sum != v - 1)
      throw std::invalid_argument("subdegrees do not sum to v - 1");
  }
  u64 g = std::gcd(v - 1, stab_order);
  for (u64 d : subdegrees)
    g = std::gcd(g, d);
  return g;
}

std::uint64_t CandidateAction::r_max() const {
  return hfd::r_max(v, stab_order, subdegrees);
}

bool passes_rmax(std::uint64_t v, std::uint64_t r_max) {
  return u128(r_max) * r_max > v;
}

std::uint64_t ParamTuple::gcd_r_2lambda() const {
  return std::gcd(r, 2 * lambda);
}

bool ParamTuple::replication_identity() const {
  return u128(v) * r == u128(b) * k;
}

bool ParamTuple::pair_identity() const {
  return v >= 1 && k >= 1 &&
         u128(lambda) * (v - 1) == u128(r) * (k - 1);
}

bool ParamTuple::fisher() const { return b >= v; }

bool step1_satisfies(const ParamTuple& t, std::uint64_t stab_order) {
  if (t.v < 4 || t.r == 0 || t.k == 0 || t.lambda == 0 || t.b == 0)
    return false;
  if (t.r % 2 || t.k % 2)
    return false;
  if (t.k <= 2 || t.k >= t.v - 1)
    return false;
  if (!t.replication_identity() || !t.pair_identity() || !t.fisher())
    return false;
  if (stab_order == 0 || stab_order % (t.r / 2))
    return false;
  const u64 g2 = t.gcd_r_2lambda();
  if (u128(t.lambda) < u128(g2) * g2)
    return false;
  // Derived bound: lambda >= g2^2 and r(k-1) = lambda(v-1) with b >= v
  // force r^2 > g2^2 v. Checked outright rather than re-derived.
  return u128(t.r) * t.r > u128(g2) * g2 * t.v;
}

std::vector<ParamTuple> step1_enumerate(std::uint64_t v,
                                        std::uint64_t stab_order,
                                        const Step1Options& options) {
  if (v < 4)
    throw std::invalid_argument("enumeration needs v >= 4");
  if (stab_order == 0)
    throw std::invalid_argument("stabilizer order must be positive");
  if (options.require_rmax_divisibility && options.r_max == 0)
    throw std::invalid_argument("divisibility filter needs a nonzero r_max");

  const std::vector<u64> halves = divisors(stab_order);
  std::vector<ParamTuple> out;
  for (u64 k = 4; k + 1 < v; k += 2) {
    for (u64 half : halves) {
      const u64 r = 2 * half;
      const u128 pairs = u128(r) * (k - 1);
      if (pairs % (v - 1))
        continue;
      const u64 lambda = u64(pairs / (v - 1));
      const u128 vr = u128(v) * r;
      if (vr % k)
        continue;
      const u64 b = u64(vr / k);
      if (b < v)
        continue;
      const u64 g2 = std::gcd(r, 2 * lambda);
      if (u128(lambda) < u128(g2) * g2)
        continue;
      if (options.require_rmax_divisibility && options.r_max % (r / g2))
        continue;
      out.push_back(ParamTuple{v, b, r, k, lambda});
    }
  }
  std::sort(out.begin(), out.end(), [](const ParamTuple& a, const ParamTuple& b) {
    return a.b != b.b ? a.b < b.b : a.k < b.k;
  });
  for (const ParamTuple& t : out)
    if (!step1_satisfies(t, stab_order))
      throw std::logic_error("sieve checker rejected an emitted tuple");
  return out;
}

std::vector<std::uint64_t> distinct_b(const std::vector<ParamTuple>& rows) {
  std::vector<u64> out;
  for (const ParamTuple& t : rows)
    out.push_back(t.b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PrimitivityCriteria primitivity_criteria(const ParamTuple& t) {
  require_pair_identity(t);
  const u64 g2 = t.gcd_r_2lambda();
  PrimitivityCriteria c;
  c.lambda_at_least_gcd_sq = u128(t.lambda) >= u128(g2) * g2;
  c.r_exceeds_4lambda_k2 = u128(t.r) > u128(4) * t.lambda * (t.k - 2);
  c.pair_gcd_at_most_2 = std::gcd(t.v - 1, 2 * t.k - 2) <= 2;
  return c;
}

ImprimitivityNecessities imprimitivity_necessities(const ParamTuple& t) {
  require_pair_identity(t);
  const u64 g2 = t.gcd_r_2lambda();
  ImprimitivityNecessities w;
  w.lambda_below_gcd_sq = u128(t.lambda) < u128(g2) * g2;
  w.r_within_4lambda_k2 = u128(t.r) <= u128(4) * t.lambda * (t.k - 2);
  return w;
}

bool passes_order_bound(std::uint64_t group_order, std::uint64_t stab_order) {
  if (stab_order == 0 || group_order % stab_order)
    throw std::invalid_argument("stabilizer order must divide the group order");
  const cpp_int s = stab_order;
  return cpp_int(group_order) <= 4 * s * s * s;
}

bool passes_order_bound(const std::string& group_order_decimal,
                        std::uint64_t stab_order) {
  if (group_order_decimal.empty() ||
      !std::all_of(group_order_decimal.begin(), group_order_decimal.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("group order must be a decimal integer");
  const cpp_int g(group_order_decimal);
  if (stab_order == 0 || g % stab_order != 0)
    throw std::invalid_argument("stabilizer order must divide the group order");
  const cpp_int s = stab_order;
  return g <= 4 * s * s * s;
}

bool subdegree_divisibility(const ParamTuple& t,
                            const std::vector<std::uint64_t>& subdegrees) {
  const u64 q = t.r / t.gcd_r_2lambda();
  for (u64 d : subdegrees)
    if (d % q)
      return false;
  return true;
}

namespace {

bool passes_column(const ParamTuple& t, u64 r_max) {
  return r_max == 0 || r_max % (t.r / t.gcd_r_2lambda()) == 0;
}

}  // namespace

std::string sieve_csv(const std::vector<ParamTuple>& rows,
                      std::uint64_t r_max) {
  std::ostringstream os;
  os << "v,b,r,k,lambda,gcd_r_2lambda,passes\n";
  for (const ParamTuple& t : rows)
    os << t.v << ',' << t.b << ',' << t.r << ',' << t.k << ',' << t.lambda
       << ',' << t.gcd_r_2lambda() << ','
       << (passes_column(t, r_max) ? "true" : "false") << '\n';
  return os.str();
}

std::string sieve_json(const std::vector<ParamTuple>& rows,
                       std::uint64_t r_max) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ParamTuple& t : rows) {
    nlohmann::ordered_json row;
    row["v"] = t.v;
    row["b"] = t.b;
    row["r"] = t.r;
    row["k"] = t.k;
    row["lambda"] = t.lambda;
    row["gcd_r_2lambda"] = t.gcd_r_2lambda();
    row["passes"] = passes_column(t, r_max);
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace hfd
