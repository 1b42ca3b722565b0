#pragma once

// Exact counts of transitive subtournaments from Jacobi and hypergeometric
// sums, plus the closed forms for k = 2 and k = 4.

#include "paley/characters.hpp"
#include "paley/common.hpp"
#include "paley/field.hpp"
#include "paley/hypergeometric.hpp"
#include "paley/orbits.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace paley {

class NoDecomposition : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonUnique : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TwoSquares {
  std::int64_t x = 0, y = 0;
};

/// Which values of x are excluded for being divisible by p.
enum class TwoSquaresRule {
  p_one_mod_four,  // p does not divide x, imposed only when p = 1 (mod 4)
  always,          // p does not divide x, always
};

/// q = x^2 + y^2 with x = 1 (mod 4), y >= 0, and p not dividing x under
/// `rule`. Throws NoDecomposition if no such x exists and NonUnique if more
/// than one does.
inline TwoSquares two_squares(std::int64_t q, TwoSquaresRule rule = TwoSquaresRule::always) {
  const auto [p, r] = prime_power_decomposition(q);
  if (r == 0 || q % 4 != 1) throw NoDecomposition("two_squares: q must be a prime power = 1 (mod 4)");
  const bool exclude = rule == TwoSquaresRule::always || p % 4 == 1;
  std::vector<TwoSquares> found;
  const auto lim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(q))) + 1;
  for (std::int64_t x = -lim; x <= lim; ++x) {
    if (mod(x, 4) != 1 || x * x > q) continue;
    if (exclude && x % p == 0) continue;
    const std::int64_t rest = q - x * x;
    auto y = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (y * y > rest) --y;
    while ((y + 1) * (y + 1) <= rest) ++y;
    if (y * y == rest) found.push_back({x, y});
  }
  if (found.empty()) throw NoDecomposition("two_squares: no admissible x for q = " + std::to_string(q));
  if (found.size() > 1) {
    std::string xs;
    for (const auto& s : found) xs += (xs.empty() ? "" : ", ") + std::to_string(s.x);
    throw NonUnique("two_squares: several admissible x for q = " + std::to_string(q) + ": " + xs);
  }
  return found.front();
}

namespace detail {

inline BigInt nonnegative_count(const BigInt& num, const BigInt& den, const std::string& what) {
  const BigInt v = exact_div(num, den, what);
  if (v < 0) throw NonIntegral(what + ": negative count " + v.str());
  return v;
}

inline const std::vector<OrbitRecord>& orbits_cached(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<OrbitRecord>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(k);
  if (it == memo.end()) it = memo.emplace(k, enumerate_orbits(k)).first;
  return it->second;
}

}  // namespace detail

/// K4(G_k(q)) = q(q-1)/k^6 times q^2 sum_t (-1)^(t3+t5) 3F2(chi_k^t | 1),
/// the sum running over all of (Z_k)^5.
inline BigInt k4_thm1(const FieldTable& f, int k) {
  require_valid(f, k);
  const BigInt q = f.q();
  const F3F2Table table(f, k, f.one());
  const BigInt total = table.signed_total().to_integer();
  BigInt k6 = 1;
  for (int i = 0; i < 6; ++i) k6 *= k;
  return detail::nonnegative_count(q * (q - 1) * total, k6, "k4_thm1");
}

enum class ResidualMode {
  full,     // every tuple of X_k, from the batched table
  orbits,   // one direct character sum per orbit representative, times its net
};

/// The pieces of the Jacobi-sum form of K4(G_k(q)).
struct K4Terms {
  BigInt R, S, Sminus;
  BigInt bracket_closed;  // everything in the bracket except the residual
  BigInt residual;        // q^2 times the signed 3F2 sum over X_k
  BigInt count;
};

inline BigInt xk_residual(const FieldTable& f, int k, ResidualMode mode) {
  require_valid(f, k);
  CycNum acc(k);
  if (mode == ResidualMode::full) {
    const F3F2Table table(f, k, f.one());
    for (const auto& t : enumerate_xk(k)) acc += table.signed_q2_value(t);
  } else {
    for (const auto& orb : detail::orbits_cached(k)) {
      if (orb.zero_valued || orb.net == 0) continue;
      acc += signed_f3f2(f, k, orb.representative, f.one()).num * BigInt(orb.net);
    }
  }
  return acc.to_integer();
}

inline K4Terms k4_thm2_terms(const FieldTable& f, int k, ResidualMode mode = ResidualMode::full) {
  require_valid(f, k);
  const auto agg = aggregates(f, k);
  const BigInt q = f.q(), K = k;
  K4Terms t;
  t.R = agg.R;
  t.S = agg.S;
  t.Sminus = agg.Sminus;
  t.bracket_closed = 10 * t.R * t.R + 5 * (q - K * K + 1) * t.R - 10 * t.S - 5 * t.Sminus + q * q -
                     10 * (K - 1) * (K - 1) * q + 5 * K * K * (K - 1) + 1;
  t.residual = xk_residual(f, k, mode);
  BigInt k6 = 1;
  for (int i = 0; i < 6; ++i) k6 *= k;
  t.count = detail::nonnegative_count(q * (q - 1) * (t.bracket_closed + t.residual), k6, "k4_thm2");
  return t;
}

inline BigInt k4_thm2(const FieldTable& f, int k, ResidualMode mode = ResidualMode::full) {
  return k4_thm2_terms(f, k, mode).count;
}

/// K3(G_k(q)) = q(q-1)(R_k + q - 2k + 1)/k^3.
inline BigInt k3_thm3(const FieldTable& f, int k) {
  require_valid(f, k);
  const BigInt q = f.q(), K = k;
  const BigInt R = aggregates(f, k).R;
  return detail::nonnegative_count(q * (q - 1) * (R + q - 2 * K + 1), K * K * K, "k3_thm3");
}

/// q^2 3F2(chi_4, phi, phi; eps, eps | 1), a rational integer.
inline BigInt q2_f3f2_chi4_phi_phi(const FieldTable& f) {
  require_valid(f, 4);
  const CharGroup G(f);
  const auto v = f3f2_charsum(f, chi_k(f, 4), G.phi(), G.phi(), G.trivial(), G.trivial(), f.one());
  return v.num.to_integer();
}

/// The closed forms for k = 2 (any valid q) and k = 4 (q = 5 mod 8).
inline BigInt closed_form(const FieldTable& f, int k, int m) {
  require_valid(f, k);
  require(m == 3 || m == 4, "closed_form: m must be 3 or 4");
  const BigInt q = f.q();
  if (k == 2) {
    if (m == 4) return detail::nonnegative_count(q * (q - 1) * (q - 3) * (q - 7), 64, "closed form k=2 m=4");
    return detail::nonnegative_count(q * (q - 1) * (q - 3), 8, "closed form k=2 m=3");
  }
  if (k == 4) {
    const BigInt x = two_squares(f.q()).x;
    if (m == 3) return detail::nonnegative_count(q * (q - 1) * (q + 2 * x - 7), 64, "closed form k=4 m=3");
    const BigInt br = q * q + 2 * q * (5 * x - 21) + 24 * x * x - 150 * x + 241 + 10 * q2_f3f2_chi4_phi_phi(f);
    return detail::nonnegative_count(q * (q - 1) * br, 4096, "closed form k=4 m=4");
  }
  throw PreconditionError("closed_form: only k = 2 and k = 4 have closed forms");
}

}  // namespace paley
