#pragma once

// Multiplicative characters of F_q^*, Jacobi and Gauss sums, and the
// aggregate Jacobi-sum quantities built from a character of order k.
//
// Characters are indexed by t mod q-1: chi_t(w^m) = z_{q-1}^{t m}, and every
// character (the trivial one included) vanishes at 0. Values are returned in
// the smallest cyclotomic ring that contains them.

#include "paley/common.hpp"
#include "paley/cyclotomic.hpp"
#include "paley/field.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace paley {

struct CharIndex {
  std::int64_t t = 0;
  constexpr auto operator<=>(const CharIndex&) const noexcept = default;
};

/// Character group operations; all indices are reduced modulo q - 1.
struct CharGroup {
  std::int64_t order;  // q - 1

  explicit CharGroup(const FieldTable& f) : order(f.order()) {}

  [[nodiscard]] CharIndex make(std::int64_t t) const noexcept { return {mod(t, order)}; }
  [[nodiscard]] CharIndex trivial() const noexcept { return {0}; }
  [[nodiscard]] CharIndex mul(CharIndex a, CharIndex b) const noexcept { return make(a.t + b.t); }
  [[nodiscard]] CharIndex inv(CharIndex a) const noexcept { return make(-a.t); }
  [[nodiscard]] CharIndex div(CharIndex a, CharIndex b) const noexcept { return make(a.t - b.t); }
  [[nodiscard]] CharIndex pow(CharIndex a, std::int64_t e) const noexcept {
    return make(static_cast<std::int64_t>((static_cast<__int128>(a.t) * mod(e, order)) % order));
  }
  /// Exact order of the character.
  [[nodiscard]] std::int64_t char_order(CharIndex a) const noexcept { return order / std::gcd(mod(a.t, order), order); }
  /// The quadratic character (q odd).
  [[nodiscard]] CharIndex phi() const noexcept { return make(order / 2); }
};

/// The canonical character of order k, chi_k(w) = z_k.
inline CharIndex chi_k(const FieldTable& f, int k) {
  require(k >= 1 && f.order() % k == 0, "chi_k: k must divide q - 1");
  return {f.order() / k};
}

namespace detail {

// Smallest n such that every listed character takes values in Z[z_n].
inline std::int64_t value_order(std::int64_t group_order, std::initializer_list<CharIndex> chars) {
  std::int64_t g = group_order;
  for (auto c : chars) g = std::gcd(g, mod(c.t, group_order));
  return group_order / g;
}

}  // namespace detail

/// chi_t(a), or 0 at a = 0.
inline CycNum char_value(const FieldTable& f, CharIndex c, FieldElem a) {
  const std::int64_t n = detail::value_order(f.order(), {c});
  if (a.is_zero()) return CycNum(n);
  const std::int64_t step = f.order() / n;  // c.t is a multiple of step
  return CycNum::root(n, (mod(c.t, f.order()) / step) * a.log());
}

/// chi_t(-1) as +1 or -1.
inline int char_sign_at_minus_one(const FieldTable& f, CharIndex c) {
  const auto m = f.minus_one().log();
  // chi_t(w^m) = z^(t m) with t m a multiple of (q-1)/2.
  const std::int64_t e = mod(static_cast<std::int64_t>((static_cast<__int128>(mod(c.t, f.order())) * m) % f.order()),
                             f.order());
  return e == 0 ? 1 : -1;
}

/// J(A, B) = sum_a A(a) B(1 - a), by direct summation over the field.
inline CycNum jacobi(const FieldTable& f, CharIndex a_char, CharIndex b_char) {
  const std::int64_t n = detail::value_order(f.order(), {a_char, b_char});
  const std::int64_t step = f.order() / n;
  const std::int64_t ta = mod(a_char.t, f.order()) / step, tb = mod(b_char.t, f.order()) / step;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  const FieldElem one = f.one();
  for (std::int64_t m = 0; m < f.order(); ++m) {
    const FieldElem a = f.power(m);
    const FieldElem b = f.sub(one, a);
    if (b.is_zero()) continue;
    counts[static_cast<std::size_t>(mod(ta * m + tb * b.log(), n))] += 1;
  }
  return CycNum::from_counts(n, counts);
}

/// Canonical additive character psi(a) = exp(2 pi i Tr(a) / p), tabulated by
/// polynomial index.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(const FieldTable& f) : values_(static_cast<std::size_t>(f.q())) {
    for (std::int64_t idx = 0; idx < f.q(); ++idx) {
      const auto tr = f.trace(f.from_index(idx));
      values_[static_cast<std::size_t>(idx)] =
          std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(tr) / static_cast<double>(f.p()));
    }
  }
  [[nodiscard]] std::complex<double> operator()(const FieldTable& f, FieldElem a) const {
    return values_[static_cast<std::size_t>(f.to_index(a))];
  }

 private:
  std::vector<std::complex<double>> values_;
};

/// Gauss sum g(chi_t) = sum_a chi_t(a) psi(a), in floating point.
inline std::complex<double> gauss(const FieldTable& f, CharIndex c, const AdditiveCharacter& psi) {
  std::complex<double> acc = 0.0;
  const double n = static_cast<double>(f.order());
  const std::int64_t t = mod(c.t, f.order());
  for (std::int64_t m = 0; m < f.order(); ++m) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(mod(t * m, f.order())) / n;
    acc += std::polar(1.0, ang) * psi(f, f.power(m));
  }
  return acc;
}

/// J(chi_k^s, chi_k^t) for all s, t in Z_k, as elements of Z[z_k].
///
/// Built from the joint histogram of (log a mod k, log(1-a) mod k) over
/// a not in {0, 1}. `generator_power` j replaces chi_k by chi_k^j, which for
/// gcd(j, k) = 1 is another character of exact order k.
class JacobiTable {
 public:
  JacobiTable(const FieldTable& f, int k, std::int64_t generator_power = 1) : k_(k), q_(f.q()) {
    require(k >= 1 && f.order() % k == 0, "JacobiTable: k must divide q - 1");
    const std::int64_t j = mod(generator_power, k);
    require(k == 1 || std::gcd(j, std::int64_t{k}) == 1, "JacobiTable: generator power must be coprime to k");
    std::vector<std::int64_t> hist(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
    const FieldElem one = f.one();
    for (std::int64_t m = 0; m < f.order(); ++m) {
      const FieldElem b = f.sub(one, f.power(m));
      if (b.is_zero()) continue;
      hist[static_cast<std::size_t>(mod(j * m, k) * k + mod(j * b.log(), k))] += 1;
    }
    table_.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    std::vector<std::int64_t> acc(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
      for (int t = 0; t < k; ++t) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int c1 = 0; c1 < k; ++c1)
          for (int c2 = 0; c2 < k; ++c2)
            acc[static_cast<std::size_t>((s * c1 + t * c2) % k)] +=
                hist[static_cast<std::size_t>(c1 * k + c2)];
        table_[static_cast<std::size_t>(s * k + t)] = CycNum::from_counts(k, acc);
      }
    }
  }

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] std::int64_t q() const noexcept { return q_; }
  /// J(chi_k^s, chi_k^t), exponents taken mod k.
  [[nodiscard]] const CycNum& operator()(std::int64_t s, std::int64_t t) const {
    return table_[static_cast<std::size_t>(mod(s, k_) * k_ + mod(t, k_))];
  }

 private:
  int k_;
  std::int64_t q_;
  std::vector<CycNum> table_;
};

struct JacobiAggregates {
  BigInt R, Rminus, S, Sminus, J0, J0minus, JJ0, JJ0minus;
};

namespace detail {
inline int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// The eight aggregate Jacobi sums over the index ranges they are defined on.
inline JacobiAggregates aggregates(const JacobiTable& J) {
  const int k = J.k();
  CycNum R(k), Rm(k), S(k), Sm(k), J0(k), J0m(k), JJ0(k), JJ0m(k);
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) {
      const CycNum& jst = J(s, t);
      const int sg = detail::parity_sign(s + t);
      J0 += jst;
      if (sg > 0) J0m += jst; else J0m -= jst;
      const bool inner_st = s >= 1 && t >= 1 && (s + t) % k != 0;
      if (inner_st) {
        R += jst;
        if (sg > 0) Rm += jst; else Rm -= jst;
      }
      for (int v = 0; v < k; ++v) {
        const CycNum prod = jst * J(-s, v);
        JJ0 += prod;
        if (sg > 0) JJ0m += prod; else JJ0m -= prod;
        if (inner_st && v >= 1 && (v + t) % k != 0 && mod(v - s, k) != 0) {
          S += prod;
          if (sg > 0) Sm += prod; else Sm -= prod;
        }
      }
    }
  }
  return {R.to_integer(),  Rm.to_integer(),  S.to_integer(),   Sm.to_integer(),
          J0.to_integer(), J0m.to_integer(), JJ0.to_integer(), JJ0m.to_integer()};
}

inline JacobiAggregates aggregates(const FieldTable& f, int k) {
  require_valid(f, k);
  return aggregates(JacobiTable(f, k));
}

/// Brute-force evaluation of both sides of the seven aggregate identities.
inline CheckReport check_jtoRS(const FieldTable& f, int k) {
  require_valid(f, k);
  const JacobiTable J(f, k);
  const auto A = aggregates(J);
  const BigInt q = f.q(), kk = k;
  CheckReport rep;
  auto record = [&](const std::string& name, const BigInt& lhs, const BigInt& rhs) {
    std::ostringstream os;
    os << "lhs=" << lhs << " rhs=" << rhs;
    rep.add(name, lhs == rhs, os.str());
  };

  CycNum e(k), f_sum(k), g(k);
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) {
      if (s % 2 == 0) e += J(s, t); else e -= J(s, t);
      for (int v = 0; v < k; ++v) {
        const CycNum prod = J(s, t) * J(-s, v);
        const int sg = detail::parity_sign(t + v);
        if (sg > 0) f_sum += prod; else f_sum -= prod;
        if (s >= 1 && t >= 1 && v >= 1 && (s + t) % k != 0 && (v + t) % k != 0 && mod(v - s, k) != 0) {
          if (sg > 0) g += prod; else g -= prod;
        }
      }
    }
  }
  record("aggregate (a) J0 = R + q - 2k + 1", A.J0, A.R + q - 2 * kk + 1);
  record("aggregate (b) J0- = R- + q + 1", A.J0minus, A.Rminus + q + 1);
  record("aggregate (c) JJ0 = S - 4R + q^2 + q(k^2-5k) + k^2 + 4k - 3", A.JJ0,
         A.S - 4 * A.R + q * q + q * (kk * kk - 5 * kk) + kk * kk + 4 * kk - 3);
  record("aggregate (d) JJ0- = S- - R- - 3R + q^2 - 2kq + 3(k-1)", A.JJ0minus,
         A.Sminus - A.Rminus - 3 * A.R + q * q - 2 * kk * q + 3 * (kk - 1));
  record("aggregate (e) sum (-1)^s J = J0", e.to_integer(), A.J0);
  record("aggregate (f) sum (-1)^(t+v) JJ = JJ0 + k^2(q-1)", f_sum.to_integer(), A.JJ0 + kk * kk * (q - 1));
  record("aggregate (g) restricted sum (-1)^(t+v) JJ = S + qk(k-2)", g.to_integer(), A.S + q * kk * (kk - 2));
  return rep;
}

/// Classical Jacobi-sum facts on random characters of F_q^*, the
/// orthogonality relation for chi_k, and the order-4 evaluation when
/// q = 1 (mod 4). `x` is the normalized two-squares coordinate of q when
/// q = 1 (mod 4), ignored otherwise.
inline CheckReport check_jacobi_properties(const FieldTable& f, int k, int trials, std::uint64_t seed,
                                           std::optional<std::int64_t> x = std::nullopt) {
  const CharGroup G(f);
  const BigInt q = f.q();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, G.order - 1);
  CheckReport rep;
  auto draw_nontrivial = [&] {
    std::int64_t t = 0;
    while (t == 0) t = pick(rng);
    return G.make(t);
  };

  rep.add("J(e,e) = q-2", jacobi(f, G.trivial(), G.trivial()) == CycNum::constant(1, q - 2));
  bool ok_b = true, ok_c = true, ok_x = true, ok_p = true;
  std::string fail;
  for (int i = 0; i < trials; ++i) {
    const CharIndex c = draw_nontrivial();
    if (!(jacobi(f, G.trivial(), c) == CycNum::constant(1, -1))) ok_b = false;
    if (!(jacobi(f, c, G.inv(c)) == CycNum::constant(1, -char_sign_at_minus_one(f, c)))) ok_c = false;
    const CharIndex a = G.make(pick(rng)), b = G.make(pick(rng));
    // J(A,B) = A(-1) J(A, conj(AB))
    if (!(jacobi(f, a, b) == CycNum::constant(1, char_sign_at_minus_one(f, a)) * jacobi(f, a, G.inv(G.mul(a, b))))) {
      ok_x = false;
      fail = "J transfer fails at (" + std::to_string(a.t) + "," + std::to_string(b.t) + ")";
    }
    const CharIndex u = draw_nontrivial(), v = draw_nontrivial();
    if (G.mul(u, v).t != 0) {
      if (!(jacobi(f, u, v) * jacobi(f, G.inv(u), G.inv(v)) == CycNum::constant(1, q))) ok_p = false;
    }
  }
  rep.add("J(e,chi) = -1", ok_b);
  rep.add("J(chi,conj chi) = -chi(-1)", ok_c);
  rep.add("J(A,B) = A(-1) J(A, conj(AB))", ok_x, fail);
  rep.add("J(A,B) J(conj A, conj B) = q", ok_p);

  // (1/k) sum_t chi_k^t(b) is the indicator of k-th powers.
  if (f.order() % k == 0) {
    const CharIndex ck = chi_k(f, k);
    bool ok_o = true;
    for (std::int64_t m = 0; m < f.order(); ++m) {
      CycNum acc(k);
      for (int t = 0; t < k; ++t) acc += char_value(f, G.pow(ck, t), f.power(m));
      const BigInt expect = (m % k == 0) ? BigInt(k) : BigInt(0);
      if (acc.to_integer() != expect) ok_o = false;
    }
    rep.add("orthogonality of chi_k powers", ok_o);
  }

  if (f.q() % 4 == 1 && x) {
    const CharIndex c4 = chi_k(f, 4);
    const CycNum j1 = jacobi(f, c4, c4), j2 = jacobi(f, G.inv(c4), G.inv(c4));
    const BigInt X = *x;
    const BigInt y2 = q - X * X;
    std::ostringstream os;
    os << "J+J'=" << (j1 + j2).to_integer();
    rep.add("order-4: J(c4,c4)+J(c4b,c4b) = -2x", (j1 + j2).to_integer() == -2 * X, os.str());
    const BigInt sq = (j1 * j1 + j2 * j2).to_integer();
    rep.add("order-4: J^2+J'^2 = 2x^2-2y^2 = 4x^2-2q = 2q-4y^2",
            sq == 2 * X * X - 2 * y2 && sq == 4 * X * X - 2 * q && sq == 2 * q - 4 * y2);
  }
  return rep;
}

}  // namespace paley
