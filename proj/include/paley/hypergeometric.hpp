#pragma once

// Greene's finite field hypergeometric functions 2F1 and 3F2.
//
// Each function has two independent evaluations: the definitional sum over
// all q-1 characters, and a direct character sum over the field. Values are
// ScaledValues num/den with the denominator carried explicitly.

#include "paley/characters.hpp"
#include "paley/common.hpp"
#include "paley/cyclotomic.hpp"
#include "paley/field.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace paley {

/// Exact value num / den with den > 0.
struct ScaledValue {
  CycNum num;
  BigInt den = 1;

  [[nodiscard]] std::complex<double> to_complex() const { return num.to_complex() / den.convert_to<double>(); }

  /// The numerator rescaled to denominator `d`; d must be a multiple of den.
  [[nodiscard]] CycNum numerator_over(const BigInt& d) const {
    return num * exact_div(d, den, "ScaledValue::numerator_over");
  }

  friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
    const BigInt d = boost::multiprecision::lcm(a.den, b.den);
    return {a.numerator_over(d) + b.numerator_over(d), d};
  }
  friend ScaledValue operator-(const ScaledValue& a) { return {-a.num, a.den}; }
  friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) { return a + (-b); }
  friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) { return {a.num * b.num, a.den * b.den}; }
  friend ScaledValue operator*(const BigInt& s, const ScaledValue& a) { return {a.num * s, a.den}; }
  friend bool operator==(const ScaledValue& a, const ScaledValue& b) { return a.num * b.den == b.num * a.den; }
  friend std::ostream& operator<<(std::ostream& os, const ScaledValue& v) { return os << v.num << "/" << v.den; }
};

inline ScaledValue scaled_integer(const BigInt& v, const BigInt& den = 1) { return {CycNum::constant(1, v), den}; }

/// (A over B) = B(-1)/q * J(A, conj B).
inline ScaledValue binom(const FieldTable& f, CharIndex A, CharIndex B) {
  const CharGroup G(f);
  return {jacobi(f, A, G.inv(B)) * BigInt(char_sign_at_minus_one(f, B)), BigInt(f.q())};
}

/// q * 2F1(A, B; C | lambda) = sum_b A conj(C)(b) conj(B) C(1-b) conj(A)(b - lambda).
/// Valid for lambda != 0 only; at 0 the definition gives 0.
inline ScaledValue f2f1_charsum(const FieldTable& f, CharIndex A, CharIndex B, CharIndex C, FieldElem lambda) {
  require(!lambda.is_zero(), "f2f1_charsum: lambda must be nonzero");
  const CharGroup G(f);
  const CharIndex e1 = G.div(A, C), e2 = G.div(C, B), e3 = G.inv(A);
  const std::int64_t n = detail::value_order(f.order(), {e1, e2, e3});
  const std::int64_t step = f.order() / n;
  const std::int64_t x1 = e1.t / step, x2 = e2.t / step, x3 = e3.t / step;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  const FieldElem one = f.one();
  for (std::int64_t m = 0; m < f.order(); ++m) {
    const FieldElem b = f.power(m);
    const FieldElem u = f.sub(one, b), w = f.sub(b, lambda);
    if (u.is_zero() || w.is_zero()) continue;
    counts[static_cast<std::size_t>(mod(x1 * m + x2 * u.log() + x3 * w.log(), n))] += 1;
  }
  return {CycNum::from_counts(n, counts), BigInt(f.q())};
}

/// Memoized Jacobi sums J(chi_a, chi_b) for the definitional evaluations.
class JacobiCache {
 public:
  explicit JacobiCache(const FieldTable& f) : f_(&f) {}
  const CycNum& operator()(CharIndex a, CharIndex b) {
    const auto key = std::make_pair(mod(a.t, f_->order()), mod(b.t, f_->order()));
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, jacobi(*f_, a, b)).first;
    return it->second;
  }

 private:
  const FieldTable* f_;
  std::map<std::pair<std::int64_t, std::int64_t>, CycNum> cache_;
};

namespace detail {
// q * binom(X, Y) = Y(-1) J(X, conj Y) as a CycNum.
inline CycNum binom_num(const FieldTable& f, JacobiCache& jc, CharIndex X, CharIndex Y) {
  const CharGroup G(f);
  return jc(X, G.inv(Y)) * BigInt(char_sign_at_minus_one(f, Y));
}
}  // namespace detail

/// Greene's definition: q/(q-1) sum_chi (A chi over chi)(B chi over C chi) chi(lambda).
inline ScaledValue f2f1_definitional(const FieldTable& f, CharIndex A, CharIndex B, CharIndex C, FieldElem lambda,
                                     JacobiCache* cache = nullptr) {
  JacobiCache local(f);
  JacobiCache& jc = cache ? *cache : local;
  const CharGroup G(f);
  const BigInt q = f.q();
  CycNum acc(1);
  if (!lambda.is_zero()) {
    for (std::int64_t t = 0; t < G.order; ++t) {
      const CharIndex chi = G.make(t);
      acc += detail::binom_num(f, jc, G.mul(A, chi), chi) * detail::binom_num(f, jc, G.mul(B, chi), G.mul(C, chi)) *
             char_value(f, chi, lambda);
    }
  }
  return {acc, q * (q - 1)};
}

/// q^2 * 3F2(A,B,C; D,E | lambda)
///   = sum_{a,b} A conj(E)(a) conj(C) E(1-a) B(b) conj(B) D(b-1) conj(A)(a - lambda b).
/// Valid for lambda != 0 only; at 0 the definition gives 0.
inline ScaledValue f3f2_charsum(const FieldTable& f, CharIndex A, CharIndex B, CharIndex C, CharIndex D, CharIndex E,
                                FieldElem lambda) {
  require(!lambda.is_zero(), "f3f2_charsum: lambda must be nonzero");
  const CharGroup G(f);
  const std::array<CharIndex, 5> ex{G.div(A, E), G.div(E, C), B, G.div(D, B), G.inv(A)};
  const std::int64_t n = detail::value_order(f.order(), {ex[0], ex[1], ex[2], ex[3], ex[4]});
  const std::int64_t step = f.order() / n;
  std::array<std::int64_t, 5> x{};
  for (std::size_t i = 0; i < 5; ++i) x[i] = ex[i].t / step;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  const FieldElem one = f.one();
  for (std::int64_t ma = 0; ma < f.order(); ++ma) {
    const FieldElem a = f.power(ma);
    const FieldElem u = f.sub(one, a);
    if (u.is_zero()) continue;
    const std::int64_t base = x[0] * ma + x[1] * u.log();
    for (std::int64_t mb = 0; mb < f.order(); ++mb) {
      const FieldElem b = f.power(mb);
      const FieldElem v = f.sub(b, one);
      if (v.is_zero()) continue;
      const FieldElem w = f.sub(a, f.mul(lambda, b));
      if (w.is_zero()) continue;
      counts[static_cast<std::size_t>(mod(base + x[2] * mb + x[3] * v.log() + x[4] * w.log(), n))] += 1;
    }
  }
  const BigInt q = f.q();
  return {CycNum::from_counts(n, counts), q * q};
}

/// Greene's definition: q/(q-1) sum_chi (A chi over chi)(B chi over D chi)(C chi over E chi) chi(lambda).
inline ScaledValue f3f2_definitional(const FieldTable& f, CharIndex A, CharIndex B, CharIndex C, CharIndex D,
                                     CharIndex E, FieldElem lambda, JacobiCache* cache = nullptr) {
  JacobiCache local(f);
  JacobiCache& jc = cache ? *cache : local;
  const CharGroup G(f);
  const BigInt q = f.q();
  CycNum acc(1);
  if (!lambda.is_zero()) {
    for (std::int64_t t = 0; t < G.order; ++t) {
      const CharIndex chi = G.make(t);
      acc += detail::binom_num(f, jc, G.mul(A, chi), chi) * detail::binom_num(f, jc, G.mul(B, chi), G.mul(D, chi)) *
             detail::binom_num(f, jc, G.mul(C, chi), G.mul(E, chi)) * char_value(f, chi, lambda);
    }
  }
  return {acc, q * q * (q - 1)};
}

using Tuple5 = std::array<int, 5>;

inline int tuple_sign(const Tuple5& t) { return ((t[2] + t[4]) % 2 == 0) ? 1 : -1; }

/// (-1)^(t3+t5) 3F2(chi_k^t1, chi_k^t2, chi_k^t3; chi_k^t4, chi_k^t5 | lambda).
inline ScaledValue signed_f3f2(const FieldTable& f, int k, const Tuple5& t, FieldElem lambda) {
  require_valid(f, k);
  const CharGroup G(f);
  const CharIndex c = chi_k(f, k);
  auto P = [&](int i) { return G.pow(c, t[static_cast<std::size_t>(i)]); };
  ScaledValue v = f3f2_charsum(f, P(0), P(1), P(2), P(3), P(4), lambda);
  if (tuple_sign(t) < 0) v.num = -v.num;
  return v;
}

/// q^2 3F2(chi_k^t | lambda) for every t in (Z_k)^5 at once.
///
/// The double character sum depends on (a, b) only through the k-th power
/// classes of a, 1-a, b, b-1 and a - lambda b, so the pairs are bucketed
/// into a k^5 histogram and a five-dimensional discrete Fourier transform
/// over Z_k (exact, in Z[z_k]) yields all k^5 sums.
class F3F2Table {
 public:
  F3F2Table(const FieldTable& f, int k, FieldElem lambda) : k_(k), q_(f.q()) {
    require(!lambda.is_zero(), "F3F2Table: lambda must be nonzero");
    require(k >= 1 && f.order() % k == 0, "F3F2Table: k must divide q - 1");
    const std::size_t K = static_cast<std::size_t>(k);
    const std::size_t cells = K * K * K * K * K;
    std::vector<std::int64_t> hist(cells, 0);
    const FieldElem one = f.one();
    std::vector<std::int32_t> cls_b(static_cast<std::size_t>(f.order()), -1);
    for (std::int64_t mb = 0; mb < f.order(); ++mb) {
      const FieldElem v = f.sub(f.power(mb), one);
      if (!v.is_zero()) cls_b[static_cast<std::size_t>(mb)] = static_cast<std::int32_t>(v.log() % k);
    }
    for (std::int64_t ma = 0; ma < f.order(); ++ma) {
      const FieldElem a = f.power(ma);
      const FieldElem u = f.sub(one, a);
      if (u.is_zero()) continue;
      const std::size_t base = (static_cast<std::size_t>(ma % k) * K + static_cast<std::size_t>(u.log() % k)) * K;
      for (std::int64_t mb = 0; mb < f.order(); ++mb) {
        const auto cb1 = cls_b[static_cast<std::size_t>(mb)];
        if (cb1 < 0) continue;
        const FieldElem w = f.sub(a, f.mul(lambda, f.power(mb)));
        if (w.is_zero()) continue;
        const std::size_t idx = ((base + static_cast<std::size_t>(mb % k)) * K + static_cast<std::size_t>(cb1)) * K +
                                static_cast<std::size_t>(w.log() % k);
        hist[idx] += 1;
      }
    }
    // coefficient vectors in Z[z_k], one per cell
    std::vector<std::int64_t> cur(cells * K, 0), nxt(cells * K, 0);
    for (std::size_t c = 0; c < cells; ++c) cur[c * K] = hist[c];
    std::size_t stride = cells;
    for (int d = 0; d < 5; ++d) {
      stride /= K;  // stride of dimension d
      std::fill(nxt.begin(), nxt.end(), 0);
      for (std::size_t cell = 0; cell < cells; ++cell) {
        const std::size_t cd = (cell / stride) % K;
        const std::size_t base_cell = cell - cd * stride;
        const std::int64_t* src = &cur[cell * K];
        bool nonzero = false;
        for (std::size_t j = 0; j < K; ++j) nonzero = nonzero || src[j] != 0;
        if (!nonzero) continue;
        for (std::size_t fd = 0; fd < K; ++fd) {
          std::int64_t* dst = &nxt[(base_cell + fd * stride) * K];
          const std::size_t shift = (fd * cd) % K;
          for (std::size_t j = 0; j < K; ++j) dst[(j + shift) % K] += src[j];
        }
      }
      cur.swap(nxt);
    }
    transform_ = std::move(cur);
  }

  [[nodiscard]] int k() const noexcept { return k_; }

  /// Numerator of q^2 3F2(chi_k^t1..t5 | lambda) (unsigned), in Z[z_k].
  [[nodiscard]] CycNum q2_value(const Tuple5& t) const {
    const std::array<std::int64_t, 5> freq{t[0] - t[4], t[4] - t[2], t[1], t[3] - t[1], -t[0]};
    std::size_t cell = 0;
    for (auto fr : freq) cell = cell * static_cast<std::size_t>(k_) + static_cast<std::size_t>(mod(fr, k_));
    const std::size_t K = static_cast<std::size_t>(k_);
    return CycNum::from_counts(k_, std::span<const std::int64_t>(&transform_[cell * K], K));
  }

  /// Numerator of q^2 (-1)^(t3+t5) 3F2(chi_k^t | lambda).
  [[nodiscard]] CycNum signed_q2_value(const Tuple5& t) const {
    CycNum v = q2_value(t);
    return tuple_sign(t) > 0 ? v : -v;
  }

  /// As a ScaledValue with denominator q^2.
  [[nodiscard]] ScaledValue signed_value(const Tuple5& t) const {
    return {signed_q2_value(t), BigInt(q_) * BigInt(q_)};
  }

  /// Sum over all of (Z_k)^5 of the signed numerators.
  [[nodiscard]] CycNum signed_total() const {
    CycNum acc(k_);
    for_each_tuple(k_, [&](const Tuple5& t) { acc += signed_q2_value(t); });
    return acc;
  }

  template <class Fn>
  static void for_each_tuple(int k, Fn&& fn) {
    Tuple5 t{};
    for (t[0] = 0; t[0] < k; ++t[0])
      for (t[1] = 0; t[1] < k; ++t[1])
        for (t[2] = 0; t[2] < k; ++t[2])
          for (t[3] = 0; t[3] < k; ++t[3])
            for (t[4] = 0; t[4] < k; ++t[4]) fn(t);
  }

 private:
  int k_;
  std::int64_t q_;
  std::vector<std::int64_t> transform_;
};

}  // namespace paley
