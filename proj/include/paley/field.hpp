#pragma once

// Finite fields F_q, q = p^r, in discrete-log representation.
//
// Every nonzero element is stored as its exponent m with respect to a fixed
// primitive element w (so the element is w^m), and zero is a sentinel.
// Multiplication is exponent addition; addition goes through a Zech table
// zech[m] = log(1 + w^m). A second representation, the polynomial index
// (coefficients of the element as a polynomial in w, base-p digits, low
// degree first), is kept for I/O and as an independent addition route.

#include "paley/common.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace paley {

struct FieldSpec {
  std::int64_t p = 0;
  int r = 0;
  std::int64_t q = 0;
  /// Monic modulus, low-degree coefficient first, length r + 1.
  /// For r = 1 this is x - w with w the chosen primitive root.
  std::vector<std::int64_t> modulus;
};

/// A field element: exponent of w in [0, q-2], or the zero sentinel.
class FieldElem {
 public:
  constexpr FieldElem() noexcept = default;
  static constexpr FieldElem zero() noexcept { return FieldElem{}; }
  static constexpr FieldElem from_log(std::int32_t m) noexcept {
    FieldElem e;
    e.exp_ = m;
    return e;
  }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return exp_ < 0; }
  /// Discrete log; only meaningful when !is_zero().
  [[nodiscard]] constexpr std::int32_t log() const noexcept { return exp_; }

  constexpr auto operator<=>(const FieldElem&) const noexcept = default;

 private:
  std::int32_t exp_ = -1;
};

class FieldTable {
 public:
  static constexpr std::int64_t default_cap = std::int64_t{1} << 20;

  /// Deterministic field: smallest primitive root for r = 1, otherwise the
  /// lexicographically smallest primitive monic modulus (c0 compared first).
  FieldTable(std::int64_t p, int r, std::int64_t cap = default_cap) {
    require(is_prime(p), "build_field: p = " + std::to_string(p) + " is not prime");
    require(r >= 1, "build_field: exponent r must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
      q *= p;
      require(q <= cap, "build_field: p^r exceeds the field size cap " + std::to_string(cap));
    }
    spec_.p = p;
    spec_.r = r;
    spec_.q = q;
    if (r == 1) {
      const std::int64_t g = smallest_primitive_root(p);
      spec_.modulus = {mod(-g, p), 1};
      build_prime(g);
      return;
    }
    std::vector<std::int64_t> low(static_cast<std::size_t>(r), 0);
    const std::int64_t count = q;  // p^r candidate low parts
    for (std::int64_t idx = 0; idx < count; ++idx) {
      // c0 is the most significant digit of idx, so idx order is lex order.
      std::int64_t v = idx;
      for (int j = r - 1; j >= 0; --j) {
        low[static_cast<std::size_t>(j)] = v % p;
        v /= p;
      }
      if (low[0] == 0) continue;
      std::vector<std::int64_t> f(low);
      f.push_back(1);
      if (try_build_poly(f)) {
        spec_.modulus = std::move(f);
        return;
      }
    }
    throw std::logic_error("build_field: no primitive polynomial found for p=" + std::to_string(p) +
                           ", r=" + std::to_string(r));
  }

  /// Field with an explicitly chosen monic modulus (low-degree first); the
  /// modulus must be primitive. For r = 1 the modulus x - g fixes w = g.
  explicit FieldTable(std::vector<std::int64_t> modulus, std::int64_t p, std::int64_t cap = default_cap) {
    require(is_prime(p), "FieldTable: p is not prime");
    require(modulus.size() >= 2 && modulus.back() == 1, "FieldTable: modulus must be monic of degree >= 1");
    const int r = static_cast<int>(modulus.size()) - 1;
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
      q *= p;
      require(q <= cap, "FieldTable: p^r exceeds the field size cap");
    }
    for (auto& c : modulus) c = mod(c, p);
    spec_ = {p, r, q, modulus};
    if (r == 1) {
      const std::int64_t g = mod(-modulus[0], p);
      require(g != 0 && multiplicative_order(g, p) == p - 1, "FieldTable: modulus root is not a primitive root");
      build_prime(g);
    } else {
      require(try_build_poly(modulus), "FieldTable: modulus is not primitive");
    }
  }

  [[nodiscard]] const FieldSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::int64_t p() const noexcept { return spec_.p; }
  [[nodiscard]] int r() const noexcept { return spec_.r; }
  [[nodiscard]] std::int64_t q() const noexcept { return spec_.q; }
  /// Order of the multiplicative group, q - 1.
  [[nodiscard]] std::int64_t order() const noexcept { return spec_.q - 1; }

  [[nodiscard]] FieldElem zero() const noexcept { return FieldElem::zero(); }
  [[nodiscard]] FieldElem one() const noexcept { return FieldElem::from_log(0); }
  [[nodiscard]] FieldElem omega() const noexcept { return power(1); }
  /// w^m for any integer m.
  [[nodiscard]] FieldElem power(std::int64_t m) const noexcept {
    return FieldElem::from_log(static_cast<std::int32_t>(mod(m, order())));
  }
  [[nodiscard]] FieldElem minus_one() const noexcept { return FieldElem::from_log(neg_shift_); }

  /// Polynomial index (base-p digits, low degree first) of an element.
  [[nodiscard]] std::int64_t to_index(FieldElem a) const noexcept {
    return a.is_zero() ? 0 : exp_[static_cast<std::size_t>(a.log())];
  }
  [[nodiscard]] FieldElem from_index(std::int64_t idx) const {
    require(idx >= 0 && idx < q(), "FieldTable::from_index: index out of range");
    const auto m = log_[static_cast<std::size_t>(idx)];
    return m < 0 ? FieldElem::zero() : FieldElem::from_log(m);
  }
  /// Image of the integer n under Z -> F_q.
  [[nodiscard]] FieldElem from_integer(std::int64_t n) const { return from_index(mod(n, p())); }

  [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    if (a.is_zero() || b.is_zero()) return zero();
    return power(std::int64_t{a.log()} + b.log());
  }
  [[nodiscard]] FieldElem inv(FieldElem a) const {
    require(!a.is_zero(), "FieldTable::inv: zero has no inverse");
    return power(-std::int64_t{a.log()});
  }
  [[nodiscard]] FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  [[nodiscard]] FieldElem pow(FieldElem a, std::int64_t e) const {
    if (a.is_zero()) {
      require(e >= 0, "FieldTable::pow: negative power of zero");
      return e == 0 ? one() : zero();
    }
    const std::int64_t m = mod(e, order());
    return power(static_cast<std::int64_t>((static_cast<__int128>(a.log()) * m) % order()));
  }
  [[nodiscard]] FieldElem neg(FieldElem a) const noexcept {
    if (a.is_zero()) return a;
    return power(std::int64_t{a.log()} + neg_shift_);
  }

  /// Addition through the Zech table.
  [[nodiscard]] FieldElem add(FieldElem a, FieldElem b) const noexcept {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // w^x + w^y = w^x (1 + w^(y-x))
    const std::int64_t d = mod(std::int64_t{b.log()} - a.log(), order());
    const std::int32_t z = zech_[static_cast<std::size_t>(d)];
    if (z < 0) return zero();
    return power(std::int64_t{a.log()} + z);
  }
  [[nodiscard]] FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

  /// Addition through polynomial coefficients; independent of the Zech table.
  [[nodiscard]] FieldElem add_by_coefficients(FieldElem a, FieldElem b) const {
    std::int64_t x = to_index(a), y = to_index(b), out = 0, place = 1;
    for (int j = 0; j < r(); ++j) {
      out += ((x % p() + y % p()) % p()) * place;
      x /= p();
      y /= p();
      place *= p();
    }
    return from_index(out);
  }

  /// Absolute trace Tr(a) = a + a^p + ... + a^(p^(r-1)), as an integer in [0, p).
  [[nodiscard]] std::int64_t trace(FieldElem a) const {
    FieldElem acc = zero();
    FieldElem term = a;
    for (int j = 0; j < r(); ++j) {
      acc = add(acc, term);
      term = pow(term, p());
    }
    const std::int64_t idx = to_index(acc);
    if (idx >= p()) throw std::logic_error("FieldTable::trace: result outside the prime field");
    return idx;
  }

  /// All q elements, zero first, then w^0, w^1, ..., w^(q-2).
  [[nodiscard]] std::vector<FieldElem> elements() const {
    std::vector<FieldElem> out;
    out.reserve(static_cast<std::size_t>(q()));
    out.push_back(zero());
    for (std::int64_t m = 0; m < order(); ++m) out.push_back(power(m));
    return out;
  }

  /// log_w(a) mod k, or nullopt for a = 0. Requires k | q - 1.
  [[nodiscard]] std::optional<int> residue_class(int k, FieldElem a) const {
    require(k >= 1 && order() % k == 0,
            "residue_class: k = " + std::to_string(k) + " does not divide q - 1 = " + std::to_string(order()));
    if (a.is_zero()) return std::nullopt;
    return static_cast<int>(a.log() % k);
  }

  /// The coset w^i S_k of the k-th powers, in increasing exponent order.
  [[nodiscard]] std::vector<FieldElem> coset(int k, int i) const {
    require(k >= 1 && order() % k == 0, "coset: k does not divide q - 1");
    require(i >= 0 && i < k, "coset: index out of range");
    std::vector<FieldElem> out;
    out.reserve(static_cast<std::size_t>(order() / k));
    for (std::int64_t m = i; m < order(); m += k) out.push_back(power(m));
    return out;
  }

  /// Human-readable modulus, e.g. "x^3+3x+3".
  [[nodiscard]] std::string modulus_string() const {
    std::string s;
    for (int j = r(); j >= 0; --j) {
      const auto c = spec_.modulus[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      if (!s.empty()) s += "+";
      if (j == 0 || c != 1) s += std::to_string(c);
      if (j >= 1) s += "x";
      if (j >= 2) s += "^" + std::to_string(j);
    }
    return s;
  }

 private:
  static std::int64_t multiplicative_order(std::int64_t g, std::int64_t p) {
    std::int64_t x = g % p, ord = 1;
    while (x != 1) {
      x = x * g % p;
      ++ord;
    }
    return ord;
  }

  static std::int64_t smallest_primitive_root(std::int64_t p) {
    if (p == 2) return 1;
    for (std::int64_t g = 2; g < p; ++g)
      if (multiplicative_order(g, p) == p - 1) return g;
    throw std::logic_error("no primitive root found");
  }

  void build_prime(std::int64_t g) {
    const std::int64_t p = spec_.p;
    exp_.assign(static_cast<std::size_t>(p - 1), 0);
    log_.assign(static_cast<std::size_t>(p), -1);
    std::int64_t x = 1;
    for (std::int64_t m = 0; m < p - 1; ++m) {
      exp_[static_cast<std::size_t>(m)] = x;
      log_[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(m);
      x = x * g % p;
    }
    finish();
  }

  // Fills exp/log by iterating multiplication by x modulo f; returns false
  // as soon as x is seen to have order < q - 1.
  bool try_build_poly(const std::vector<std::int64_t>& f) {
    const std::int64_t p = spec_.p, q = spec_.q;
    const int r = spec_.r;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(r), 0), next(static_cast<std::size_t>(r));
    cur[0] = 1;
    exp_.assign(static_cast<std::size_t>(q - 1), 0);
    log_.assign(static_cast<std::size_t>(q), -1);
    auto encode = [&](const std::vector<std::int64_t>& c) {
      std::int64_t idx = 0;
      for (int j = r - 1; j >= 0; --j) idx = idx * p + c[static_cast<std::size_t>(j)];
      return idx;
    };
    for (std::int64_t m = 0; m < q - 1; ++m) {
      const std::int64_t idx = encode(cur);
      if (log_[static_cast<std::size_t>(idx)] >= 0 || idx == 0) return false;
      exp_[static_cast<std::size_t>(m)] = idx;
      log_[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(m);
      // multiply by x: shift up, then subtract top * f
      const std::int64_t top = cur[static_cast<std::size_t>(r - 1)];
      next[0] = mod(-top * f[0], p);
      for (int j = 1; j < r; ++j)
        next[static_cast<std::size_t>(j)] =
            mod(cur[static_cast<std::size_t>(j - 1)] - top * f[static_cast<std::size_t>(j)], p);
      cur.swap(next);
    }
    if (encode(cur) != 1) return false;
    finish();
    return true;
  }

  void finish() {
    const std::int64_t n = order();
    neg_shift_ = spec_.p == 2 ? 0 : static_cast<std::int32_t>(n / 2);
    zech_.assign(static_cast<std::size_t>(n), -1);
    for (std::int64_t m = 0; m < n; ++m) {
      // 1 + w^m via coefficients: only the constant digit changes.
      const std::int64_t idx = exp_[static_cast<std::size_t>(m)];
      const std::int64_t c0 = idx % spec_.p;
      const std::int64_t sum = idx - c0 + (c0 + 1) % spec_.p;
      zech_[static_cast<std::size_t>(m)] = log_[static_cast<std::size_t>(sum)];
    }
  }

  FieldSpec spec_;
  std::vector<std::int64_t> exp_;
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> zech_;
  std::int32_t neg_shift_ = 0;
};

inline FieldTable build_field(std::int64_t p, int r, std::int64_t cap = FieldTable::default_cap) {
  return FieldTable(p, r, cap);
}

/// Field of order q (q must be a prime power).
inline FieldTable build_field_of_order(std::int64_t q, std::int64_t cap = FieldTable::default_cap) {
  const auto [p, r] = prime_power_decomposition(q);
  require(r > 0, "build_field: q = " + std::to_string(q) + " is not a prime power");
  return FieldTable(p, r, cap);
}

/// True iff k >= 2 is even, q is a prime power and q = k + 1 (mod 2k).
inline bool valid_modulus(std::int64_t q, std::int64_t k) noexcept {
  if (k < 2 || k % 2 != 0 || q < 2) return false;
  return mod(q, 2 * k) == mod(k + 1, 2 * k) && is_prime_power(q);
}

inline void require_valid(const FieldTable& f, int k) {
  require(valid_modulus(f.q(), k), "invalid parameters: need k even >= 2 and q = k+1 (mod 2k), got q = " +
                                       std::to_string(f.q()) + ", k = " + std::to_string(k));
}

/// All primitive monic moduli of degree r over Z_p in lexicographic order
/// (c0 first), at most `limit` of them. Used for isomorphism checks.
inline std::vector<std::vector<std::int64_t>> primitive_moduli(std::int64_t p, int r, std::size_t limit) {
  std::vector<std::vector<std::int64_t>> out;
  std::int64_t q = 1;
  for (int i = 0; i < r; ++i) q *= p;
  for (std::int64_t idx = 0; idx < q && out.size() < limit; ++idx) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(r) + 1, 1);
    std::int64_t v = idx;
    for (int j = r - 1; j >= 0; --j) {
      f[static_cast<std::size_t>(j)] = v % p;
      v /= p;
    }
    if (f[0] == 0) continue;
    try {
      FieldTable t(f, p);
      out.push_back(std::move(f));
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

}  // namespace paley
