#pragma once

// Exact cyclotomic integers in the group ring Z[C_n].
//
// A CycNum of order n is a coefficient vector (c_0, ..., c_{n-1}) standing
// for sum c_j z^j with z = exp(2 pi i / n). The ring uses only z^n = 1, so
// the representation is not canonical; equality and integrality reduce
// modulo the n-th cyclotomic polynomial first. Binary operations on values
// of different orders lift both operands to the lcm of the orders.

#include "paley/common.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <span>
#include <vector>

namespace paley {

namespace detail {

// Coefficients of Phi_n, low degree first. Cached; thread-safe.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      const std::int64_t c = num[i];  // den is monic
      quot[i - dn] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    num.swap(quot);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace detail

class CycNum {
 public:
  CycNum() : CycNum(1) {}
  explicit CycNum(std::int64_t n) : n_(n), c_(static_cast<std::size_t>(n)) {
    require(n >= 1, "CycNum: root order must be >= 1");
  }

  static CycNum constant(std::int64_t n, const BigInt& v) {
    CycNum out(n);
    out.c_[0] = v;
    return out;
  }
  /// z_n^j.
  static CycNum root(std::int64_t n, std::int64_t j) {
    CycNum out(n);
    out.c_[static_cast<std::size_t>(mod(j, n))] = 1;
    return out;
  }
  /// Value sum counts[j] z_n^j.
  static CycNum from_counts(std::int64_t n, std::span<const std::int64_t> counts) {
    require(static_cast<std::int64_t>(counts.size()) == n, "CycNum::from_counts: size mismatch");
    CycNum out(n);
    for (std::size_t j = 0; j < counts.size(); ++j) out.c_[j] = counts[j];
    return out;
  }

  [[nodiscard]] std::int64_t order() const noexcept { return n_; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  BigInt& operator[](std::int64_t j) { return c_[static_cast<std::size_t>(mod(j, n_))]; }
  const BigInt& operator[](std::int64_t j) const { return c_[static_cast<std::size_t>(mod(j, n_))]; }

  /// Embedding Z[C_n] -> Z[C_m] for n | m.
  [[nodiscard]] CycNum lift(std::int64_t m) const {
    require(m % n_ == 0, "CycNum::lift: target order must be a multiple");
    if (m == n_) return *this;
    CycNum out(m);
    const std::int64_t s = m / n_;
    for (std::int64_t j = 0; j < n_; ++j) out.c_[static_cast<std::size_t>(j * s)] = c_[static_cast<std::size_t>(j)];
    return out;
  }

  /// Complex conjugation z -> z^-1.
  [[nodiscard]] CycNum conj() const {
    CycNum out(n_);
    for (std::int64_t j = 0; j < n_; ++j) out.c_[static_cast<std::size_t>(mod(-j, n_))] = c_[static_cast<std::size_t>(j)];
    return out;
  }

  /// Galois action z -> z^j, gcd(j, n) = 1.
  [[nodiscard]] CycNum galois(std::int64_t j) const {
    require(std::gcd(mod(j, n_), n_) == 1 || n_ == 1, "CycNum::galois: exponent not coprime to order");
    CycNum out(n_);
    for (std::int64_t i = 0; i < n_; ++i)
      out.c_[static_cast<std::size_t>(mod(i * j, n_))] += c_[static_cast<std::size_t>(i)];
    return out;
  }

  CycNum& operator+=(const CycNum& o) { return accumulate(o, 1); }
  CycNum& operator-=(const CycNum& o) { return accumulate(o, -1); }
  CycNum& operator*=(const BigInt& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  CycNum& operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const BigInt& s) { return a *= s; }
  friend CycNum operator*(const BigInt& s, CycNum a) { return a *= s; }
  friend CycNum operator-(CycNum a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    const std::int64_t m = std::lcm(a.n_, b.n_);
    if (a.n_ != m || b.n_ != m) return a.lift(m) * b.lift(m);
    CycNum out(m);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) nz.push_back(j);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j : nz) {
        std::size_t t = i + j;
        if (t >= static_cast<std::size_t>(m)) t -= static_cast<std::size_t>(m);
        out.c_[t] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  /// Remainder modulo Phi_n: coefficients of degree < phi(n), canonical.
  [[nodiscard]] std::vector<BigInt> reduced() const {
    const auto& phi = detail::cyclotomic_polynomial(n_);
    const std::size_t deg = phi.size() - 1;
    std::vector<BigInt> r = c_;
    for (std::size_t i = r.size(); i-- > deg;) {
      if (r[i] == 0) continue;
      const BigInt t = r[i];
      for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= t * phi[j];
    }
    r.resize(deg);
    return r;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : reduced())
      if (c != 0) return false;
    return true;
  }

  [[nodiscard]] bool is_rational_integer() const {
    const auto r = reduced();
    for (std::size_t j = 1; j < r.size(); ++j)
      if (r[j] != 0) return false;
    return true;
  }

  /// The rational integer this value equals; throws NotRational otherwise.
  [[nodiscard]] BigInt to_integer() const {
    const auto r = reduced();
    for (std::size_t j = 1; j < r.size(); ++j) {
      if (r[j] != 0) {
        std::ostringstream os;
        os << "value " << *this << " is not a rational integer";
        throw NotRational(os.str());
      }
    }
    return r.empty() ? BigInt(0) : r[0];
  }

  [[nodiscard]] std::complex<double> to_complex() const {
    std::complex<double> acc = 0.0;
    for (std::int64_t j = 0; j < n_; ++j) {
      const auto& c = c_[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
      acc += c.convert_to<double>() * std::polar(1.0, ang);
    }
    return acc;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) { return (a - b).is_zero(); }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& v) {
    os << "[n=" << v.n_ << ":";
    bool any = false;
    for (std::int64_t j = 0; j < v.n_; ++j) {
      const auto& c = v.c_[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      os << ' ' << c << "*z^" << j;
      any = true;
    }
    if (!any) os << " 0";
    return os << ']';
  }

 private:
  CycNum& accumulate(const CycNum& o, int sign) {
    if (o.n_ != n_) {
      const std::int64_t m = std::lcm(n_, o.n_);
      if (m != n_) *this = lift(m);
      if (m != o.n_) return accumulate(o.lift(m), sign);
    }
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (sign > 0)
        c_[j] += o.c_[j];
      else
        c_[j] -= o.c_[j];
    }
    return *this;
  }

  std::int64_t n_;
  std::vector<BigInt> c_;
};

inline CycNum root(std::int64_t n, std::int64_t j) { return CycNum::root(n, j); }
inline BigInt to_integer(const CycNum& v) { return v.to_integer(); }
inline std::complex<double> to_complex(const CycNum& v) { return v.to_complex(); }

}  // namespace paley
