#pragma once

// Searching G_k(q) for vanishing transitive subtournament counts, and the
// multicolor directed Ramsey lower bounds they give.

#include "paley/common.hpp"
#include "paley/digraph.hpp"
#include "paley/field.hpp"
#include "paley/formulas.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace paley {

/// Prime powers q < qmax with q = k+1 (mod 2k), ascending.
inline std::vector<std::int64_t> enumerate_q(int k, std::int64_t qmax) {
  require(k >= 2 && k % 2 == 0, "enumerate_q: k must be even and >= 2");
  std::vector<std::int64_t> out;
  if (qmax <= 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(qmax), false);
  for (std::int64_t i = 2; i < qmax; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t j = i * i; j < qmax; j += i) composite[static_cast<std::size_t>(j)] = true;
    for (std::int64_t pw = i; pw < qmax; pw *= i) {
      if (pw % (2 * k) == k + 1) out.push_back(pw);
      if (pw > qmax / i) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Worker count: PALEY_THREADS if set, else the hardware concurrency.
inline unsigned default_threads() {
  if (const char* env = std::getenv("PALEY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Applies fn to every index in [0, n) on `threads` workers; results land in
/// index order regardless of scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<T> out(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  return out;
}

/// K3(G_k(q)) = 0 iff H_k(q) has no edges; K4(G_k(q)) = 0 iff H^1_k(q) has
/// none. Both are decided by direct edge search.
inline bool km_vanishes(const FieldTable& f, int k, int m) {
  require(m == 3 || m == 4, "km_vanishes: m must be 3 or 4");
  require_valid(f, k);
  const Digraph h = build_H(build_G(f, k));
  return m == 3 ? !h.has_edge() : !build_H1(h).has_edge();
}

struct BoundRecord {
  int t = 0, m = 0, k = 0;
  std::int64_t qmax = 0;
  std::vector<std::int64_t> witnesses;  // every q with K_m(G_k(q)) = 0
  std::optional<std::int64_t> q_star;   // largest witness
  std::optional<std::int64_t> bound;    // q_star + 1 <= R_t(m)
};

inline BoundRecord search_zero(int k, int m, std::int64_t qmax, unsigned threads = default_threads()) {
  require(m == 3 || m == 4, "search_zero: m must be 3 or 4");
  const auto qs = enumerate_q(k, qmax);
  const auto hits = parallel_map<char>(qs.size(), threads, [&](std::size_t i) -> char {
    const FieldTable f = build_field_of_order(qs[i]);
    return km_vanishes(f, k, m) ? 1 : 0;
  });
  BoundRecord rec;
  rec.t = k / 2;
  rec.m = m;
  rec.k = k;
  rec.qmax = qmax;
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (hits[i]) rec.witnesses.push_back(qs[i]);
  if (!rec.witnesses.empty()) {
    rec.q_star = rec.witnesses.back();
    rec.bound = *rec.q_star + 1;
  }
  return rec;
}

struct Table1Row {
  int t = 0;
  BoundRecord r3, r4;
};

/// Lower bounds for R_t(3) and R_t(4), t = 1..5, from q < qmax.
inline std::vector<Table1Row> table1(std::int64_t qmax, unsigned threads = default_threads(), int max_t = 5) {
  std::vector<Table1Row> rows;
  for (int t = 1; t <= max_t; ++t) rows.push_back({t, search_zero(2 * t, 3, qmax, threads), search_zero(2 * t, 4, qmax, threads)});
  return rows;
}

/// Re-checks every witness independently: by the Jacobi-sum formula for
/// K3 or K4, and for q <= spot_cap by brute force on the multicolor
/// tournament P_k(q).
inline CheckReport verify_witnesses(const BoundRecord& rec, std::int64_t spot_cap = 50) {
  CheckReport rep;
  for (auto q : rec.witnesses) {
    const FieldTable f = build_field_of_order(q);
    const BigInt formula = rec.m == 3 ? k3_thm3(f, rec.k) : k4_thm2(f, rec.k, ResidualMode::full);
    std::string detail = "formula=" + formula.str();
    bool ok = formula == 0;
    if (q <= spot_cap) {
      const auto mono = multicolor_tournament(f, rec.k).count_monochromatic_transitive(rec.m);
      ok = ok && mono == 0;
      detail += " monochromatic=" + std::to_string(mono);
    }
    rep.add("k=" + std::to_string(rec.k) + " m=" + std::to_string(rec.m) + " q=" + std::to_string(q), ok, detail);
  }
  return rep;
}

/// A starting point for the product relation
/// R_t(m) >= (R_{t-1}(m) - 1)(R(m) - 1) + 1.
struct CompositeSeed {
  int s = 1;         // colour count of the seed bound
  BigInt seed = 0;   // R_s(m) >= seed
  BigInt two_color;  // R(m) = R_1(m) >= two_color
};

inline BigInt composite_bound(int t, const CompositeSeed& base) {
  require(base.s >= 1 && t >= base.s, "composite_bound: need t >= s >= 1");
  require(base.seed >= 1 && base.two_color >= 2, "composite_bound: seeds must be positive bounds");
  BigInt r = base.seed;
  for (int i = base.s + 1; i <= t; ++i) r = (r - 1) * (base.two_color - 1) + 1;
  return r;
}

}  // namespace paley
