#pragma once

// The group generated by the eight parameter maps T1..T8 acting on X_k, the
// 5-tuples whose signed 3F2(.|1) terms survive the reductions, with the
// sign each map induces on the signed values.

#include "paley/common.hpp"
#include "paley/hypergeometric.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace paley {

inline bool in_xk(const Tuple5& t, int k) {
  for (int i = 0; i < 3; ++i) {
    const int ti = t[static_cast<std::size_t>(i)];
    if (ti == 0 || ti == t[3] || ti == t[4]) return false;
  }
  return mod(t[0] + t[1] + t[2] - t[3] - t[4], k) != 0;
}

/// All of X_k in lexicographic order.
inline std::vector<Tuple5> enumerate_xk(int k) {
  std::vector<Tuple5> out;
  F3F2Table::for_each_tuple(k, [&](const Tuple5& t) {
    if (in_xk(t, k)) out.push_back(t);
  });
  return out;
}

/// A parameter map together with the sign it induces: for every t,
///   signed3F2(t) = sign(t) * signed3F2(map(t)).
struct Generator {
  std::string name;
  std::function<Tuple5(const Tuple5&, int)> map;
  std::function<int(const Tuple5&)> sign;
};

/// T1..T8. Each sign is (-1)^e where e is the exponent of chi_k(-1) in the
/// prefactor of the underlying transformation, plus the change of the
/// (t3 + t5) parity carried by the signed normalization.
inline std::vector<Generator> generators(int k) {
  require(k >= 2 && k % 2 == 0, "generators: k must be even and >= 2");
  auto m = [k](std::int64_t v) { return static_cast<int>(mod(v, k)); };
  auto par = [](std::int64_t e) { return (mod(e, 2) == 0) ? 1 : -1; };
  std::vector<Generator> g;
  g.push_back({"T1",
               [m](const Tuple5& t, int) {
                 return Tuple5{m(t[1] - t[3]), m(t[0] - t[3]), m(t[2] - t[3]), m(-t[3]), m(t[4] - t[3])};
               },
               [](const Tuple5&) { return 1; }});
  g.push_back({"T2",
               [m](const Tuple5& t, int) {
                 return Tuple5{t[0], m(t[0] - t[3]), m(t[0] - t[4]), m(t[0] - t[1]), m(t[0] - t[2])};
               },
               [par](const Tuple5& t) { return par(t[0] + t[1] + t[2] + t[3] + t[4]); }});
  g.push_back({"T3",
               [m](const Tuple5& t, int) {
                 return Tuple5{m(t[1] - t[3]), t[1], m(t[1] - t[4]), m(t[1] - t[0]), m(t[1] - t[2])};
               },
               [par](const Tuple5& t) { return par(t[0] + t[1] + t[2] + t[3] + t[4]); }});
  g.push_back({"T4",
               [m](const Tuple5& t, int) { return Tuple5{t[0], t[1], m(t[4] - t[2]), m(t[0] + t[1] - t[3]), t[4]}; },
               [par](const Tuple5& t) { return par(t[0]); }});
  g.push_back({"T5",
               [m](const Tuple5& t, int) { return Tuple5{t[0], m(t[3] - t[1]), t[2], t[3], m(t[0] + t[2] - t[4])}; },
               [par](const Tuple5& t) { return par(t[2] + t[3]); }});
  g.push_back({"T6",
               [m](const Tuple5& t, int) { return Tuple5{m(t[3] - t[0]), t[1], t[2], t[3], m(t[1] + t[2] - t[4])}; },
               [par](const Tuple5& t) { return par(t[2]); }});
  g.push_back({"T7",
               [m](const Tuple5& t, int) {
                 return Tuple5{m(t[3] - t[0]), m(t[3] - t[1]), t[2], t[3], m(t[3] + t[4] - t[0] - t[1])};
               },
               [par](const Tuple5& t) { return par(t[3]); }});
  g.push_back({"T8", [](const Tuple5& t, int) { return Tuple5{t[0], t[2], t[1], t[4], t[3]}; },
               [par](const Tuple5& t) { return par(t[1] + t[2] + t[3] + t[4]); }});
  return g;
}

struct OrbitMember {
  Tuple5 tuple;
  int sign;  // relative to the representative, along the BFS tree
};

struct OrbitRecord {
  Tuple5 representative;  // lexicographically smallest element
  std::int64_t size = 0;
  std::int64_t net = 0;   // sum of member signs; 0 when zero_valued
  bool zero_valued = false;
  std::vector<OrbitMember> members;
};

inline std::string to_string(const Tuple5& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

/// Orbits of X_k with sign bookkeeping, sorted by representative.
/// `generator_order` permutes the order in which generators are tried
/// during the search; results do not depend on it.
inline std::vector<OrbitRecord> enumerate_orbits(int k, std::vector<int> generator_order = {}) {
  require(k >= 2 && k % 2 == 0, "enumerate_orbits: k must be even and >= 2");
  const auto gens = generators(k);
  if (generator_order.empty())
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) generator_order.push_back(i);
  const std::size_t K = static_cast<std::size_t>(k);
  auto encode = [K](const Tuple5& t) {
    std::size_t c = 0;
    for (int v : t) c = c * K + static_cast<std::size_t>(v);
    return c;
  };
  std::vector<int> sign_of(K * K * K * K * K, 0);  // 0 = unvisited
  std::vector<OrbitRecord> out;
  for (const Tuple5& start : enumerate_xk(k)) {
    if (sign_of[encode(start)] != 0) continue;
    OrbitRecord rec;
    rec.representative = start;
    std::deque<Tuple5> queue{start};
    sign_of[encode(start)] = 1;
    while (!queue.empty()) {
      const Tuple5 t = queue.front();
      queue.pop_front();
      const int st = sign_of[encode(t)];
      rec.members.push_back({t, st});
      for (int gi : generator_order) {
        const auto& g = gens[static_cast<std::size_t>(gi)];
        const Tuple5 u = g.map(t, k);
        const int su = st * g.sign(t);
        int& slot = sign_of[encode(u)];
        if (slot == 0) {
          slot = su;
          queue.push_back(u);
        } else if (slot != su) {
          rec.zero_valued = true;
        }
      }
    }
    rec.size = static_cast<std::int64_t>(rec.members.size());
    if (!rec.zero_valued)
      for (const auto& mbr : rec.members) rec.net += mbr.sign;
    std::sort(rec.members.begin(), rec.members.end(),
              [](const OrbitMember& a, const OrbitMember& b) { return a.tuple < b.tuple; });
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) { return a.representative < b.representative; });
  return out;
}

struct OrbitLocation {
  std::size_t orbit;
  int sign;  // of the tuple relative to the orbit's representative
};

inline std::optional<OrbitLocation> locate(const std::vector<OrbitRecord>& orbits, const Tuple5& t) {
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& ms = orbits[i].members;
    auto it = std::lower_bound(ms.begin(), ms.end(), t,
                               [](const OrbitMember& m, const Tuple5& x) { return m.tuple < x; });
    if (it != ms.end() && it->tuple == t) return OrbitLocation{i, it->sign};
  }
  return std::nullopt;
}

/// Net contribution of an orbit measured against one of its members, i.e.
/// the coefficient of signed3F2(t) when the orbit's sum is written in terms
/// of t instead of the representative.
inline std::int64_t net_relative_to(const std::vector<OrbitRecord>& orbits, const Tuple5& t) {
  const auto loc = locate(orbits, t);
  require(loc.has_value(), "net_relative_to: " + to_string(t) + " is not in X_k");
  return loc->sign * orbits[loc->orbit].net;
}

/// |X_k| = (k-1)(k^4 - 9k^3 + 36k^2 - 69k + 51).
inline std::int64_t xk_size_formula(std::int64_t k) {
  return (k - 1) * (k * k * k * k - 9 * k * k * k + 36 * k * k - 69 * k + 51);
}

/// Closed form for the number of orbits of X_k, with its residue-class
/// correction modulo 12.
inline std::int64_t orbit_count_formula(std::int64_t k) {
  require(k >= 2, "orbit_count_formula: k must be >= 2");
  std::int64_t main = (k - 1) * (k * k * k * k - 9 * k * k * k + 61 * k * k - 189 * k + 280);
  std::int64_t corr = 0;
  switch (k % 12) {
    case 1: case 5: case 7: case 11: corr = 0; break;
    case 3: case 9: corr = 40 * k - 200; break;
    case 2: case 10: corr = 105 * k - 180; break;
    case 4: case 8: corr = 105 * k - 240; break;
    case 6: corr = 145 * k - 380; break;
    case 0: corr = 145 * k - 440; break;
  }
  const std::int64_t total = main + corr;
  if (total % 120 != 0) throw NonIntegral("orbit_count_formula: bracket not divisible by 120");
  return total / 120;
}

/// Order of the permutation group the generators induce on X_k.
inline std::int64_t induced_group_order(int k) {
  const auto xs = enumerate_xk(k);
  const auto gens = generators(k);
  const std::size_t K = static_cast<std::size_t>(k);
  std::vector<std::int32_t> index(K * K * K * K * K, -1);
  auto encode = [K](const Tuple5& t) {
    std::size_t c = 0;
    for (int v : t) c = c * K + static_cast<std::size_t>(v);
    return c;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) index[encode(xs[i])] = static_cast<std::int32_t>(i);
  using Perm = std::vector<std::int32_t>;
  std::vector<Perm> gperms;
  for (const auto& g : gens) {
    Perm p(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto j = index[encode(g.map(xs[i], k))];
      require(j >= 0, "induced_group_order: generator " + g.name + " leaves X_k");
      p[i] = j;
    }
    gperms.push_back(std::move(p));
  }
  Perm id(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) id[i] = static_cast<std::int32_t>(i);
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    const Perm cur = queue.front();
    queue.pop_front();
    for (const auto& g : gperms) {
      Perm nxt(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) nxt[i] = g[static_cast<std::size_t>(cur[i])];
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
    require(seen.size() <= 100000, "induced_group_order: group unexpectedly large");
  }
  return static_cast<std::int64_t>(seen.size());
}

/// Checks that signed 3F2(t|1) agrees with sign * value(representative) on
/// every orbit element, that zero-valued orbits evaluate to 0, and that the
/// orbit-weighted sum equals the full sum over X_k.
inline CheckReport verify_orbit_values(const F3F2Table& table, const std::vector<OrbitRecord>& orbits) {
  CheckReport rep;
  const int k = table.k();
  CycNum full(k), reduced(k);
  std::int64_t bad = 0, checked = 0;
  std::string first_bad;
  for (const auto& orb : orbits) {
    const CycNum rep_value = table.signed_q2_value(orb.representative);
    if (orb.zero_valued && !rep_value.is_zero()) {
      ++bad;
      if (first_bad.empty()) first_bad = "zero-valued orbit " + to_string(orb.representative) + " is nonzero";
    }
    for (const auto& mbr : orb.members) {
      const CycNum v = table.signed_q2_value(mbr.tuple);
      full += v;
      ++checked;
      const CycNum expect = mbr.sign > 0 ? rep_value : -rep_value;
      if (!(v == expect)) {
        ++bad;
        if (first_bad.empty()) first_bad = to_string(mbr.tuple) + " vs representative " + to_string(orb.representative);
      }
    }
    reduced += rep_value * BigInt(orb.net);
  }
  rep.add("orbit values equal up to tracked sign", bad == 0,
          std::to_string(checked) + " tuples checked" + (first_bad.empty() ? "" : "; " + first_bad));
  rep.add("sum over X_k equals orbit-weighted sum", full == reduced);
  return rep;
}

inline CheckReport verify_orbit_values(const FieldTable& f, int k) {
  require_valid(f, k);
  return verify_orbit_values(F3F2Table(f, k, f.one()), enumerate_orbits(k));
}

}  // namespace paley
