#pragma once

// Reduction and transformation formulas for 2F1(.|1) and 3F2(.|1), checked
// exactly on random character parameters.

#include "paley/hypergeometric.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace paley {

namespace detail {

struct HypIdentity {
  std::string name;
  // returns lhs == rhs for parameters (A, B, C, D, E)
  std::function<bool(CharIndex, CharIndex, CharIndex, CharIndex, CharIndex)> holds;
};

inline std::vector<HypIdentity> hypergeometric_identities(const FieldTable& f) {
  const CharGroup G(f);
  const FieldElem one = f.one();
  const ScaledValue inv_q = scaled_integer(1, f.q());
  const CharIndex eps = G.trivial();
  auto F3 = [&f, one](CharIndex a, CharIndex b, CharIndex c, CharIndex d, CharIndex e) {
    return f3f2_charsum(f, a, b, c, d, e, one);
  };
  auto F2 = [&f, one](CharIndex a, CharIndex b, CharIndex c) { return f2f1_charsum(f, a, b, c, one); };
  auto Bn = [&f](CharIndex a, CharIndex b) { return binom(f, a, b); };
  auto sgn = [&f](CharIndex a) { return scaled_integer(char_sign_at_minus_one(f, a)); };
  auto M = [G](CharIndex a, CharIndex b) { return G.mul(a, b); };
  auto Dv = [G](CharIndex a, CharIndex b) { return G.div(a, b); };
  auto I = [G](CharIndex a) { return G.inv(a); };

  std::vector<HypIdentity> ids;
  ids.push_back({"reduction 3F2(e,B,C;D,E)", [=](auto, auto B, auto C, auto D, auto E) {
                   return F3(eps, B, C, D, E) == -(inv_q * F2(Dv(B, D), Dv(C, D), Dv(E, D))) + Bn(B, D) * Bn(C, E);
                 }});
  ids.push_back({"reduction 3F2(A,e,C;D,E)", [=](auto A, auto, auto C, auto D, auto E) {
                   return F3(A, eps, C, D, E) ==
                          sgn(A) * Bn(D, A) * F2(Dv(A, D), Dv(C, D), Dv(E, D)) - sgn(D) * inv_q * Bn(C, E);
                 }});
  ids.push_back({"reduction 3F2(A,B,C;A,E)", [=](auto A, auto B, auto C, auto, auto E) {
                   return F3(A, B, C, A, E) == Bn(B, A) * F2(B, C, E) - sgn(I(A)) * inv_q * Bn(Dv(C, A), Dv(E, A));
                 }});
  ids.push_back({"reduction 3F2(A,B,C;B,E)", [=](auto A, auto B, auto C, auto, auto E) {
                   return F3(A, B, C, B, E) == -(inv_q * F2(A, C, E)) + Bn(Dv(A, B), I(B)) * Bn(Dv(C, B), Dv(E, B));
                 }});
  ids.push_back({"reduction 3F2(A,B,C;D,B)", [=](auto A, auto B, auto C, auto D, auto) {
                   return F3(A, B, C, D, B) ==
                          Bn(Dv(C, D), Dv(B, D)) * F2(A, C, D) - sgn(M(B, D)) * inv_q * Bn(Dv(A, B), I(B));
                 }});
  ids.push_back({"reduction 3F2(A,B,C;D,ABC/D)", [=](auto A, auto B, auto C, auto D, auto) {
                   const CharIndex E = Dv(M(M(A, B), C), D);
                   return F3(A, B, C, D, E) == sgn(M(B, C)) * Bn(C, Dv(D, A)) * Bn(B, Dv(D, C)) -
                                                   sgn(M(B, D)) * inv_q * Bn(Dv(D, B), A);
                 }});
  ids.push_back({"reduction 2F1(A,B;C|1) = A(-1)(B over C/A)", [=](auto A, auto B, auto C, auto, auto) {
                   return F2(A, B, C) == sgn(A) * Bn(B, Dv(C, A));
                 }});
  ids.push_back({"permutation (B,D) <-> (C,E)", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) == F3(A, C, B, E, D);
                 }});
  ids.push_back({"transformation T1", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) == F3(Dv(B, D), Dv(A, D), Dv(C, D), I(D), Dv(E, D));
                 }});
  ids.push_back({"transformation T2", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) ==
                          sgn(M(M(A, B), M(C, M(D, E)))) * F3(A, Dv(A, D), Dv(A, E), Dv(A, B), Dv(A, C));
                 }});
  ids.push_back({"transformation T3", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) ==
                          sgn(M(M(A, B), M(C, M(D, E)))) * F3(Dv(B, D), B, Dv(B, E), Dv(B, A), Dv(B, C));
                 }});
  ids.push_back({"transformation T4", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) == sgn(M(A, E)) * F3(A, B, Dv(E, C), Dv(M(A, B), D), E);
                 }});
  ids.push_back({"transformation T5", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) == sgn(M(A, D)) * F3(A, Dv(D, B), C, D, Dv(M(A, C), E));
                 }});
  ids.push_back({"transformation T6", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) == sgn(B) * F3(Dv(D, A), B, C, D, Dv(M(B, C), E));
                 }});
  ids.push_back({"transformation T7", [=](auto A, auto B, auto C, auto D, auto E) {
                   return F3(A, B, C, D, E) ==
                          sgn(M(A, B)) * F3(Dv(D, A), Dv(D, B), C, D, Dv(M(D, E), M(A, B)));
                 }});
  return ids;
}

}  // namespace detail

/// Evaluates both sides of every reduction and transformation formula on
/// `trials` random parameter choices. Even-numbered trials draw arbitrary
/// characters of F_q^*, odd-numbered ones draw powers of chi_k.
inline CheckReport identity_suite(const FieldTable& f, int k, int trials, std::uint64_t seed = 1) {
  require_valid(f, k);
  const CharGroup G(f);
  const CharIndex ck = chi_k(f, k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> any(0, G.order - 1), power(0, k - 1);
  std::vector<std::array<CharIndex, 5>> params;
  for (int i = 0; i < trials; ++i) {
    std::array<CharIndex, 5> p{};
    for (auto& c : p) c = (i % 2 == 0) ? G.make(any(rng)) : G.pow(ck, power(rng));
    params.push_back(p);
  }
  CheckReport rep;
  for (const auto& id : detail::hypergeometric_identities(f)) {
    int fails = 0;
    std::string first;
    for (const auto& p : params) {
      if (!id.holds(p[0], p[1], p[2], p[3], p[4])) {
        if (fails++ == 0) {
          first = "first failure at (";
          for (std::size_t j = 0; j < 5; ++j) first += (j ? "," : "") + std::to_string(p[j].t);
          first += ")";
        }
      }
    }
    rep.add(id.name, fails == 0,
            std::to_string(trials - fails) + "/" + std::to_string(trials) + " draws" + (first.empty() ? "" : "; " + first));
  }
  return rep;
}

}  // namespace paley
