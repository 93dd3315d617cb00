#pragma once

// Parabolic subgroup schemes P containing B, encoded by exponent vectors:
// for each positive root a, n_a with Dist(P) ∩ Dist(U_{-a}) = Dist((U_{-a})_{n_a}).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modrep/chevalley.hpp"
#include "modrep/highestweight.hpp"
#include "modrep/rootsys.hpp"

namespace modrep {

/// Exponent n_a per positive root, in the root order of the system.
struct ExponentVector {
  std::vector<ExtNat> entries;

  bool operator==(const ExponentVector&) const = default;

  std::vector<ExtNat> simple_part(const RootSystem& R) const {
    std::vector<ExtNat> s;
    for (std::size_t i = 0; i < R.rank(); ++i) s.push_back(entries.at(R.simple_index(i)));
    return s;
  }
};

/// n_i = nu_p(<lambda, alpha_i^vee>) for every simple root.
inline std::vector<ExtNat> simple_exponents(const RootSystem& R, const Weight& lambda, long long p) {
  require_rank(R, lambda);
  require_dominant(lambda, "simple_exponents");
  std::vector<ExtNat> out;
  for (std::size_t i = 0; i < R.rank(); ++i) out.push_back(nu_p(lambda[i], p));
  return out;
}

/// For m = 1 .. <lambda, alpha^vee>: whether X_{-alpha}^{(m)} v is nonzero in L.
inline std::vector<bool> nonvanishing_divided_powers(const ModularSimple& L, const StructureConstants& sc,
                                                     std::size_t j) {
  const auto& V = L.module();
  const auto& R = V.root_system();
  const long long bound = pairing(R, V.highest_weight(), j);
  std::vector<bool> out;
  std::optional<WeightVector> y = V.highest_vector();
  for (long long m = 1; m <= bound; ++m) {
    if (y) {
      y = apply_root_vector(V, sc, negative_id(j), *y);
      if (y) divide_exact(y->coords, Int(m), "root vector divided power");
    }
    out.push_back(L.is_nonzero(y));
  }
  return out;
}

/// n_a = least n with X_{-a}^{(p^n)} v nonzero in L(lambda); inf when all
/// X_{-a}^{(m)} v vanish for 1 <= m <= <lambda, a^vee> (beyond that the
/// weight lambda - m a does not occur).
inline ExponentVector full_exponents(const ModularSimple& L, const StructureConstants& sc) {
  const auto& R = L.module().root_system();
  ExponentVector E;
  const long long p = L.prime();
  for (std::size_t j = 0; j < R.num_positive(); ++j) {
    const auto nz = nonvanishing_divided_powers(L, sc, j);
    ExtNat n = ExtNat::infinity();
    long long q = 1;
    for (unsigned k = 0; q <= static_cast<long long>(nz.size()); ++k, q *= p)
      if (nz[static_cast<std::size_t>(q - 1)]) {
        n = k;
        break;
      }
    E.entries.push_back(n);
  }
  return E;
}

inline ExponentVector full_exponents(const ModularSimple& L) {
  return full_exponents(L, StructureConstants(L.module().root_system()));
}

/// n_a = min of n_i over simple roots alpha_i in the support of a.
inline ExponentVector standard_closure(const RootSystem& R, const std::vector<ExtNat>& simple) {
  if (simple.size() != R.rank()) throw InputError("one exponent per simple root expected");
  ExponentVector E;
  for (std::size_t j = 0; j < R.num_positive(); ++j) {
    ExtNat n = ExtNat::infinity();
    for (std::size_t i = 0; i < R.rank(); ++i)
      if (R.root(j)[i] > 0) n = min(n, simple[i]);
    E.entries.push_back(n);
  }
  return E;
}

inline bool is_exceptional(const RootSystem& R, const ExponentVector& E) {
  if (E.entries.size() != R.num_positive()) throw InputError("exponent vector has wrong length");
  return !(E == standard_closure(R, E.simple_part(R)));
}

/// Number of positive roots with finite exponent, the dimension of G/P.
inline std::size_t orbit_dimension(const ExponentVector& E) {
  std::size_t d = 0;
  for (const auto& n : E.entries) d += n.is_finite() ? 1 : 0;
  return d;
}

/// dim P(L(lambda)); the orbit of the highest weight line sits inside it.
inline std::size_t embedding_dimension(const ModularSimple& L) {
  if (L.dimension() < 2) throw InputError("embedding_dimension: L(lambda) is one-dimensional (lambda = 0)");
  return L.dimension() - 1;
}

/// G_{n_1} P(alpha_1) ∩ ... ; simple roots with exponent inf are not in S'.
struct ParabolicStandardSpec {
  std::vector<ExtNat> simple;

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < simple.size(); ++i)
      if (simple[i].is_finite()) s.push_back(i);
    return s;
  }
};

struct LatticeGenerator {
  std::size_t simple;  // fundamental weight omega_i
  Int scale;           // p^{n_i}
};

class CharacterLattice {
 public:
  CharacterLattice(std::size_t rank, std::vector<LatticeGenerator> gens) : rank_(rank), gens_(std::move(gens)) {}

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeGenerator>& generators() const { return gens_; }

  /// a_i with chi = sum a_i p^{n_i} omega_i, when chi lies in the lattice.
  std::optional<std::vector<Int>> coefficients(const Weight& chi) const {
    if (chi.rank() != rank_) throw InputError("character has wrong rank");
    std::vector<bool> used(rank_, false);
    std::vector<Int> a;
    for (const auto& g : gens_) {
      used[g.simple] = true;
      const Int c = chi[g.simple];
      if (c % g.scale != 0) return std::nullopt;
      a.push_back(c / g.scale);
    }
    for (std::size_t i = 0; i < rank_; ++i)
      if (!used[i] && chi[i] != 0) return std::nullopt;
    return a;
  }

  bool contains(const Weight& chi) const { return coefficients(chi).has_value(); }

  std::string to_string() const {
    if (gens_.empty()) return "0";
    std::string s;
    for (const auto& g : gens_) {
      if (!s.empty()) s += " + ";
      s += "Z";
      if (g.scale != 1) s += "*" + g.scale.str();
      s += "*w" + std::to_string(g.simple + 1);
    }
    return s;
  }

 private:
  std::size_t rank_;
  std::vector<LatticeGenerator> gens_;
};

/// X(P) = sum over S' of Z p^{n_i} omega_i.
inline CharacterLattice character_lattice(const ParabolicStandardSpec& spec, long long p) {
  require_prime(p);
  std::vector<LatticeGenerator> g;
  for (auto i : spec.support()) g.push_back({i, ipow(p, spec.simple[i].value())});
  return CharacterLattice(spec.simple.size(), std::move(g));
}

/// Only standard intersections are handled; exceptional vectors are refused.
inline ParabolicStandardSpec standard_spec(const RootSystem& R, const ExponentVector& E) {
  if (is_exceptional(R, E))
    throw UnsupportedError("exceptional parabolic subgroup scheme: character lattice not determined here");
  return {E.simple_part(R)};
}

/// L(chi) very ample on G/P iff every a_i > 0 in chi = sum a_i p^{n_i} omega_i.
inline bool is_very_ample(const Weight& chi, const ParabolicStandardSpec& spec, long long p) {
  const auto a = character_lattice(spec, p).coefficients(chi);
  if (!a) throw InputError("not a character of the parabolic: " + chi.to_string());
  if (a->empty()) return false;
  for (const auto& x : *a)
    if (x <= 0) return false;
  return true;
}

/// Reference exponent tables keyed by root label; currently C4, omega_4, p = 2.
inline std::optional<std::map<std::string, ExtNat>> reference_table(const std::string& name) {
  if (name != "C4") return std::nullopt;
  const ExtNat inf = ExtNat::infinity();
  return std::map<std::string, ExtNat>{
      {"1000", inf}, {"1100", inf}, {"1110", inf}, {"0100", inf}, {"0110", inf}, {"0010", inf},
      {"0001", 0},   {"0011", 1},   {"0111", 1},   {"1111", 1},   {"0021", 0},   {"0121", 1},
      {"1121", 1},   {"0221", 0},   {"1221", 1},   {"2221", 0},
  };
}

}  // namespace modrep
