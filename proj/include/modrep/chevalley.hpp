#pragma once

// Chevalley basis structure constants and divided-power matrix calculus.
//
// Roots are addressed by signed ids: +(j+1) is the positive root with index
// j, -(j+1) its negative. Constants are fixed by declaring N_{a,b} > 0 on
// every extraspecial pair (a, b); everything else follows from the standard
// relations between the N's.

#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "modrep/linalg.hpp"
#include "modrep/rootsys.hpp"

namespace modrep {

using RootId = int;

inline RootId positive_id(std::size_t j) { return static_cast<RootId>(j) + 1; }
inline RootId negative_id(std::size_t j) { return -(static_cast<RootId>(j) + 1); }
inline std::size_t root_index(RootId id) { return static_cast<std::size_t>(std::abs(id)) - 1; }

/// A divided-power word: (simple root index, exponent) applied right to left.
struct LoweringWord {
  std::vector<std::pair<std::size_t, unsigned>> letters;

  /// Total weight drop in simple-root coordinates.
  RootCoeffs drop(std::size_t rank) const {
    RootCoeffs d(rank, 0);
    for (auto [i, m] : letters) d.at(i) += static_cast<int>(m);
    return d;
  }
};

class StructureConstants {
 public:
  /// signs[j] flips the convention on the extraspecial pair of positive root j.
  explicit StructureConstants(RootSystem R, std::vector<int> extraspecial_signs = {})
      : R_(std::move(R)), signs_(std::move(extraspecial_signs)) {
    if (signs_.empty()) signs_.assign(R_.num_positive(), 1);
    if (signs_.size() != R_.num_positive()) throw InputError("one extraspecial sign per positive root expected");
    const std::size_t np = R_.num_positive();
    extraspecial_.assign(np, {npos, npos});
    decomposition_.assign(np, {npos, npos});
    for (std::size_t x = 0; x < np; ++x) {
      if (R_.height(static_cast<std::size_t>(x)) == 1) continue;
      for (std::size_t a = 0; a < np && extraspecial_[x].first == npos; ++a) {
        if (auto b = sum_index(x, a, -1)) extraspecial_[x] = {a, *b};
      }
      for (std::size_t i = 0; i < R_.rank(); ++i) {
        if (auto b = sum_index(x, R_.simple_index(i), -1)) {
          decomposition_[x] = {i, *b};
          break;
        }
      }
      if (extraspecial_[x].first == npos || decomposition_[x].first == npos)
        throw InternalError("positive root without decomposition");
    }
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t b = 0; b < np; ++b)
        for (RootId sa : {1, -1})
          for (RootId sb : {1, -1}) {
            const RootId ia = sa * positive_id(a), ib = sb * positive_id(b);
            if (sum(ia, ib)) compute(ia, ib);
          }
  }

  const RootSystem& root_system() const { return R_; }

  /// Coefficients of a signed root.
  RootCoeffs coeffs(RootId id) const {
    RootCoeffs c = R_.root(root_index(id));
    if (id < 0)
      for (auto& x : c) x = -x;
    return c;
  }

  /// Signed id of a + b, if it is a root.
  std::optional<RootId> sum(RootId a, RootId b) const {
    RootCoeffs c = coeffs(a);
    const RootCoeffs d = coeffs(b);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    return id_of(c);
  }

  std::optional<RootId> id_of(const RootCoeffs& c) const {
    if (auto j = R_.find_positive(c)) return positive_id(*j);
    RootCoeffs neg(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    if (auto j = R_.find_positive(neg)) return negative_id(*j);
    return std::nullopt;
  }

  /// N_{a,b}, zero when a + b is not a root.
  int N(RootId a, RootId b) const {
    auto it = table_.find({a, b});
    return it == table_.end() ? 0 : it->second;
  }

  /// Largest k with b - k a a root.
  int string_below(RootId a, RootId b) const {
    int k = 0;
    RootCoeffs c = coeffs(b);
    const RootCoeffs d = coeffs(a);
    while (true) {
      for (std::size_t i = 0; i < c.size(); ++i) c[i] -= d[i];
      if (!id_of(c)) return k;
      ++k;
    }
  }

  const std::map<std::pair<RootId, RootId>, int>& table() const { return table_; }

  /// Extraspecial pair (a, b) of the non-simple positive root j, as positive indices.
  std::pair<std::size_t, std::size_t> extraspecial(std::size_t j) const { return extraspecial_.at(j); }

  /// Fixed decomposition alpha_j = alpha_i + beta: smallest simple i with
  /// alpha_j - alpha_i a root. Returns (i, index of beta).
  std::pair<std::size_t, std::size_t> decomposition(std::size_t j) const { return decomposition_.at(j); }

  /// Left-bracketing word of simple indices: alpha = alpha_{i1} + (alpha_{i2} + (...)).
  std::vector<std::size_t> bracket_word(std::size_t j) const {
    std::vector<std::size_t> w;
    while (R_.height(j) > 1) {
      auto [i, b] = decomposition_.at(j);
      w.push_back(i);
      j = b;
    }
    for (std::size_t i = 0; i < R_.rank(); ++i)
      if (R_.simple_index(i) == j) w.push_back(i);
    return w;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // index of positive root x + sign * positive root a, when it is positive
  std::optional<std::size_t> sum_index(std::size_t x, std::size_t a, int sign) const {
    RootCoeffs c = R_.root(x);
    const auto& d = R_.root(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] += sign * d[i];
      if (c[i] < 0) return std::nullopt;
    }
    return R_.find_positive(c);
  }

  int norm(RootId a) const { return R_.root_norm(root_index(a)); }

  int compute(RootId a, RootId b) {
    auto it = table_.find({a, b});
    if (it != table_.end()) return it->second;
    if (!in_progress_.insert({a, b}).second) throw InternalError("cyclic structure constant recursion");
    const auto s = sum(a, b);
    if (!s) throw InternalError("structure constant requested for non-root sum");
    Rational value;
    if (a > 0 && b > 0) {
      const std::size_t ia = root_index(a), ib = root_index(b), x = root_index(*s);
      if (ia > ib) {
        value = -compute(b, a);
      } else {
        const auto [g, d] = extraspecial_[x];
        const RootId gid = positive_id(g), did = positive_id(d);
        if (ia == g) {
          value = signs_[x] * (string_below(a, b) + 1);
        } else {
          // four-root relation with (a, b, -g, -d)
          const RootId t = -gid, u = -did;
          Rational acc = 0;
          if (auto st = sum(b, t)) acc += Rational(compute(b, t) * compute(a, u), norm(*st));
          if (auto tr = sum(t, a)) acc += Rational(compute(t, a) * compute(b, u), norm(*tr));
          const int ntu = -compute(gid, did);
          value = -acc * norm(*s) / ntu;
        }
      }
    } else if (a < 0 && b < 0) {
      value = -compute(-a, -b);
    } else {
      // a + b + t = 0; N_ab / (t,t) = N_bt / (a,a) = N_ta / (b,b)
      const RootId t = -*s;
      const bool bt_same_sign = (b > 0) == (t > 0);
      if (bt_same_sign)
        value = Rational(norm(t) * compute(b, t), norm(a));
      else
        value = Rational(norm(t) * compute(t, a), norm(b));
    }
    if (denominator(value) != 1) throw InternalError("non-integral structure constant");
    const int v = numerator(value).convert_to<int>();
    if (std::abs(v) != string_below(a, b) + 1) throw InternalError("structure constant violates |N| = p + 1");
    in_progress_.erase({a, b});
    table_[{a, b}] = v;
    return v;
  }

  RootSystem R_;
  std::vector<int> signs_;
  std::vector<std::pair<std::size_t, std::size_t>> extraspecial_;
  std::vector<std::pair<std::size_t, std::size_t>> decomposition_;
  std::map<std::pair<RootId, RootId>, int> table_;
  std::set<std::pair<RootId, RootId>> in_progress_;
};

inline StructureConstants structure_constants(const RootSystem& R) { return StructureConstants(R); }

/// Elements of the Chevalley Lie algebra over Q, for checking the table.
/// Basis ids: signed root ids for X_a, and 1000 + i for H_i.
class ChevalleyAlgebra {
 public:
  using Element = std::map<int, Rational>;
  static constexpr int h_offset = 1000;

  explicit ChevalleyAlgebra(const StructureConstants& sc) : sc_(sc) {}

  Element bracket_basis(int x, int y) const {
    const auto& R = sc_.root_system();
    Element out;
    const bool xh = x >= h_offset, yh = y >= h_offset;
    if (xh && yh) return out;
    if (xh || yh) {
      const int h = xh ? x : y;
      const RootId r = xh ? y : x;
      const RootCoeffs c = sc_.coeffs(r);
      int v = 0;
      const std::size_t i = static_cast<std::size_t>(h - h_offset);
      for (std::size_t j = 0; j < R.rank(); ++j) v += R.cartan()[i][j] * c[j];
      if (v != 0) out[r] = xh ? v : -v;
      return out;
    }
    if (x == -y) {
      // [X_a, X_-a] = H_a
      const auto& co = R.coroot(root_index(x));
      for (std::size_t i = 0; i < R.rank(); ++i)
        if (co[i] != 0) out[h_offset + static_cast<int>(i)] = x > 0 ? co[i] : -co[i];
      return out;
    }
    if (auto s = sc_.sum(x, y)) out[*s] = sc_.N(x, y);
    return out;
  }

  Element bracket(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [x, cx] : a)
      for (const auto& [y, cy] : b)
        for (const auto& [z, cz] : bracket_basis(x, y)) out[z] += cx * cy * cz;
    prune(out);
    return out;
  }

  static Element basis(int x) { return Element{{x, Rational(1)}}; }

  static void prune(Element& e) {
    for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
  }

  /// [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
  Element jacobi(int a, int b, int c) const {
    Element out;
    for (const auto& part : {bracket(basis(a), bracket(basis(b), basis(c))),
                             bracket(basis(b), bracket(basis(c), basis(a))),
                             bracket(basis(c), bracket(basis(a), basis(b)))})
      for (const auto& [k, v] : part) out[k] += v;
    prune(out);
    return out;
  }

 private:
  const StructureConstants& sc_;
};

/// Coefficient c with X_a^{(m)} X_{-a}^{(n)} v = c * X_{-a}^{(n-m)} v for a
/// highest weight vector v (X_a v = 0) with <lambda, a^vee> = pairing_value.
/// Only the j = m term of the commutation formula survives; for m = n this is
/// C(<lambda, a^vee>, n), and for m > n the product kills v (returns 0).
inline Int sl2_commute_apply(long long m, long long n, long long pairing_value) {
  if (m < 0 || n < 0) throw InputError("sl2_commute_apply: exponents must be >= 0");
  if (m > n) return 0;
  return binomial(pairing_value - n + m, m);
}

/// Matrices of the simple Chevalley generators on a fixed module basis.
struct ModuleAction {
  std::vector<RatMatrix> e;  // X_{alpha_i}
  std::vector<RatMatrix> f;  // X_{-alpha_i}
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

/// Matrix of X_{-alpha} (sign = -1) or X_{alpha} (sign = +1) for the positive
/// root with index j, built by bracketing along the recorded decomposition.
inline RatMatrix root_vector_matrix(const StructureConstants& sc, std::size_t j, const ModuleAction& M,
                                    int sign = -1) {
  const auto& R = sc.root_system();
  if (j >= R.num_positive()) throw InputError("root_vector_matrix: not a positive root");
  if (M.e.size() != R.rank() || M.f.size() != R.rank()) throw InputError("module action has wrong rank");
  if (R.height(j) == 1) {
    for (std::size_t i = 0; i < R.rank(); ++i)
      if (R.simple_index(i) == j) return sign < 0 ? M.f[i] : M.e[i];
  }
  const auto [i, b] = sc.decomposition(j);
  const RatMatrix& gen = sign < 0 ? M.f[i] : M.e[i];
  const RatMatrix rest = root_vector_matrix(sc, b, M, sign);
  const RootId ai = sign * positive_id(R.simple_index(i)), bi = sign * positive_id(b);
  const int n = sc.N(ai, bi);
  return commutator(gen, rest).scaled(Rational(Int(1), Int(n)));
}

/// M^m / m! over Q.
inline RatMatrix divided_power_matrix(const RatMatrix& M, unsigned m) {
  if (M.rows() != M.cols()) throw InputError("divided_power_matrix: square matrix required");
  RatMatrix out = RatMatrix::identity(M.rows());
  for (unsigned k = 1; k <= m; ++k) out = (out * M).scaled(Rational(Int(1), Int(k)));
  return out;
}

/// Divided power on an admissible lattice basis; non-integrality is a lattice bug.
inline IntMatrix divided_power_integral(const RatMatrix& M, unsigned m) {
  return to_integer(divided_power_matrix(M, m), "divided power on admissible lattice");
}

}  // namespace modrep
