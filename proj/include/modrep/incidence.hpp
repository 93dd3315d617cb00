#pragma once

// Line bundles on the unseparated incidence variety X = Z(s) in P^n x P^n,
// s = sum_i x_i^q y_i with q = p^r. L(a, b) is the restriction of O(a) x O(b).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "modrep/arith.hpp"
#include "modrep/errors.hpp"
#include "modrep/linalg.hpp"

namespace modrep {

inline constexpr long long default_incidence_cap = 20000;

struct IncidenceSpec {
  long long n = 2;
  long long p = 2;
  long long r = 1;

  void validate() const {
    if (n < 2) throw InputError("incidence: n must be at least 2");
    if (!is_prime(p)) throw InputError("incidence: p must be prime, got " + std::to_string(p));
    if (r < 1) throw InputError("incidence: r must be at least 1");
    if (r > 30) throw UnsupportedError("incidence: r too large");
  }
  long long q() const { return to_ll(ipow(p, static_cast<unsigned>(r))); }
  long long dim() const { return 2 * n - 1; }
};

struct BiDegree {
  long long a = 0;
  long long b = 0;
  bool operator==(const BiDegree&) const = default;
  bool effective() const { return a >= 0 && b >= 0; }
};

/// One monomial x^u y^v of the defining section, exponents indexed 0..n.
struct SectionTerm {
  std::vector<long long> x;
  std::vector<long long> y;
  bool operator==(const SectionTerm&) const = default;
  auto operator<=>(const SectionTerm&) const = default;
};

struct Section {
  std::vector<SectionTerm> terms;
  BiDegree bidegree;

  std::string to_string() const {
    std::string s;
    for (const auto& t : terms) {
      if (!s.empty()) s += " + ";
      for (std::size_t i = 0; i < t.x.size(); ++i) {
        if (t.x[i]) s += "x" + std::to_string(i) + (t.x[i] > 1 ? "^" + std::to_string(t.x[i]) : "");
        if (t.y[i]) s += "y" + std::to_string(i) + (t.y[i] > 1 ? "^" + std::to_string(t.y[i]) : "");
      }
    }
    return s;
  }

  /// Relabels coordinates i -> sigma(i) on both factors.
  Section permuted(const std::vector<std::size_t>& sigma) const {
    Section out{{}, bidegree};
    for (const auto& t : terms) {
      SectionTerm u{std::vector<long long>(t.x.size()), std::vector<long long>(t.y.size())};
      for (std::size_t i = 0; i < t.x.size(); ++i) {
        u.x.at(sigma.at(i)) = t.x[i];
        u.y.at(sigma.at(i)) = t.y[i];
      }
      out.terms.push_back(std::move(u));
    }
    std::sort(out.terms.begin(), out.terms.end());
    return out;
  }

  bool same_polynomial(const Section& o) const {
    auto a = terms, b = o.terms;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && bidegree == o.bidegree;
  }
};

inline Section defining_section(const IncidenceSpec& spec) {
  spec.validate();
  Section s{{}, {spec.q(), 1}};
  const auto m = static_cast<std::size_t>(spec.n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    SectionTerm t{std::vector<long long>(m, 0), std::vector<long long>(m, 0)};
    t.x[i] = spec.q();
    t.y[i] = 1;
    s.terms.push_back(std::move(t));
  }
  return s;
}

/// h^0(P^n, O(d)).
inline Int h0_projective(long long n, long long d) {
  if (n < 0) throw InputError("h0_projective: negative n");
  return d < 0 ? Int(0) : binomial(n + d, n);
}

/// h^n(P^n, O(d)) = h^0(O(-d-n-1)).
inline Int hn_projective(long long n, long long d) { return h0_projective(n, -d - n - 1); }

inline Int euler_projective(long long n, long long d) { return binomial(Int(d + n), n); }

enum class CohomologyStatus { closed_form, oracle, indeterminate };

inline const char* status_name(CohomologyStatus s) {
  switch (s) {
    case CohomologyStatus::closed_form: return "closed-form";
    case CohomologyStatus::oracle: return "oracle";
    case CohomologyStatus::indeterminate: return "indeterminate";
  }
  return "unknown";
}

struct CohomologyTable {
  std::vector<Int> dims;  // h^i for i = 0 .. 2n-1; lower bounds when indeterminate
  std::vector<Int> upper;  // equal to dims unless indeterminate
  CohomologyStatus status = CohomologyStatus::closed_form;
  std::vector<std::string> notes;

  Int euler() const {
    Int e = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) e += (i % 2 ? -1 : 1) * dims[i];
    return e;
  }
  bool exact() const { return status != CohomologyStatus::indeterminate; }
  bool higher_vanish() const {
    for (std::size_t i = 1; i < upper.size(); ++i)
      if (upper[i] != 0) return false;
    return true;
  }
};

/// Closed form for a, b >= 0 from the structure sequence and Serre duality.
inline CohomologyTable cohomology_effective(const IncidenceSpec& spec, const BiDegree& d) {
  spec.validate();
  if (!d.effective()) throw InputError("cohomology_effective needs a, b >= 0; use general_cohomology");
  const long long n = spec.n, q = spec.q();
  CohomologyTable t;
  t.dims.assign(static_cast<std::size_t>(spec.dim() + 1), Int(0));
  t.dims[0] = h0_projective(n, d.a) * h0_projective(n, d.b) - h0_projective(n, d.a - q) * h0_projective(n, d.b - 1);
  t.dims[static_cast<std::size_t>(n - 1)] += h0_projective(n, q - d.a - n - 1) * h0_projective(n, d.b - 1);
  t.upper = t.dims;
  return t;
}

inline BiDegree canonical_bidegree(const IncidenceSpec& spec) {
  spec.validate();
  return {spec.q() - spec.n - 1, -spec.n};
}

inline bool is_ample(const BiDegree& d) { return d.a > 0 && d.b > 0; }

namespace detail {

using Exponents = std::vector<long long>;

/// Exponent vectors of length k with entries >= lo summing to total.
inline std::vector<Exponents> compositions(std::size_t k, long long total, long long lo) {
  std::vector<Exponents> out;
  Exponents cur(k, lo);
  long long rest = total - lo * static_cast<long long>(k);
  if (rest < 0) return out;
  auto rec = [&](auto&& self, std::size_t i, long long left) -> void {
    if (i + 1 == k) {
      cur[i] = lo + left;
      out.push_back(cur);
      return;
    }
    for (long long v = left; v >= 0; --v) {
      cur[i] = lo + v;
      self(self, i + 1, left - v);
    }
  };
  if (k == 0) {
    if (rest == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, rest);
  return out;
}

/// Basis of H^s(P^n, O(c)) for s in {0, n}: monomials x^u for s = 0,
/// Cech classes x^{-m} with all m_i >= 1 for s = n (stored as -m).
inline std::vector<Exponents> cohomology_basis(long long n, long long c, bool top) {
  const auto k = static_cast<std::size_t>(n + 1);
  if (!top) return compositions(k, c, 0);
  auto ms = compositions(k, -c, 1);
  for (auto& m : ms)
    for (auto& v : m) v = -v;
  return ms;
}

/// Multiplication by x_i^e on the chosen basis; nullopt when the image is 0.
inline std::optional<Exponents> shift(const Exponents& u, std::size_t i, long long e, bool top) {
  Exponents v = u;
  v[i] += e;
  if (top && v[i] >= 0) return std::nullopt;
  return v;
}

/// Rank over F_p of multiplication by s on one Kunneth block.
inline std::size_t block_rank(const IncidenceSpec& spec, const BiDegree& src, bool xt, bool yt) {
  const long long n = spec.n, q = spec.q();
  const auto xs = cohomology_basis(n, src.a, xt), ys = cohomology_basis(n, src.b, yt);
  const auto xt_basis = cohomology_basis(n, src.a + q, xt), yt_basis = cohomology_basis(n, src.b + 1, yt);
  std::map<Exponents, std::size_t> xi, yi;
  for (std::size_t k = 0; k < xt_basis.size(); ++k) xi[xt_basis[k]] = k;
  for (std::size_t k = 0; k < yt_basis.size(); ++k) yi[yt_basis[k]] = k;
  ModMatrix m(xs.size() * ys.size(), xt_basis.size() * yt_basis.size());
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < ys.size(); ++b)
      for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        auto u = shift(xs[a], i, q, xt);
        auto v = shift(ys[b], i, 1, yt);
        if (!u || !v) continue;
        auto& e = m(a * ys.size() + b, xi.at(*u) * yt_basis.size() + yi.at(*v));
        e = (e + 1) % spec.p;
      }
  return row_reduce(std::move(m), spec.p).rank();
}

}  // namespace detail

struct GeneralOptions {
  long long cap = default_incidence_cap;  // max side of an oracle matrix
  bool force_oracle = false;              // compute every block by linear algebra
};

/// All h^i(X, L(a, b)) from 0 -> O(a-q, b-1) -> O(a, b) -> L -> 0 and Kunneth
/// on P^n x P^n. H^k of either end lives on blocks H^s x H^t, s, t in {0, n}.
inline CohomologyTable general_cohomology(const IncidenceSpec& spec, const BiDegree& d, GeneralOptions opt = {}) {
  spec.validate();
  const long long n = spec.n, q = spec.q();
  const BiDegree A{d.a - q, d.b - 1};
  const auto top = static_cast<std::size_t>(2 * n);
  std::vector<Int> hA(top + 2, 0), hB(top + 2, 0), rk_lo(top + 2, 0), rk_hi(top + 2, 0);
  bool used_oracle = false, indeterminate = false;
  std::vector<std::string> notes;

  auto h = [&](long long c, bool t) { return t ? hn_projective(n, c) : h0_projective(n, c); };
  for (int xt = 0; xt < 2; ++xt)
    for (int yt = 0; yt < 2; ++yt) {
      const auto k = static_cast<std::size_t>((xt + yt) * n);
      const Int dom = h(A.a, xt) * h(A.b, yt);
      const Int cod = h(d.a, xt) * h(d.b, yt);
      hA[k] += dom;
      hB[k] += cod;
      Int lo = 0, hi = 0;
      if (dom == 0 || cod == 0) {
      } else if (!opt.force_oracle && !xt && !yt) {
        lo = hi = dom;  // s is a nonzerodivisor
      } else if (!opt.force_oracle && xt && yt) {
        lo = hi = cod;  // dual of the injective H^0 x H^0 case
      } else if (dom > opt.cap || cod > opt.cap) {
        indeterminate = true;
        hi = dom < cod ? dom : cod;
        notes.push_back("block H^" + std::to_string(xt * n) + " x H^" + std::to_string(yt * n) + " in degree " +
                        std::to_string(k) + ": " + dom.str() + " x " + cod.str() + " exceeds cap");
      } else {
        used_oracle = true;
        lo = hi = Int(detail::block_rank(spec, A, xt, yt));
      }
      rk_lo[k] += lo;
      rk_hi[k] += hi;
    }

  CohomologyTable t;
  t.notes = std::move(notes);
  t.status = indeterminate ? CohomologyStatus::indeterminate
                           : (used_oracle ? CohomologyStatus::oracle : CohomologyStatus::closed_form);
  for (std::size_t k = 0; k <= top; ++k) {
    const Int lo = (hB[k] - rk_hi[k]) + (hA[k + 1] - rk_hi[k + 1]);
    const Int hi = (hB[k] - rk_lo[k]) + (hA[k + 1] - rk_lo[k + 1]);
    if (k == top) {
      if (hi != 0 && !indeterminate) throw InternalError("nonzero cohomology above dim X");
      break;
    }
    t.dims.push_back(lo);
    t.upper.push_back(hi);
  }
  return t;
}

/// kodaira: L (x) omega_X = L(a + q - n - 1, b - n) has no higher cohomology.
inline bool kodaira_check(const IncidenceSpec& spec, const BiDegree& d, GeneralOptions opt = {}) {
  if (!is_ample(d)) throw InputError("kodaira_check needs an ample bidegree (a, b > 0)");
  const BiDegree w = canonical_bidegree(spec);
  const auto t = general_cohomology(spec, {d.a + w.a, d.b + w.b}, opt);
  if (!t.exact()) throw IndeterminateError("kodaira_check: cohomology of L (x) omega_X is indeterminate");
  return t.higher_vanish();
}

/// chi(O(a, b)) - chi(O(a - q, b - 1)) on P^n x P^n.
inline Int expected_euler(const IncidenceSpec& spec, const BiDegree& d) {
  const long long n = spec.n, q = spec.q();
  return euler_projective(n, d.a) * euler_projective(n, d.b) -
         euler_projective(n, d.a - q) * euler_projective(n, d.b - 1);
}

/// dim of the (a, b) graded piece of F_p[x, y] / (s), by rank on monomials.
inline Int brute_force_h0(const IncidenceSpec& spec, const BiDegree& d, long long cap = default_incidence_cap) {
  spec.validate();
  if (!d.effective()) throw InputError("brute_force_h0 needs a, b >= 0");
  const long long n = spec.n, q = spec.q();
  const Int total = h0_projective(n, d.a) * h0_projective(n, d.b);
  if (total > cap) throw UnsupportedError("brute_force_h0: graded piece of dimension " + total.str() + " exceeds cap");
  if (d.a < q || d.b < 1) return total;
  return total - Int(detail::block_rank(spec, {d.a - q, d.b - 1}, false, false));
}

}  // namespace modrep
