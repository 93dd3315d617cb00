#pragma once

// Weyl modules over Z and their simple heads modulo p.
//
// V(lambda)_Z is grown weight space by weight space, in order of depth below
// lambda. A vector x of weight mu != lambda is identified with its raising
// image (e_1 x, ..., e_l x), which is injective on the simple Q-module. Each
// weight space lattice is the span of f_i^{(m)} w over simple i, m >= 1 and
// lattice basis vectors w of weight mu + m alpha_i; raising images of these
// generators follow from  e_j f_i^{(m)} = f_i^{(m)} e_j + delta_ij f_i^{(m-1)} (h_i - m + 1).
// The contravariant form comes from <f_i^{(m)} w, y> = <w, e_i^{(m)} y>.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modrep/chevalley.hpp"
#include "modrep/linalg.hpp"
#include "modrep/rootsys.hpp"

namespace modrep {

inline constexpr long long default_size_cap = 512;

/// f_i^{(m)} from one weight space into another: dim(target) x dim(source).
struct LoweringMap {
  std::size_t target;
  IntMatrix matrix;
};

struct WeightSpace {
  Weight mu;
  std::vector<long long> depth;  // lambda - mu on simple roots
  long long height = 0;
  std::size_t dim = 0;
  IntMatrix gram;
  std::vector<std::optional<std::size_t>> up;         // space of mu + alpha_i
  std::vector<IntMatrix> raise;                        // e_i: this -> up[i]
  std::map<std::pair<std::size_t, unsigned>, LoweringMap> lower;  // (i, m) -> f_i^{(m)}
};

/// A homogeneous vector: coordinates on the lattice basis of one weight space.
struct WeightVector {
  std::size_t space;
  IntVector coords;
};

class AdmissibleModule {
 public:
  const RootSystem& root_system() const { return R_; }
  const Weight& highest_weight() const { return lambda_; }
  const std::vector<WeightSpace>& spaces() const { return spaces_; }
  const WeightSpace& space(std::size_t k) const { return spaces_.at(k); }
  std::size_t dimension() const { return dim_; }

  std::optional<std::size_t> find(const Weight& mu) const {
    auto it = index_.find(mu);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::map<Weight, std::size_t> weight_dimensions() const {
    std::map<Weight, std::size_t> out;
    for (const auto& s : spaces_) out[s.mu] = s.dim;
    return out;
  }

  WeightVector highest_vector() const { return {0, IntVector{Int(1)}}; }

  std::optional<WeightVector> apply_e(std::size_t i, const WeightVector& x) const {
    const auto& s = spaces_.at(x.space);
    if (!s.up[i]) return std::nullopt;
    return WeightVector{*s.up[i], s.raise[i] * x.coords};
  }

  std::optional<WeightVector> apply_f(std::size_t i, unsigned m, const WeightVector& x) const {
    if (m == 0) return x;
    const auto& s = spaces_.at(x.space);
    auto it = s.lower.find({i, m});
    if (it == s.lower.end()) return std::nullopt;
    return WeightVector{it->second.target, it->second.matrix * x.coords};
  }

  /// e_i^{(m)} x, computed as e_i^m x / m! with exact division at every step.
  std::optional<WeightVector> apply_e_divided(std::size_t i, unsigned m, const WeightVector& x) const {
    std::optional<WeightVector> y = x;
    for (unsigned k = 1; k <= m && y; ++k) {
      y = apply_e(i, *y);
      if (y) divide_exact(y->coords, Int(k), "e_i divided power");
    }
    return y;
  }

  Int form(const WeightVector& x, const WeightVector& y) const {
    if (x.space != y.space) return 0;
    const auto gy = spaces_[x.space].gram * y.coords;
    Int s = 0;
    for (std::size_t k = 0; k < gy.size(); ++k) s += x.coords[k] * gy[k];
    return s;
  }

  /// Offsets of each weight space in the concatenated basis.
  std::vector<std::size_t> offsets() const {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (const auto& s : spaces_) {
      off.push_back(o);
      o += s.dim;
    }
    return off;
  }

  /// Dense matrices of e_i and f_i on the concatenated lattice basis.
  ModuleAction dense_action() const {
    ModuleAction a;
    const auto off = offsets();
    for (std::size_t i = 0; i < R_.rank(); ++i) {
      RatMatrix e(dim_, dim_), f(dim_, dim_);
      for (std::size_t k = 0; k < spaces_.size(); ++k) {
        const auto& s = spaces_[k];
        if (s.up[i]) {
          const auto& m = s.raise[i];
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) e(off[*s.up[i]] + r, off[k] + c) = Rational(m(r, c));
        }
        auto it = s.lower.find({i, 1u});
        if (it != s.lower.end()) {
          const auto& m = it->second.matrix;
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) f(off[it->second.target] + r, off[k] + c) = Rational(m(r, c));
        }
      }
      a.e.push_back(std::move(e));
      a.f.push_back(std::move(f));
    }
    return a;
  }

 private:
  friend AdmissibleModule build_weyl_module(const RootSystem&, const Weight&, long long);

  RootSystem R_;
  Weight lambda_;
  std::vector<WeightSpace> spaces_;
  std::map<Weight, std::size_t> index_;
  std::size_t dim_ = 0;
};

inline std::optional<WeightVector> add(std::optional<WeightVector> a, const std::optional<WeightVector>& b,
                                       const Int& scale_b = 1) {
  if (!b) return a;
  if (!a) {
    WeightVector r = *b;
    for (auto& x : r.coords) x *= scale_b;
    return r;
  }
  if (a->space != b->space) throw InternalError("adding vectors of different weights");
  axpy(a->coords, scale_b, b->coords);
  return a;
}

/// X_a x for a signed root id, via the bracket decomposition of the root.
inline std::optional<WeightVector> apply_root_vector(const AdmissibleModule& V, const StructureConstants& sc,
                                                     RootId a, const WeightVector& x) {
  const auto& R = V.root_system();
  const std::size_t j = root_index(a);
  const int sign = a > 0 ? 1 : -1;
  auto gen = [&](std::size_t i, const WeightVector& y) { return sign > 0 ? V.apply_e(i, y) : V.apply_f(i, 1, y); };
  if (R.height(j) == 1) {
    for (std::size_t i = 0; i < R.rank(); ++i)
      if (R.simple_index(i) == j) return gen(i, x);
  }
  const auto [i, b] = sc.decomposition(j);
  const RootId bid = sign * positive_id(b);
  std::optional<WeightVector> first, second;
  if (auto y = apply_root_vector(V, sc, bid, x)) first = gen(i, *y);
  if (auto y = gen(i, x)) second = apply_root_vector(V, sc, bid, *y);
  auto r = add(first, second, Int(-1));
  if (!r) return r;
  if (is_zero(r->coords)) return r;
  const int n = sc.N(sign * positive_id(R.simple_index(i)), bid);
  divide_exact(r->coords, Int(n), "root vector normalization");
  return r;
}

/// X_a^{(m)} x with exact division by k after the k-th application.
inline std::optional<WeightVector> apply_root_divided(const AdmissibleModule& V, const StructureConstants& sc, RootId a,
                                                      unsigned m, const WeightVector& x) {
  std::optional<WeightVector> y = x;
  for (unsigned k = 1; k <= m && y; ++k) {
    y = apply_root_vector(V, sc, a, *y);
    if (y) divide_exact(y->coords, Int(k), "root vector divided power");
  }
  return y;
}

/// Builds V(lambda)_Z. Throws UnsupportedError when dim V(lambda) exceeds cap.
inline AdmissibleModule build_weyl_module(const RootSystem& R, const Weight& lambda,
                                          long long cap = default_size_cap) {
  require_rank(R, lambda);
  require_dominant(lambda, "build_weyl_module");
  const Int wd = weyl_dimension(R, lambda);
  if (wd > cap)
    throw UnsupportedError("dim V(" + lambda.to_string() + ") = " + wd.str() + " exceeds size cap " +
                           std::to_string(cap));
  const std::size_t l = R.rank();
  const auto mults = freudenthal_multiplicities(R, lambda);

  AdmissibleModule V;
  V.R_ = R;
  V.lambda_ = lambda;

  // order weights by depth (height of lambda - mu), ties by weight for determinism
  struct Pending {
    long long height;
    Weight mu;
    std::vector<long long> depth;
  };
  std::vector<Pending> order;
  for (const auto& [mu, m] : mults) {
    (void)m;
    order.push_back({0, mu, {}});
  }
  {
    std::map<Weight, std::vector<long long>> depth{{lambda, std::vector<long long>(l, 0)}};
    std::vector<Weight> frontier{lambda};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& nu : frontier)
        for (std::size_t i = 0; i < l; ++i) {
          const Weight mu = nu - R.simple_root_weight(i);
          if (!mults.count(mu) || depth.count(mu)) continue;
          auto d = depth[nu];
          d[i] += 1;
          depth[mu] = d;
          next.push_back(mu);
        }
      frontier = std::move(next);
    }
    for (auto& p : order) {
      p.depth = depth.at(p.mu);
      p.height = 0;
      for (auto x : p.depth) p.height += x;
    }
  }
  std::sort(order.begin(), order.end(), [](const Pending& a, const Pending& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.mu > b.mu;
  });
  for (std::size_t k = 0; k < order.size(); ++k) V.index_[order[k].mu] = k;

  auto& spaces = V.spaces_;
  spaces.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto& s = spaces[k];
    s.mu = order[k].mu;
    s.depth = order[k].depth;
    s.height = order[k].height;
    s.up.resize(l);
    s.raise.resize(l);
    for (std::size_t i = 0; i < l; ++i) s.up[i] = V.find(s.mu + R.simple_root_weight(i));
  }

  // e_i^{(m)} applied to a vector known by its raising image, landing in space up[i]
  auto raise_divided = [&](const WeightSpace& s, const IntVector& raising_image, const std::vector<std::size_t>& off,
                           std::size_t i, unsigned m) -> std::optional<WeightVector> {
    if (!s.up[i]) return std::nullopt;
    const std::size_t t = *s.up[i];
    WeightVector y{t, IntVector(raising_image.begin() + static_cast<std::ptrdiff_t>(off[i]),
                                raising_image.begin() + static_cast<std::ptrdiff_t>(off[i] + spaces[t].dim))};
    for (unsigned r = 2; r <= m; ++r) {
      auto z = V.apply_e(i, y);
      if (!z) return std::nullopt;
      y = std::move(*z);
    }
    divide_exact(y.coords, factorial(m), "contravariant form raising");
    return y;
  };

  for (std::size_t k = 0; k < spaces.size(); ++k) {
    auto& s = spaces[k];
    const std::size_t expected = static_cast<std::size_t>(to_ll(mults.at(s.mu)));
    if (k == 0) {
      s.dim = 1;
      s.gram = IntMatrix(1, 1);
      s.gram(0, 0) = 1;
      for (std::size_t i = 0; i < l; ++i)
        if (s.up[i]) throw InternalError("weight above the highest weight");
      continue;
    }
    std::vector<std::size_t> off(l, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < l; ++i) {
      off[i] = total;
      if (s.up[i]) total += spaces[*s.up[i]].dim;
    }

    struct Candidate {
      std::size_t i;
      unsigned m;
      std::size_t src;
      std::size_t col;
      IntVector image;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < l; ++i) {
      for (unsigned m = 1;; ++m) {
        const auto src_idx = V.find(s.mu + R.simple_root_weight(i) * m);
        if (!src_idx) break;
        const auto& src = spaces[*src_idx];
        for (std::size_t c = 0; c < src.dim; ++c) {
          IntVector img(total, Int(0));
          for (std::size_t j = 0; j < l; ++j) {
            if (!s.up[j]) continue;
            IntVector block(spaces[*s.up[j]].dim, Int(0));
            if (src.up[j]) {
              const IntVector ew = src.raise[j].column(c);
              const auto& s2 = spaces[*src.up[j]];
              auto it = s2.lower.find({i, m});
              if (it == s2.lower.end() || it->second.target != *s.up[j])
                throw InternalError("missing lowering map during construction");
              block = it->second.matrix * ew;
            }
            if (j == i) {
              const long long coef = src.mu[i] - static_cast<long long>(m) + 1;
              IntVector prev;
              if (m == 1) {
                prev = IntVector(src.dim, Int(0));
                prev[c] = 1;
              } else {
                auto it = src.lower.find({i, m - 1});
                if (it == src.lower.end() || it->second.target != *s.up[i])
                  throw InternalError("missing lowering map f^(m-1)");
                prev = it->second.matrix.column(c);
              }
              axpy(block, Int(coef), prev);
            }
            std::copy(block.begin(), block.end(), img.begin() + static_cast<std::ptrdiff_t>(off[j]));
          }
          cands.push_back({i, m, *src_idx, c, std::move(img)});
        }
      }
    }

    LatticeBasis lattice(total);
    for (const auto& c : cands) lattice.insert(c.image);
    lattice.reduce();
    if (lattice.rank() != expected)
      throw InternalError("weight space " + s.mu.to_string() + " has lattice rank " + std::to_string(lattice.rank()) +
                          ", expected " + std::to_string(expected));
    s.dim = expected;
    const auto& rows = lattice.rows();

    for (std::size_t i = 0; i < l; ++i) {
      if (!s.up[i]) continue;
      const std::size_t td = spaces[*s.up[i]].dim;
      IntMatrix e(td, s.dim);
      for (std::size_t r = 0; r < s.dim; ++r)
        for (std::size_t t = 0; t < td; ++t) e(t, r) = rows[r].vec[off[i] + t];
      s.raise[i] = std::move(e);
    }

    for (const auto& c : cands) {
      auto& src = spaces[c.src];
      auto [it, inserted] = src.lower.try_emplace({c.i, c.m}, LoweringMap{k, IntMatrix(s.dim, src.dim)});
      (void)inserted;
      const IntVector coords = lattice.coordinates(c.image);
      for (std::size_t r = 0; r < s.dim; ++r) it->second.matrix(r, c.col) = coords[r];
    }

    // pairing table: value[(i, m)](col, r) = <w_col, e_i^{(m)} b_r>
    std::map<std::pair<std::size_t, unsigned>, IntMatrix> pairing_table;
    for (const auto& c : cands) {
      auto key = std::make_pair(c.i, c.m);
      if (pairing_table.count(key)) continue;
      const auto& src = spaces[c.src];
      IntMatrix tbl(src.dim, s.dim);
      for (std::size_t r = 0; r < s.dim; ++r) {
        auto y = raise_divided(s, rows[r].vec, off, c.i, c.m);
        if (!y || y->space != c.src) throw InternalError("raising did not reach the source weight");
        const auto gy = src.gram * y->coords;
        for (std::size_t col = 0; col < src.dim; ++col) tbl(col, r) = gy[col];
      }
      pairing_table.emplace(key, std::move(tbl));
    }
    s.gram = IntMatrix(s.dim, s.dim);
    for (std::size_t r = 0; r < s.dim; ++r)
      for (std::size_t q = 0; q < s.dim; ++q) {
        Int acc = 0;
        for (std::size_t g = 0; g < cands.size(); ++g) {
          const Int& coeff = rows[r].expr[g];
          if (coeff == 0) continue;
          acc += coeff * pairing_table.at({cands[g].i, cands[g].m})(cands[g].col, q);
        }
        s.gram(r, q) = acc;
      }
    for (std::size_t r = 0; r < s.dim; ++r)
      for (std::size_t q = 0; q < r; ++q)
        if (s.gram(r, q) != s.gram(q, r)) throw InternalError("contravariant Gram matrix not symmetric");
  }
  std::size_t dim = 0;
  for (const auto& s : spaces) dim += s.dim;
  V.dim_ = dim;
  if (Int(dim) != wd) throw InternalError("module dimension disagrees with Weyl's formula");
  return V;
}

// ---------------------------------------------------------------------------

/// Quotient of one weight space of V_Z / p by the radical of the form. The
/// projection of x is rref * x mod p; standard basis vectors at the pivot
/// columns lift the quotient basis.
struct SimpleSpace {
  std::size_t dim = 0;
  ModMatrix rref;
  std::vector<std::size_t> pivots;
  ModMatrix kernel;  // radical, as columns
};

class ModularSimple {
 public:
  const AdmissibleModule& module() const { return *V_; }
  std::shared_ptr<const AdmissibleModule> module_ptr() const { return V_; }
  long long prime() const { return p_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<SimpleSpace>& spaces() const { return spaces_; }

  std::map<Weight, std::size_t> weight_dimensions() const {
    std::map<Weight, std::size_t> out;
    for (std::size_t k = 0; k < spaces_.size(); ++k)
      if (spaces_[k].dim > 0) out[V_->space(k).mu] = spaces_[k].dim;
    return out;
  }

  std::vector<std::int64_t> project(const WeightVector& x) const {
    return mul_mod(spaces_.at(x.space).rref, x.coords, p_);
  }

  bool is_nonzero(const std::optional<WeightVector>& x) const {
    if (!x) return false;
    const auto y = project(*x);
    return std::any_of(y.begin(), y.end(), [](std::int64_t v) { return v != 0; });
  }

  /// Matrix of an integral map between weight spaces, induced on L.
  /// Throws InternalError if the map does not preserve the radical.
  ModMatrix induced(const IntMatrix& map, std::size_t from, std::size_t to) const {
    const ModMatrix m = reduce_mod(map, p_);
    const auto& sf = spaces_.at(from);
    const auto& st = spaces_.at(to);
    const ModMatrix image_of_rad = mul_mod(st.rref, mul_mod(m, sf.kernel, p_), p_);
    if (!image_of_rad.is_zero()) throw InternalError("action does not preserve the radical");
    ModMatrix out(st.dim, sf.dim);
    const ModMatrix full = mul_mod(st.rref, m, p_);
    for (std::size_t r = 0; r < st.dim; ++r)
      for (std::size_t c = 0; c < sf.dim; ++c) out(r, c) = full(r, sf.pivots[c]);
    return out;
  }

  /// f_i^{(m)} on L from weight space k, if the target weight exists in V.
  std::optional<std::pair<std::size_t, ModMatrix>> lowering(std::size_t k, std::size_t i, unsigned m) const {
    const auto& s = V_->space(k);
    auto it = s.lower.find({i, m});
    if (it == s.lower.end()) return std::nullopt;
    return std::make_pair(it->second.target, induced(it->second.matrix, k, it->second.target));
  }

  /// e_i on L from weight space k.
  std::optional<std::pair<std::size_t, ModMatrix>> raising(std::size_t k, std::size_t i) const {
    const auto& s = V_->space(k);
    if (!s.up[i]) return std::nullopt;
    return std::make_pair(*s.up[i], induced(s.raise[i], k, *s.up[i]));
  }

 private:
  friend ModularSimple simple_head_mod_p(std::shared_ptr<const AdmissibleModule>, long long);

  std::shared_ptr<const AdmissibleModule> V_;
  long long p_ = 2;
  std::size_t dim_ = 0;
  std::vector<SimpleSpace> spaces_;
};

inline ModularSimple simple_head_mod_p(std::shared_ptr<const AdmissibleModule> V, long long p) {
  require_prime(p);
  ModularSimple L;
  L.V_ = std::move(V);
  L.p_ = p;
  const auto& mod = *L.V_;
  for (const auto& s : mod.spaces()) {
    SimpleSpace q;
    auto e = row_reduce(reduce_mod(s.gram, p), p);
    q.dim = e.rank();
    q.kernel = nullspace(e, s.dim, p);
    q.rref = std::move(e.rref);
    q.pivots = std::move(e.pivots);
    L.dim_ += q.dim;
    L.spaces_.push_back(std::move(q));
  }
  if (L.spaces_.empty() || L.spaces_[0].dim != 1) throw InternalError("highest weight space of L must be a line");
  // every stored action must descend to the quotient
  for (std::size_t k = 0; k < mod.spaces().size(); ++k) {
    for (std::size_t i = 0; i < mod.root_system().rank(); ++i) (void)L.raising(k, i);
    for (const auto& [key, lm] : mod.space(k).lower) (void)L.induced(lm.matrix, k, lm.target);
  }
  return L;
}

inline ModularSimple simple_head_mod_p(const AdmissibleModule& V, long long p) {
  return simple_head_mod_p(std::make_shared<const AdmissibleModule>(V), p);
}

/// True iff L is spanned by lowering images of its highest weight line.
inline bool is_generated_by_highest_weight(const ModularSimple& L) {
  const auto& V = L.module();
  const std::size_t l = V.root_system().rank();
  for (std::size_t k = 1; k < V.spaces().size(); ++k) {
    const std::size_t d = L.spaces()[k].dim;
    if (d == 0) continue;
    std::vector<std::vector<std::int64_t>> cols;
    for (std::size_t i = 0; i < l; ++i)
      for (unsigned m = 1;; ++m) {
        auto src = V.find(V.space(k).mu + V.root_system().simple_root_weight(i) * m);
        if (!src) break;
        auto f = L.lowering(*src, i, m);
        if (!f || f->first != k) throw InternalError("lowering map target mismatch");
        for (std::size_t c = 0; c < f->second.cols(); ++c) cols.push_back(f->second.column(c));
      }
    ModMatrix span(cols.size(), d);
    for (std::size_t r = 0; r < cols.size(); ++r)
      for (std::size_t c = 0; c < d; ++c) span(r, c) = cols[r][c];
    if (row_reduce(span, L.prime()).rank() != d) return false;
  }
  return true;
}

/// Per weight: nu_p of the elementary divisors of the Gram matrix.
inline std::map<Weight, std::vector<unsigned>> gram_elementary_divisors(const AdmissibleModule& V, long long p) {
  std::map<Weight, std::vector<unsigned>> out;
  for (const auto& s : V.spaces()) out[s.mu] = local_smith_valuations(s.gram, p);
  return out;
}

/// Per weight: sum of nu_p over elementary divisors of the Gram matrix.
inline std::map<Weight, Int> gram_elementary_divisor_valuations(const AdmissibleModule& V, long long p) {
  std::map<Weight, Int> out;
  for (const auto& [mu, vals] : gram_elementary_divisors(V, p)) {
    unsigned s = 0;
    for (auto v : vals) s += v;
    out[mu] = s;
  }
  return out;
}

/// Warning text when p violates the usual characteristic restrictions
/// (p > 2 for B, C, F; p > 3 for G).
inline std::optional<std::string> characteristic_warning(const RootSystem& R, long long p) {
  const char f = R.spec().family;
  if ((f == 'B' || f == 'C' || f == 'F') && p == 2)
    return "p = 2 for type " + R.name() +
           ": exponents on simple roots need not determine the stabilizer (exceptional parabolics possible)";
  if (f == 'G' && p <= 3)
    return "p = " + std::to_string(p) + " for type G2: exponents on simple roots need not determine the stabilizer";
  return std::nullopt;
}

using Decomposition = std::map<Weight, Int>;

/// Memoizes simple characters per (root system, p) across decompositions.
class SimpleCharacterCache {
 public:
  SimpleCharacterCache(RootSystem R, long long p, long long cap = default_size_cap)
      : R_(std::move(R)), p_(p), cap_(cap) {}

  const RootSystem& root_system() const { return R_; }
  long long prime() const { return p_; }

  const WeightMultiset& simple_character(const Weight& mu) {
    auto it = chars_.find(mu);
    if (it != chars_.end()) return it->second;
    const auto V = std::make_shared<const AdmissibleModule>(build_weyl_module(R_, mu, cap_));
    const auto L = simple_head_mod_p(V, p_);
    WeightMultiset ch;
    for (const auto& [w, d] : L.weight_dimensions()) ch[w] = d;
    return chars_.emplace(mu, std::move(ch)).first->second;
  }

  void seed(const Weight& mu, WeightMultiset ch) { chars_.emplace(mu, std::move(ch)); }

 private:
  RootSystem R_;
  long long p_;
  long long cap_;
  std::map<Weight, WeightMultiset> chars_;
};

/// [V(lambda) : L(mu)] by repeated subtraction of simple characters.
inline Decomposition decompose_weyl(SimpleCharacterCache& cache, const Weight& lambda) {
  const auto& R = cache.root_system();
  require_rank(R, lambda);
  require_dominant(lambda, "decompose_weyl");
  WeightMultiset rest = freudenthal_multiplicities(R, lambda);
  Decomposition out;
  // <mu, 2 rho^vee> grows by 2 with each simple root, so its argmax is maximal
  auto level = [&](const Weight& mu) {
    long long s = 0;
    for (std::size_t j = 0; j < R.num_positive(); ++j) s += pairing(R, mu, j);
    return s;
  };
  while (true) {
    for (auto it = rest.begin(); it != rest.end();) it = it->second == 0 ? rest.erase(it) : std::next(it);
    if (rest.empty()) break;
    const Weight* top = nullptr;
    long long best = 0;
    for (const auto& [mu, c] : rest) {
      (void)c;
      const long long h = level(mu);
      if (!top || h > best) {
        top = &mu;
        best = h;
      }
    }
    if (!top) throw InternalError("no maximal weight in character remainder");
    const Weight mu = *top;
    const Int c = rest.at(mu);
    if (c < 0 || !mu.is_dominant()) throw InternalError("character remainder is not a nonnegative sum of simples");
    out[mu] = c;
    const auto& ch = cache.simple_character(mu);
    for (const auto& [w, d] : ch) rest[w] -= c * d;
  }
  return out;
}

inline Decomposition decompose_weyl(const RootSystem& R, const Weight& lambda, long long p,
                                    long long cap = default_size_cap) {
  SimpleCharacterCache cache(R, p, cap);
  return decompose_weyl(cache, lambda);
}

}  // namespace modrep
