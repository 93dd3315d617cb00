#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "modrep/arith.hpp"

namespace modrep {

/// Weight in the basis of fundamental weights.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<long long> coords) : c_(std::move(coords)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<long long>(rank, 0)); }
  static Weight fundamental(std::size_t rank, std::size_t i) {
    Weight w = zero(rank);
    w.c_.at(i) = 1;
    return w;
  }

  std::size_t rank() const { return c_.size(); }
  long long operator[](std::size_t i) const { return c_[i]; }
  long long& operator[](std::size_t i) { return c_[i]; }
  const std::vector<long long>& coords() const { return c_; }

  bool is_dominant() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x >= 0; });
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x == 0; });
  }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  Weight operator*(long long s) const {
    Weight r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  auto operator<=>(const Weight&) const = default;

  /// Comma-separated coordinates, e.g. "0,0,0,1".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  std::vector<long long> c_;
};

/// Coefficients of a root on the simple roots.
using RootCoeffs = std::vector<int>;

struct RootSystemSpec {
  char family = 'A';
  int rank = 1;

  auto operator<=>(const RootSystemSpec&) const = default;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  /// Throws InputError when (family, rank) is not a root system.
  void validate() const {
    bool ok = false;
    switch (family) {
      case 'A': ok = rank >= 1; break;
      case 'B': ok = rank >= 2; break;
      case 'C': ok = rank >= 2; break;
      case 'D': ok = rank >= 3; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: throw InputError(std::string("unknown root system family '") + family + "'");
    }
    if (!ok) throw InputError("invalid rank " + std::to_string(rank) + " for family " + family);
    if (family >= 'A' && family <= 'D' && rank > 8)
      throw UnsupportedError("classical families are supported up to rank 8");
  }

  static RootSystemSpec parse(const std::string& s) {
    if (s.size() < 2) throw InputError("root system name '" + s + "' too short");
    RootSystemSpec spec;
    spec.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const std::string digits = s.substr(1);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 2)
      throw InputError("bad rank in root system name '" + s + "'");
    spec.rank = std::stoi(digits);
    spec.validate();
    return spec;
  }
};

class RootSystem {
 public:
  const RootSystemSpec& spec() const { return spec_; }
  std::size_t rank() const { return static_cast<std::size_t>(spec_.rank); }
  std::string name() const { return spec_.name(); }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Symmetric form on simple roots, short roots of squared length 2.
  const std::vector<std::vector<int>>& form() const { return form_; }

  std::size_t num_positive() const { return positive_.size(); }
  const std::vector<RootCoeffs>& positive_roots() const { return positive_; }
  const RootCoeffs& root(std::size_t j) const { return positive_.at(j); }
  int height(std::size_t j) const { return std::accumulate(positive_[j].begin(), positive_[j].end(), 0); }
  int root_norm(std::size_t j) const { return norms_.at(j); }
  /// Root j in fundamental-weight coordinates.
  const Weight& root_weight(std::size_t j) const { return root_weights_.at(j); }
  const Weight& simple_root_weight(std::size_t i) const { return root_weights_.at(simple_index_.at(i)); }
  /// Index of the simple root alpha_i in the positive-root list.
  std::size_t simple_index(std::size_t i) const { return simple_index_.at(i); }
  /// Coroot of root j on the simple coroots; <omega_i, alpha^vee> = coroot(j)[i].
  const std::vector<int>& coroot(std::size_t j) const { return coroots_.at(j); }

  std::optional<std::size_t> find_positive(const RootCoeffs& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_root(const RootCoeffs& c) const {
    if (find_positive(c)) return true;
    RootCoeffs neg(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    return find_positive(neg).has_value();
  }

  Weight rho() const { return Weight(std::vector<long long>(rank(), 1)); }

  /// (alpha_i, omega_j) = delta_ij * half_norm(i).
  int half_norm(std::size_t i) const { return form_[i][i] / 2; }

  /// Coefficient string on simple roots; digits when all < 10, else comma-separated.
  std::string root_label(std::size_t j) const {
    const auto& c = positive_.at(j);
    const bool digits = std::all_of(c.begin(), c.end(), [](int x) { return x < 10; });
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!digits && i) s += ',';
      s += std::to_string(c[i]);
    }
    return s;
  }

  std::optional<std::size_t> find_label(const std::string& label) const {
    for (std::size_t j = 0; j < positive_.size(); ++j)
      if (root_label(j) == label) return j;
    return std::nullopt;
  }

 private:
  friend RootSystem build_root_system(const RootSystemSpec&);

  RootSystemSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> form_;
  std::vector<RootCoeffs> positive_;
  std::vector<int> norms_;
  std::vector<Weight> root_weights_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::size_t> simple_index_;
  std::map<RootCoeffs, std::size_t> index_;
};

namespace detail {

// Bourbaki numbering; short simple roots have squared length 2.
inline std::vector<std::vector<int>> symmetric_form(const RootSystemSpec& s) {
  const int n = s.rank;
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
  switch (s.family) {
    case 'A':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) b[i][i] = (i + 1 < n) ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) b[i][i] = (i + 1 < n) ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      b[0][0] = 2;
      b[1][1] = 6;
      link(0, 1, -3);
      break;
    default: throw InputError("unknown family");
  }
  return b;
}

}  // namespace detail

/// Positive roots are sorted by height; within a height, larger coefficient
/// vectors (lexicographically) come first, so simple roots appear as
/// alpha_1, ..., alpha_l.
inline RootSystem build_root_system(const RootSystemSpec& spec) {
  spec.validate();
  RootSystem R;
  R.spec_ = spec;
  const std::size_t n = static_cast<std::size_t>(spec.rank);
  R.form_ = detail::symmetric_form(spec);
  R.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) R.cartan_[i][j] = 2 * R.form_[i][j] / R.form_[i][i];

  // <beta, alpha_i^vee> for beta in simple-root coordinates
  auto pair_simple = [&](const RootCoeffs& beta, std::size_t i) {
    int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += R.cartan_[i][j] * beta[j];
    return s;
  };

  std::map<RootCoeffs, bool> found;
  std::vector<RootCoeffs> layer;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoeffs c(n, 0);
    c[i] = 1;
    layer.push_back(c);
    found[c] = true;
  }
  std::vector<RootCoeffs> all = layer;
  while (!layer.empty()) {
    std::vector<RootCoeffs> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        // length of the alpha_i-string below beta
        int down = 0;
        RootCoeffs t = beta;
        while (true) {
          t[i] -= 1;
          if (!found.count(t)) break;
          ++down;
        }
        const int up = down - pair_simple(beta, i);
        if (up > 0) {
          RootCoeffs g = beta;
          g[i] += 1;
          if (!found.count(g)) {
            found[g] = true;
            next.push_back(g);
            all.push_back(g);
          }
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const RootCoeffs& a, const RootCoeffs& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  R.positive_ = all;
  for (std::size_t j = 0; j < all.size(); ++j) {
    R.index_[all[j]] = j;
    const auto& c = all[j];
    int norm = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) norm += c[a] * R.form_[a][b] * c[b];
    R.norms_.push_back(norm);
    std::vector<long long> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = pair_simple(c, i);
    R.root_weights_.emplace_back(w);
    std::vector<int> co(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int num = c[i] * R.form_[i][i];
      if (num % norm != 0) throw InternalError("non-integral coroot coefficient");
      co[i] = num / norm;
    }
    R.coroots_.push_back(co);
  }
  R.simple_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    RootCoeffs c(n, 0);
    c[i] = 1;
    R.simple_index_[i] = R.index_.at(c);
  }
  return R;
}

inline RootSystem build_root_system(const std::string& name) { return build_root_system(RootSystemSpec::parse(name)); }

/// <lambda, alpha_j^vee> for the positive root with index j.
inline long long pairing(const RootSystem& R, const Weight& lambda, std::size_t j) {
  if (lambda.rank() != R.rank()) throw InputError("weight rank does not match root system");
  if (j >= R.num_positive()) throw InputError("root index out of range");
  const auto& co = R.coroot(j);
  long long s = 0;
  for (std::size_t i = 0; i < R.rank(); ++i) s += lambda[i] * co[i];
  return s;
}

/// Pairing with the coroot of any root (positive or negative) given by coefficients.
inline long long pairing(const RootSystem& R, const Weight& lambda, const RootCoeffs& alpha) {
  if (auto j = R.find_positive(alpha)) return pairing(R, lambda, *j);
  RootCoeffs neg(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
  if (auto j = R.find_positive(neg)) return -pairing(R, lambda, *j);
  throw InputError("not a root of " + R.name());
}

inline void require_dominant(const Weight& lambda, const char* op) {
  if (!lambda.is_dominant()) throw InputError(std::string(op) + ": weight " + lambda.to_string() + " is not dominant");
}

inline void require_rank(const RootSystem& R, const Weight& lambda) {
  if (lambda.rank() != R.rank())
    throw InputError("weight " + lambda.to_string() + " has rank " + std::to_string(lambda.rank()) + ", " +
                     R.name() + " needs " + std::to_string(R.rank()));
}

/// Weyl's dimension formula.
inline Int weyl_dimension(const RootSystem& R, const Weight& lambda) {
  require_rank(R, lambda);
  require_dominant(lambda, "weyl_dimension");
  const Weight lr = lambda + R.rho();
  Int num = 1, den = 1;
  for (std::size_t j = 0; j < R.num_positive(); ++j) {
    num *= pairing(R, lr, j);
    den *= pairing(R, R.rho(), j);
  }
  if (num % den != 0) throw InternalError("Weyl dimension not integral");
  return num / den;
}

/// Simple reflection s_i acting linearly on a weight.
inline Weight reflect(const RootSystem& R, const Weight& mu, std::size_t i) {
  return mu - R.simple_root_weight(i) * mu[i];
}

/// Affine dot action: lambda + (c - <lambda + rho, alpha^vee>) alpha.
inline Weight reflect_dot(const RootSystem& R, const Weight& lambda, std::size_t root_index, long long level) {
  require_rank(R, lambda);
  const long long shift = level - pairing(R, lambda + R.rho(), root_index);
  return lambda + R.root_weight(root_index) * shift;
}

using WeightMultiset = std::map<Weight, Int>;

/// Weight multiplicities of the characteristic-zero simple module of highest
/// weight lambda, by Freudenthal's recursion over depth below lambda.
inline WeightMultiset freudenthal_multiplicities(const RootSystem& R, const Weight& lambda) {
  require_rank(R, lambda);
  require_dominant(lambda, "freudenthal_multiplicities");
  const std::size_t n = R.rank();
  const Weight lr2 = lambda + lambda + R.rho() * 2;

  // (nu, alpha) for nu in weight coordinates and a root in simple coordinates
  auto ip = [&](const Weight& nu, const RootCoeffs& a) {
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long long>(a[i]) * R.half_norm(i) * nu[i];
    return s;
  };

  struct Entry {
    Int mult;
    std::vector<long long> depth;
  };
  std::map<Weight, Entry> all;
  all[lambda] = {Int(1), std::vector<long long>(n, 0)};
  std::map<Weight, std::vector<long long>> layer{{lambda, std::vector<long long>(n, 0)}};
  while (!layer.empty()) {
    std::map<Weight, std::vector<long long>> cand;
    for (const auto& [nu, depth] : layer)
      for (std::size_t i = 0; i < n; ++i) {
        auto d = depth;
        d[i] += 1;
        cand.emplace(nu - R.simple_root_weight(i), d);
      }
    std::map<Weight, std::vector<long long>> next;
    for (const auto& [mu, depth] : cand) {
      // (lambda - mu, lambda + mu + 2 rho) with lambda - mu = sum depth_i alpha_i
      const Weight s = lr2 - (lambda - mu);
      long long den = 0;
      for (std::size_t i = 0; i < n; ++i) den += depth[i] * R.half_norm(i) * s[i];
      if (den <= 0) continue;
      Int num = 0;
      for (std::size_t j = 0; j < R.num_positive(); ++j) {
        const auto& a = R.root(j);
        auto d = depth;
        Weight up = mu;
        while (true) {
          bool ok = true;
          for (std::size_t i = 0; i < n; ++i) {
            d[i] -= a[i];
            if (d[i] < 0) ok = false;
          }
          if (!ok) break;
          up = up + R.root_weight(j);
          auto it = all.find(up);
          if (it != all.end()) num += it->second.mult * ip(up, a);
        }
      }
      num *= 2;
      if (num == 0) continue;
      if (num % den != 0) throw InternalError("Freudenthal recursion produced a non-integer");
      all[mu] = {num / den, depth};
      next.emplace(mu, depth);
    }
    layer = std::move(next);
  }
  WeightMultiset out;
  for (auto& [mu, e] : all) out[mu] = e.mult;
  return out;
}

}  // namespace modrep
