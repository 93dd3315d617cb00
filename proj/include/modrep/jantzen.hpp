#pragma once

// Jantzen's sum formula as a virtual Weyl character, and its comparison with
// the p-adic valuations of the contravariant Gram determinants.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modrep/highestweight.hpp"
#include "modrep/rootsys.hpp"

namespace modrep {

/// Brings mu to the dominant chamber under the dot action.
/// Returns nullopt when mu + rho is singular, else (sign of w, w . mu).
inline std::optional<std::pair<int, Weight>> euler_normalize(const RootSystem& R, const Weight& mu) {
  require_rank(R, mu);
  Weight x = mu + R.rho();
  int sign = 1;
  while (true) {
    std::size_t neg = R.rank();
    for (std::size_t i = 0; i < R.rank(); ++i) {
      if (x[i] == 0) return std::nullopt;
      if (x[i] < 0 && neg == R.rank()) neg = i;
    }
    if (neg == R.rank()) break;
    x = reflect(R, x, neg);
    sign = -sign;
  }
  return std::make_pair(sign, x - R.rho());
}

/// Integer combination of Euler characters chi(mu), stored on dominant weights.
class VirtualWeylCharacter {
 public:
  explicit VirtualWeylCharacter(const RootSystem& R) : R_(&R) {}

  /// Adds c * chi(mu) for an arbitrary weight mu.
  void add(const Weight& mu, const Int& c) {
    auto n = euler_normalize(*R_, mu);
    if (!n) return;
    add_dominant(n->second, c * n->first);
  }

  void add_dominant(const Weight& mu, const Int& c) {
    if (!mu.is_dominant()) throw InternalError("add_dominant with non-dominant weight");
    auto& slot = terms_[mu];
    slot += c;
    if (slot == 0) terms_.erase(mu);
  }

  const std::map<Weight, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool operator==(const VirtualWeylCharacter& o) const { return terms_ == o.terms_; }

  /// Sum of c_mu * ch V(mu)_Q over the stored terms.
  WeightMultiset expand() const {
    WeightMultiset out;
    for (const auto& [mu, c] : terms_)
      for (const auto& [w, m] : freudenthal_multiplicities(*R_, mu)) out[w] += c * m;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  const RootSystem* R_;
  std::map<Weight, Int> terms_;
};

/// One (alpha, m p) summand before normalization, kept for reporting.
struct JantzenTerm {
  std::size_t root;
  long long level;  // m p
  unsigned valuation;
  Weight reflected;
};

/// sum over alpha > 0 and 0 < m p < <lambda + rho, alpha^vee> of
/// nu_p(m p) chi(s_{alpha, m p} . lambda).
inline VirtualWeylCharacter jantzen_sum(const RootSystem& R, const Weight& lambda, long long p,
                                        std::vector<JantzenTerm>* log = nullptr) {
  require_rank(R, lambda);
  require_dominant(lambda, "jantzen_sum");
  require_prime(p);
  VirtualWeylCharacter out(R);
  const Weight lr = lambda + R.rho();
  for (std::size_t j = 0; j < R.num_positive(); ++j) {
    const long long top = pairing(R, lr, j);
    for (long long c = p; c < top; c += p) {
      const unsigned v = nu_p(c, p).value();
      const Weight mu = reflect_dot(R, lambda, j, c);
      if (log) log->push_back({j, c, v, mu});
      out.add(mu, Int(v));
    }
  }
  return out;
}

inline constexpr const char* jantzen_convention =
    "sum_{alpha>0} sum_{0<mp<<lambda+rho,alpha^vee>} nu_p(mp) chi(lambda + (mp - <lambda+rho,alpha^vee>) alpha)";

struct JantzenReport {
  std::string convention = jantzen_convention;
  std::map<Weight, Int> sum_expansion;
  std::map<Weight, Int> gram_valuations;
  std::map<Weight, Int> deltas;  // nonzero entries only
  bool ok() const { return deltas.empty(); }
};

inline JantzenReport jantzen_vs_gram(const AdmissibleModule& V, long long p) {
  const auto& R = V.root_system();
  JantzenReport rep;
  rep.sum_expansion = jantzen_sum(R, V.highest_weight(), p).expand();
  rep.gram_valuations = gram_elementary_divisor_valuations(V, p);
  std::map<Weight, Int> all = rep.gram_valuations;
  for (const auto& [w, c] : rep.sum_expansion) all.emplace(w, 0);
  for (const auto& [w, g] : all) {
    (void)g;
    const Int lhs = rep.sum_expansion.count(w) ? rep.sum_expansion.at(w) : Int(0);
    const Int rhs = rep.gram_valuations.count(w) ? rep.gram_valuations.at(w) : Int(0);
    if (lhs != rhs) rep.deltas[w] = lhs - rhs;
  }
  for (auto it = rep.gram_valuations.begin(); it != rep.gram_valuations.end();)
    it = it->second == 0 ? rep.gram_valuations.erase(it) : std::next(it);
  return rep;
}

inline JantzenReport jantzen_vs_gram(const RootSystem& R, const Weight& lambda, long long p,
                                     long long cap = default_size_cap) {
  return jantzen_vs_gram(build_weyl_module(R, lambda, cap), p);
}

}  // namespace modrep
