#include <gtest/gtest.h>

#include <random>
#include <set>

#include "modrep/chevalley.hpp"
#include "modrep/highestweight.hpp"

using namespace modrep;

namespace {

const std::vector<std::string> systems = {"A2", "A3", "B2", "B3", "C3", "C4", "D4", "G2", "F4"};

std::set<RootCoeffs> all_roots(const RootSystem& R) {
  std::set<RootCoeffs> s;
  for (const auto& r : R.positive_roots()) {
    s.insert(r);
    RootCoeffs n = r;
    for (auto& x : n) x = -x;
    s.insert(n);
  }
  return s;
}

// Basis weights of the concatenated lattice basis.
std::vector<Weight> basis_weights(const AdmissibleModule& V) {
  std::vector<Weight> w;
  for (const auto& s : V.spaces())
    for (std::size_t k = 0; k < s.dim; ++k) w.push_back(s.mu);
  return w;
}

RatMatrix diagonal(const std::vector<Rational>& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

struct Case {
  const char* system;
  std::vector<long long> weight;
};

const std::vector<Case> module_cases = {
    {"A2", {1, 1}}, {"B2", {1, 0}}, {"B2", {0, 1}}, {"B2", {1, 1}}, {"C3", {0, 1, 0}}, {"G2", {1, 0}}, {"C4", {0, 0, 0, 1}},
};

}  // namespace

TEST(StructureConstants, Examples) {
  const auto A2 = build_root_system("A2");
  const StructureConstants a2(A2);
  EXPECT_EQ(std::abs(a2.N(positive_id(0), positive_id(1))), 1);

  const auto B2 = build_root_system("B2");
  const StructureConstants b2(B2);
  const RootId alpha = positive_id(*B2.find_label("01"));  // short simple root
  const RootId ab = positive_id(*B2.find_label("11"));
  EXPECT_EQ(std::abs(b2.N(alpha, ab)), 2);
  EXPECT_EQ(b2.sum(alpha, ab), positive_id(*B2.find_label("12")));
}

TEST(StructureConstants, ChevalleyTheoremAndAntisymmetry) {
  for (const auto& name : systems) {
    const auto R = build_root_system(name);
    const StructureConstants sc(R);
    const auto roots = all_roots(R);
    std::size_t pairs = 0;
    for (const auto& [key, n] : sc.table()) {
      const auto [a, b] = key;
      ++pairs;
      ASSERT_EQ(sc.N(b, a), -n);
      // string length below b in direction a, from the raw root list
      RootCoeffs c = sc.coeffs(b);
      const RootCoeffs d = sc.coeffs(a);
      int k = 0;
      while (true) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= d[i];
        if (!roots.count(c)) break;
        ++k;
      }
      ASSERT_EQ(std::abs(n), k + 1) << name;
    }
    // every pair with a + b a root is tabulated
    std::size_t expected = 0;
    for (const auto& a : roots)
      for (const auto& b : roots) {
        RootCoeffs s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
        expected += roots.count(s);
      }
    EXPECT_EQ(pairs, expected) << name;
  }
}

TEST(StructureConstants, JacobiOnRandomTriples) {
  std::mt19937 rng(11);
  for (const auto& name : systems) {
    const auto R = build_root_system(name);
    const StructureConstants sc(R);
    const ChevalleyAlgebra g(sc);
    std::vector<int> ids;
    for (std::size_t j = 0; j < R.num_positive(); ++j) {
      ids.push_back(positive_id(j));
      ids.push_back(negative_id(j));
    }
    for (std::size_t i = 0; i < R.rank(); ++i) ids.push_back(ChevalleyAlgebra::h_offset + static_cast<int>(i));
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    for (int t = 0; t < 100; ++t) {
      const int a = ids[pick(rng)], b = ids[pick(rng)], c = ids[pick(rng)];
      ASSERT_TRUE(g.jacobi(a, b, c).empty()) << name << " " << a << " " << b << " " << c;
    }
  }
}

TEST(StructureConstants, JacobiExhaustiveOnRootTriples) {
  for (const auto& name : {"B2", "G2", "C3"}) {
    const auto R = build_root_system(name);
    const StructureConstants sc(R);
    const ChevalleyAlgebra g(sc);
    std::vector<int> ids;
    for (std::size_t j = 0; j < R.num_positive(); ++j) {
      ids.push_back(positive_id(j));
      ids.push_back(negative_id(j));
    }
    for (int a : ids)
      for (int b : ids)
        for (int c : ids) ASSERT_TRUE(g.jacobi(a, b, c).empty()) << name;
  }
}

TEST(StructureConstants, PerturbedSignsStayConsistent) {
  const auto B2 = build_root_system("B2");
  const StructureConstants base(B2);
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<int> signs(B2.num_positive(), 1);
    signs[2] = mask & 1 ? -1 : 1;
    signs[3] = mask & 2 ? -1 : 1;
    const StructureConstants sc(B2, signs);
    const ChevalleyAlgebra g(sc);
    for (const auto& [key, n] : sc.table()) ASSERT_EQ(std::abs(n), std::abs(base.N(key.first, key.second)));
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c)
          if (a && b && c) ASSERT_TRUE(g.jacobi(a, b, c).empty());
  }
  EXPECT_THROW(StructureConstants(B2, {1, 1}), InputError);
}

TEST(StructureConstants, LargeSystems) {
  for (const auto& name : {"E6", "E7", "E8"}) {
    const auto R = build_root_system(name);
    const StructureConstants sc(R);
    for (const auto& [key, n] : sc.table()) ASSERT_EQ(std::abs(n), 1);
    const ChevalleyAlgebra g(sc);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(1, static_cast<int>(R.num_positive()));
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int t = 0; t < 100; ++t) {
      int x[3];
      for (auto& v : x) v = pick(rng) * (sgn(rng) ? 1 : -1);
      ASSERT_TRUE(g.jacobi(x[0], x[1], x[2]).empty());
    }
  }
}

TEST(Sl2, CommuteApplyExamples) {
  EXPECT_EQ(sl2_commute_apply(1, 1, 3), Int(3));
  EXPECT_EQ(sl2_commute_apply(2, 2, 2), Int(1));
  for (long long n = 0; n < 5; ++n) EXPECT_EQ(sl2_commute_apply(0, n, 4), Int(1));
  EXPECT_EQ(sl2_commute_apply(3, 2, 7), Int(0));
  for (long long k = 0; k <= 6; ++k) EXPECT_EQ(sl2_commute_apply(k, k, 6), binomial(6, k));
}

TEST(DividedPowers, Examples) {
  const auto A1 = build_root_system("A1");
  const auto V = build_weyl_module(A1, Weight({2}));
  const auto M = V.dense_action();
  EXPECT_EQ(divided_power_matrix(M.f[0], 0), RatMatrix::identity(3));
  EXPECT_EQ(divided_power_matrix(M.f[0], 1), M.f[0]);
  const auto f2 = divided_power_integral(M.f[0], 2);
  // v -> +-(lattice generator of weight -2); no other entries
  EXPECT_EQ(abs(f2(2, 0)), Int(1));
  EXPECT_EQ(f2(1, 0), Int(0));
  EXPECT_TRUE(divided_power_matrix(M.f[0], 3).is_zero());
  // f itself on the lattice: f v = f^{(1)} v and f (f v) = 2 f^{(2)} v
  EXPECT_EQ(abs(M.f[0](1, 0)), Rational(1));
  EXPECT_EQ(abs(M.f[0](2, 1)), Rational(2));
  RatMatrix shift(3, 3);
  shift(1, 0) = 1;
  shift(2, 1) = 1;
  EXPECT_THROW(divided_power_integral(shift, 2), InternalError);
  shift(2, 1) = 2;
  EXPECT_NO_THROW(divided_power_integral(shift, 2));
}

TEST(RootVectors, SimpleAndNonSimple) {
  const auto B2 = build_root_system("B2");
  const StructureConstants sc(B2);
  const auto V = build_weyl_module(B2, Weight({1, 0}));
  ASSERT_EQ(V.dimension(), 5u);
  const auto M = V.dense_action();
  EXPECT_EQ(root_vector_matrix(sc, B2.simple_index(0), M), M.f[0]);
  EXPECT_EQ(root_vector_matrix(sc, B2.simple_index(1), M), M.f[1]);
  const std::size_t ab = *B2.find_label("11");
  const auto [i, b] = sc.decomposition(ab);
  EXPECT_EQ(std::abs(sc.N(negative_id(B2.simple_index(i)), negative_id(b))), 1);
  const RatMatrix X = root_vector_matrix(sc, ab, M);
  EXPECT_FALSE(X.is_zero());
  const auto w = basis_weights(V);
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < X.cols(); ++c)
      if (X(r, c) != 0) EXPECT_EQ(w[r], w[c] - B2.root_weight(ab));
  EXPECT_THROW(root_vector_matrix(sc, 99, M), InputError);
}

TEST(RootVectors, BracketRelationsOnModules) {
  for (const auto& cs : module_cases) {
    const auto R = build_root_system(cs.system);
    const StructureConstants sc(R);
    const auto V = build_weyl_module(R, Weight(cs.weight));
    const auto M = V.dense_action();
    std::map<RootId, RatMatrix> X;
    for (std::size_t j = 0; j < R.num_positive(); ++j) {
      X[positive_id(j)] = root_vector_matrix(sc, j, M, +1);
      X[negative_id(j)] = root_vector_matrix(sc, j, M, -1);
    }
    for (const auto& [key, n] : sc.table()) {
      const auto [a, b] = key;
      ASSERT_EQ(commutator(X.at(a), X.at(b)), X.at(*sc.sum(a, b)).scaled(Rational(n))) << cs.system;
    }
    // [X_a, X_-a] = H_a acts by <mu, a^vee>
    const auto w = basis_weights(V);
    for (std::size_t j = 0; j < R.num_positive(); ++j) {
      std::vector<Rational> h;
      for (const auto& mu : w) h.push_back(Rational(pairing(R, mu, j)));
      ASSERT_EQ(commutator(X.at(positive_id(j)), X.at(negative_id(j))), diagonal(h)) << cs.system;
    }
  }
}

TEST(RootVectors, DividedPowersIntegralAndNilpotent) {
  for (const auto& cs : module_cases) {
    const auto R = build_root_system(cs.system);
    const StructureConstants sc(R);
    const auto V = build_weyl_module(R, Weight(cs.weight));
    const auto M = V.dense_action();
    const auto w = basis_weights(V);
    for (std::size_t j = 0; j < R.num_positive(); ++j)
      for (int sign : {-1, 1}) {
        const RatMatrix X = root_vector_matrix(sc, j, M, sign);
        long long bound = 0;
        for (const auto& mu : w) bound = std::max(bound, std::abs(pairing(R, mu, j)));
        for (unsigned m = 0; m <= static_cast<unsigned>(bound) + 1; ++m)
          ASSERT_NO_THROW(divided_power_integral(X, m)) << cs.system << " root " << j << " m " << m;
        ASSERT_TRUE(divided_power_matrix(X, static_cast<unsigned>(2 * bound + 1)).is_zero());
      }
  }
}

TEST(Sl2, CommutationFormulaAsMatrices) {
  // e^{(m)} f^{(n)} = sum_j f^{(n-j)} binom(h - m - n + 2j, j) e^{(m-j)}
  for (const auto& cs : std::vector<Case>{{"B2", {1, 1}}, {"B2", {2, 0}}, {"C4", {0, 0, 0, 1}}, {"C3", {1, 0, 1}}}) {
    const auto R = build_root_system(cs.system);
    const auto V = build_weyl_module(R, Weight(cs.weight));
    const auto M = V.dense_action();
    const auto w = basis_weights(V);
    for (std::size_t i = 0; i < R.rank(); ++i)
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n) {
          const RatMatrix lhs = divided_power_matrix(M.e[i], m) * divided_power_matrix(M.f[i], n);
          RatMatrix rhs(V.dimension(), V.dimension());
          for (unsigned j = 0; j <= std::min(m, n); ++j) {
            std::vector<Rational> d;
            for (const auto& mu : w)
              d.push_back(Rational(binomial(pairing(R, mu, R.simple_index(i)) - m - n + 2 * j, j)));
            rhs = rhs + divided_power_matrix(M.f[i], n - j) * diagonal(d) * divided_power_matrix(M.e[i], m - j);
          }
          ASSERT_EQ(lhs, rhs) << cs.system << " i=" << i << " m=" << m << " n=" << n;
        }
  }
}

TEST(Sl2, CommuteApplyOnHighestWeightVectors) {
  for (const auto& cs : module_cases) {
    const auto R = build_root_system(cs.system);
    const auto V = build_weyl_module(R, Weight(cs.weight));
    const auto v = V.highest_vector();
    for (std::size_t i = 0; i < R.rank(); ++i) {
      const long long h = pairing(R, V.highest_weight(), R.simple_index(i));
      for (unsigned n = 0; n <= static_cast<unsigned>(h); ++n)
        for (unsigned m = 0; m <= n + 1; ++m) {
          auto fn = V.apply_f(i, n, v);
          ASSERT_TRUE(fn.has_value());
          auto lhs = V.apply_e_divided(i, m, *fn);
          const Int c = sl2_commute_apply(m, n, h);
          if (m > n) {
            ASSERT_TRUE(!lhs || is_zero(lhs->coords));
            continue;
          }
          auto rest = V.apply_f(i, n - m, v);
          ASSERT_TRUE(lhs && rest);
          IntVector expect = rest->coords;
          for (auto& x : expect) x *= c;
          ASSERT_EQ(lhs->coords, expect) << cs.system << " i=" << i << " m=" << m << " n=" << n;
        }
    }
  }
}
