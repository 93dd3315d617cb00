#include <gtest/gtest.h>

#include "modrep/parabolic.hpp"

using namespace modrep;

namespace {

const ExtNat inf = ExtNat::infinity();

std::vector<ExtNat> ext(std::initializer_list<long long> v) {
  std::vector<ExtNat> out;
  for (auto x : v) out.push_back(x < 0 ? inf : ExtNat(static_cast<unsigned>(x)));
  return out;
}

ModularSimple simple_of(const RootSystem& R, const Weight& la, long long p) {
  return simple_head_mod_p(std::make_shared<const AdmissibleModule>(build_weyl_module(R, la)), p);
}

// all dominant weights with coordinates <= bound
std::vector<Weight> box(std::size_t rank, long long bound) {
  std::vector<Weight> out;
  std::vector<long long> c(rank, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t i = 0;
    while (i < rank && c[i] == bound) c[i++] = 0;
    if (i == rank) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST(SimpleExponents, Examples) {
  const auto C4 = build_root_system("C4");
  EXPECT_EQ(simple_exponents(C4, Weight({0, 0, 0, 1}), 2), ext({-1, -1, -1, 0}));
  for (int n : {2, 3, 4})
    for (unsigned r : {1u, 2u})
      for (long long p : {2, 3}) {
        const auto A = build_root_system("A" + std::to_string(n));
        const Weight w = Weight::fundamental(n, 0) + Weight::fundamental(n, n - 1) * to_ll(ipow(p, r));
        std::vector<ExtNat> expected(n, inf);
        expected[0] = 0;
        expected[n - 1] = r;
        EXPECT_EQ(simple_exponents(A, w, p), expected);
      }
  for (const auto& name : {"A3", "B2", "G2", "F4"}) {
    const auto R = build_root_system(name);
    EXPECT_EQ(simple_exponents(R, R.rho(), 2), std::vector<ExtNat>(R.rank(), ExtNat(0)));
  }
  EXPECT_EQ(simple_exponents(build_root_system("A2"), Weight({12, 0}), 2), ext({2, -1}));
}

TEST(FullExponents, SymplecticReferenceTable) {
  const auto C4 = build_root_system("C4");
  const auto E = full_exponents(simple_of(C4, Weight({0, 0, 0, 1}), 2));
  const auto table = *reference_table("C4");
  ASSERT_EQ(table.size(), C4.num_positive());
  for (std::size_t j = 0; j < C4.num_positive(); ++j) EXPECT_EQ(E.entries[j], table.at(C4.root_label(j))) << C4.root_label(j);
  EXPECT_TRUE(is_exceptional(C4, E));
  EXPECT_EQ(orbit_dimension(E), 10u);
  EXPECT_FALSE(reference_table("B2"));
}

TEST(FullExponents, RankTwoExceptional) {
  // V(omega) for B2 at p = 2: over the short/long labels the finite exponents
  // are {0, 0, 1} and one root has inf
  const auto B2 = build_root_system("B2");
  const auto E = full_exponents(simple_of(B2, Weight({1, 0}), 2));
  std::multiset<ExtNat> values(E.entries.begin(), E.entries.end());
  EXPECT_EQ(values, (std::multiset<ExtNat>{0, 0, 1, inf}));
  EXPECT_TRUE(is_exceptional(B2, E));
  EXPECT_EQ(orbit_dimension(E), 3u);
  EXPECT_EQ(embedding_dimension(simple_of(B2, Weight({1, 0}), 2)), 3u);
}

TEST(FullExponents, RankOne) {
  const auto A1 = build_root_system("A1");
  for (long long m = 1; m <= 12; ++m)
    for (long long p : {2, 3, 5}) {
      const auto E = full_exponents(simple_of(A1, Weight({m}), p));
      EXPECT_EQ(E.entries, std::vector<ExtNat>{nu_p(m, p)}) << m << " " << p;
    }
  EXPECT_EQ(full_exponents(simple_of(A1, Weight({0}), 2)).entries, std::vector<ExtNat>{inf});
}

TEST(FullExponents, SimplePartMatchesValuations) {
  for (const auto& name : {"A2", "A3", "B2", "C3", "G2"}) {
    const auto R = build_root_system(name);
    for (long long p : {2, 3}) {
      const StructureConstants sc(R);
      for (const auto& la : box(R.rank(), p * p)) {
        if (weyl_dimension(R, la) > 200) continue;
        const auto E = full_exponents(simple_of(R, la, p), sc);
        ASSERT_EQ(E.simple_part(R), simple_exponents(R, la, p)) << name << " " << la.to_string() << " p=" << p;
      }
    }
  }
}

TEST(FullExponents, StandardAwayFromSmallPrimes) {
  // uniqueness regime: p > 2 for B, C and p > 3 for G2
  for (const auto& [name, p] : std::vector<std::pair<const char*, long long>>{
           {"A2", 2}, {"A3", 2}, {"A2", 3}, {"B2", 3}, {"B2", 5}, {"C3", 3}, {"G2", 5}}) {
    const auto R = build_root_system(name);
    const StructureConstants sc(R);
    for (const auto& la : box(R.rank(), p * p)) {
      if (weyl_dimension(R, la) > 200) continue;
      const auto E = full_exponents(simple_of(R, la, p), sc);
      ASSERT_FALSE(is_exceptional(R, E)) << name << " " << la.to_string() << " p=" << p;
    }
  }
}

TEST(FullExponents, IndependentOfSignConvention) {
  const auto B2 = build_root_system("B2");
  const StructureConstants base(B2);
  for (const auto& la : {Weight({1, 0}), Weight({0, 1}), Weight({1, 1}), Weight({2, 1}), Weight({0, 2})}) {
    const auto L = simple_of(B2, la, 2);
    const auto E = full_exponents(L, base);
    for (int mask = 1; mask < 4; ++mask) {
      std::vector<int> signs(B2.num_positive(), 1);
      signs[2] = mask & 1 ? -1 : 1;
      signs[3] = mask & 2 ? -1 : 1;
      EXPECT_EQ(full_exponents(L, StructureConstants(B2, signs)), E) << la.to_string();
    }
  }
}

TEST(NonvanishingDividedPowers, BoundIsPairing) {
  const auto C4 = build_root_system("C4");
  const auto L = simple_of(C4, Weight({0, 0, 0, 1}), 2);
  const StructureConstants sc(C4);
  for (std::size_t j = 0; j < C4.num_positive(); ++j)
    EXPECT_EQ(nonvanishing_divided_powers(L, sc, j).size(),
              static_cast<std::size_t>(pairing(C4, Weight({0, 0, 0, 1}), j)));
}

TEST(StandardClosure, Examples) {
  const auto C4 = build_root_system("C4");
  const auto E = standard_closure(C4, ext({-1, -1, -1, 0}));
  for (std::size_t j = 0; j < C4.num_positive(); ++j)
    EXPECT_EQ(E.entries[j], C4.root(j)[3] > 0 ? ExtNat(0) : inf);
  const auto A2 = build_root_system("A2");
  EXPECT_EQ(standard_closure(A2, ext({1, 2})).entries, ext({1, 2, 1}));
  EXPECT_EQ(standard_closure(A2, ext({0, 0})).entries, ext({0, 0, 0}));
  EXPECT_EQ(standard_closure(A2, ext({-1, -1})).entries, ext({-1, -1, -1}));
  EXPECT_THROW(standard_closure(A2, ext({0})), InputError);
}

TEST(StandardClosure, IdempotentAndMonotone) {
  for (const auto& name : {"A3", "B3", "C3", "G2", "F4"}) {
    const auto R = build_root_system(name);
    std::vector<long long> c(R.rank(), -1);
    // coordinates in {inf, 0, 1, 2}
    while (true) {
      std::vector<ExtNat> s;
      for (auto x : c) s.push_back(x < 0 ? inf : ExtNat(static_cast<unsigned>(x)));
      const auto E = standard_closure(R, s);
      ASSERT_EQ(E.simple_part(R), s);
      ASSERT_EQ(standard_closure(R, E.simple_part(R)), E);
      ASSERT_FALSE(is_exceptional(R, E));
      for (std::size_t j = 0; j < R.num_positive(); ++j)
        for (std::size_t i = 0; i < R.rank(); ++i)
          if (R.root(j)[i] > 0) ASSERT_LE(E.entries[j], s[i]);
      std::size_t i = 0;
      while (i < c.size() && c[i] == 2) c[i++] = -1;
      if (i == c.size()) break;
      ++c[i];
    }
  }
}

TEST(OrbitDimension, Examples) {
  const auto C4 = build_root_system("C4");
  EXPECT_EQ(orbit_dimension(standard_closure(C4, ext({-1, -1, -1, 0}))), 10u);
  EXPECT_EQ(orbit_dimension(standard_closure(C4, ext({0, 0, 0, 0}))), 16u);
  EXPECT_EQ(orbit_dimension(standard_closure(C4, ext({-1, -1, -1, -1}))), 0u);
  EXPECT_EQ(embedding_dimension(simple_of(C4, Weight({0, 0, 0, 1}), 2)), 15u);
  EXPECT_EQ(embedding_dimension(simple_of(build_root_system("A1"), Weight({1}), 2)), 1u);
  EXPECT_THROW(embedding_dimension(simple_of(C4, Weight::zero(4), 2)), InputError);
}

TEST(CharacterLattice, Examples) {
  const ParabolicStandardSpec spec{ext({0, -1, 2})};
  const auto X = character_lattice(spec, 2);
  EXPECT_EQ(X.to_string(), "Z*w1 + Z*4*w3");
  EXPECT_TRUE(X.contains(Weight({3, 0, -8})));
  EXPECT_FALSE(X.contains(Weight({3, 1, 8})));
  EXPECT_FALSE(X.contains(Weight({3, 0, 2})));
  EXPECT_EQ(*X.coefficients(Weight({3, 0, -8})), (std::vector<Int>{3, -2}));
  EXPECT_EQ(character_lattice(ParabolicStandardSpec{ext({-1, -1})}, 3).to_string(), "0");
  EXPECT_EQ(character_lattice(ParabolicStandardSpec{ext({0, 1})}, 2).to_string(), "Z*w1 + Z*2*w2");
  EXPECT_EQ(spec.support(), (std::vector<std::size_t>{0, 2}));
}

TEST(CharacterLattice, VeryAmple) {
  const ParabolicStandardSpec spec{ext({0, -1, 1})};
  EXPECT_TRUE(is_very_ample(Weight({1, 0, 3}), spec, 3));
  EXPECT_FALSE(is_very_ample(Weight({1, 0, -3}), spec, 3));
  EXPECT_FALSE(is_very_ample(Weight({0, 0, 3}), spec, 3));
  EXPECT_THROW(is_very_ample(Weight({1, 0, 2}), spec, 3), InputError);
  EXPECT_THROW(is_very_ample(Weight({1, 1, 3}), spec, 3), InputError);
  EXPECT_FALSE(is_very_ample(Weight({0, 0, 0}), ParabolicStandardSpec{ext({-1, -1, -1})}, 3));
}

TEST(CharacterLattice, FromModules) {
  const auto A3 = build_root_system("A3");
  for (unsigned r : {1u, 2u}) {
    const Weight la = Weight::fundamental(3, 0) + Weight::fundamental(3, 2) * to_ll(ipow(2, r));
    const auto E = full_exponents(simple_of(A3, la, 2));
    const auto spec = standard_spec(A3, E);
    EXPECT_EQ(spec.simple, (std::vector<ExtNat>{0, inf, r}));
    EXPECT_TRUE(is_very_ample(la, spec, 2));
  }
  const auto C4 = build_root_system("C4");
  EXPECT_THROW(standard_spec(C4, full_exponents(simple_of(C4, Weight({0, 0, 0, 1}), 2))), UnsupportedError);
}
