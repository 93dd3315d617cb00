// Acceptance report: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modrep/incidence.hpp"
#include "modrep/jantzen.hpp"
#include "modrep/parabolic.hpp"

using namespace modrep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void report(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", seconds_since(t0));
  std::printf("%s [%d] %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), timing,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  for (const auto& note : o.notes) std::printf("     note: %s\n", note.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

// --- shared module sweep ------------------------------------------------

constexpr long long sweep_dim = 512;
// composition factors L(mu) of a swept V(lambda) can need V(mu) above sweep_dim
constexpr long long factor_dim = 4096;
const std::vector<std::string> sweep_families = {"A1", "A2", "A3", "B2", "C3", "C4"};
const std::vector<long long> sweep_primes = {2, 3, 5};

struct SweepEntry {
  std::string system;
  Weight lambda;
  std::shared_ptr<const AdmissibleModule> V;
};

// dominant weights with all coordinates <= bound and Weyl dimension <= sweep_dim
std::vector<Weight> dominant_box(const RootSystem& R, long long bound) {
  std::vector<Weight> out;
  std::vector<long long> c(R.rank(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == c.size()) {
      if (weyl_dimension(R, Weight(c)) <= sweep_dim) out.emplace_back(c);
      return;
    }
    for (long long v = 0; v <= bound; ++v) {
      c[i] = v;
      // dimension is increasing in each coordinate
      std::vector<long long> probe(c.begin(), c.begin() + static_cast<long>(i) + 1);
      probe.resize(c.size(), 0);
      if (weyl_dimension(R, Weight(probe)) > sweep_dim) break;
      rec(i + 1);
    }
    c[i] = 0;
  };
  rec(0);
  return out;
}

bool in_box(const Weight& w, long long bound) {
  for (std::size_t i = 0; i < w.rank(); ++i)
    if (w[i] > bound) return false;
  return true;
}

class Sweep {
 public:
  const std::vector<SweepEntry>& entries() {
    if (built_) return entries_;
    built_ = true;
    const long long outer = 25;  // largest p^2
    for (const auto& name : sweep_families) {
      const auto R = build_root_system(name);
      roots_.emplace(name, R);
      auto ws = dominant_box(R, outer);
      std::sort(ws.begin(), ws.end(),
                [&](const Weight& a, const Weight& b) { return weyl_dimension(R, a) < weyl_dimension(R, b); });
      for (const auto& w : ws)
        entries_.push_back({name, w, std::make_shared<const AdmissibleModule>(build_weyl_module(R, w, sweep_dim))});
    }
    return entries_;
  }
  const RootSystem& root(const std::string& name) { return roots_.at(name); }

  const ModularSimple& simple(std::size_t k, long long p) {
    auto key = std::make_pair(k, p);
    auto it = simples_.find(key);
    if (it == simples_.end()) it = simples_.emplace(key, simple_head_mod_p(entries_[k].V, p)).first;
    return it->second;
  }

 private:
  bool built_ = false;
  std::vector<SweepEntry> entries_;
  std::map<std::string, RootSystem> roots_;
  std::map<std::pair<std::size_t, long long>, ModularSimple> simples_;
};

Sweep sweep;

std::string describe(const SweepEntry& e, long long p) {
  return e.system + " " + e.lambda.to_string() + " p=" + std::to_string(p);
}

std::size_t dim_of(const WeightMultiset& ch) {
  Int s = 0;
  for (const auto& [w, m] : ch) s += m;
  return s.convert_to<std::size_t>();
}

}  // namespace

int main() {
  report(1, "C4 omega_4 p=2: dim V = 42, dim L = 16", [](Outcome& o) {
    const auto t0 = Clock::now();
    const auto C4 = build_root_system("C4");
    const auto V = std::make_shared<const AdmissibleModule>(build_weyl_module(C4, Weight({0, 0, 0, 1})));
    const auto L = simple_head_mod_p(V, 2);
    o.check(V->dimension() == 42, "dim V = " + std::to_string(V->dimension()));
    o.check(L.dimension() == 16, "dim L = " + std::to_string(L.dimension()));
    o.check(seconds_since(t0) < 60, "runtime above 60 s");
  });

  report(2, "C4 omega_4 p=2: exponent table, orbit 10, embedding 15, exceptional", [](Outcome& o) {
    const auto C4 = build_root_system("C4");
    const auto L = simple_head_mod_p(std::make_shared<const AdmissibleModule>(build_weyl_module(C4, Weight({0, 0, 0, 1}))), 2);
    const auto E = full_exponents(L);
    const auto table = *reference_table("C4");
    o.check(table.size() == C4.num_positive(), "table size");
    for (std::size_t j = 0; j < C4.num_positive(); ++j) {
      const auto& label = C4.root_label(j);
      o.check(E.entries[j] == table.at(label),
              label + " -> " + E.entries[j].to_string() + ", expected " + table.at(label).to_string());
    }
    o.check(orbit_dimension(E) == 10, "orbit dimension " + std::to_string(orbit_dimension(E)));
    o.check(embedding_dimension(L) == 15, "embedding dimension " + std::to_string(embedding_dimension(L)));
    o.check(is_exceptional(C4, E), "not exceptional");
  });

  report(3, "B2 omega p=2: dim 5, V = L(omega) + L(0), dim L 4, 0 not a weight, exponents", [](Outcome& o) {
    const auto B2 = build_root_system("B2");
    const Weight w({1, 0});
    o.check(B2.root_norm(B2.simple_index(0)) > B2.root_norm(B2.simple_index(1)), "alpha_1 is not the long root");
    // product over 10, 01, 11, 12 of <w + rho, a^vee> / <rho, a^vee>: 2/1 * 1/1 * 5/3 * 3/2
    const Rational by_hand = Rational(2) * Rational(1) * Rational(Int(5), Int(3)) * Rational(Int(3), Int(2));
    o.check(Rational(weyl_dimension(B2, w)) == by_hand && by_hand == 5, "Weyl dimension");
    o.check(decompose_weyl(B2, w, 2) == Decomposition{{w, Int(1)}, {Weight({0, 0}), Int(1)}}, "decomposition");
    const auto L = simple_head_mod_p(std::make_shared<const AdmissibleModule>(build_weyl_module(B2, w)), 2);
    o.check(L.dimension() == 4, "dim L = " + std::to_string(L.dimension()));
    o.check(!L.weight_dimensions().count(Weight({0, 0})), "0 is a weight of L");
    const auto E = full_exponents(L);
    const auto at = [&](const char* label) { return E.entries[*B2.find_label(label)]; };
    const std::multiset<ExtNat> simple{at("10"), at("01")};
    o.check(simple == std::multiset<ExtNat>{0, ExtNat::infinity()}, "simple roots not {0, inf}");
    // alpha short, beta long: alpha + beta = 11, 2 alpha + beta = 12
    o.check(at("11") == ExtNat(1), "alpha+beta -> " + at("11").to_string());
    o.check(at("12") == ExtNat(0), "2alpha+beta -> " + at("12").to_string());
    o.notes.push_back("label discrepancy: computed n(long alpha_1) = " + at("10").to_string() +
                      ", n(short alpha_2) = " + at("01").to_string() +
                      "; the printed example assigns 0 to the short root and inf to the long one, "
                      "which contradicts nu_2(<omega, alpha^vee>) for omega dual to the long root");
  });

  std::map<std::string, std::size_t> counts;
  report(4, "Jantzen sum = Gram valuations on the sweep", [&](Outcome& o) {
    const auto& es = sweep.entries();
    std::size_t n = 0;
    for (std::size_t k = 0; k < es.size(); ++k)
      for (long long p : sweep_primes) {
        if (!in_box(es[k].lambda, p * p)) continue;
        const auto rep = jantzen_vs_gram(*es[k].V, p);
        o.check(rep.ok(), describe(es[k], p));
        ++n;
      }
    o.notes.push_back(std::to_string(n) + " (system, weight, p) cases over " + std::to_string(es.size()) + " modules");
  });

  report(5, "full_exponents on simple roots = nu_p(<lambda, alpha_i^vee>) on the sweep", [&](Outcome& o) {
    const auto& es = sweep.entries();
    std::map<std::string, StructureConstants> scs;
    std::size_t n = 0;
    for (std::size_t k = 0; k < es.size(); ++k)
      for (long long p : sweep_primes) {
        if (!in_box(es[k].lambda, p * p)) continue;
        const auto& R = sweep.root(es[k].system);
        auto it = scs.find(es[k].system);
        if (it == scs.end()) it = scs.emplace(es[k].system, StructureConstants(R)).first;
        const auto E = full_exponents(sweep.simple(k, p), it->second);
        o.check(E.simple_part(R) == simple_exponents(R, es[k].lambda, p), describe(es[k], p));
        ++n;
      }
    o.notes.push_back(std::to_string(n) + " cases");
  });

  report(6, "dim V(lambda) = sum [V(lambda):L(mu)] dim L(mu) on the sweep", [&](Outcome& o) {
    const auto& es = sweep.entries();
    std::size_t n = 0, nontrivial = 0;
    Int largest = 0;
    for (long long p : sweep_primes) {
      std::map<std::string, SimpleCharacterCache> caches;
      for (std::size_t k = 0; k < es.size(); ++k) {
        if (!in_box(es[k].lambda, p * p)) continue;
        const auto& R = sweep.root(es[k].system);
        auto it = caches.find(es[k].system);
        if (it == caches.end()) it = caches.emplace(es[k].system, SimpleCharacterCache(R, p, factor_dim)).first;
        WeightMultiset ch;
        for (const auto& [w, d] : sweep.simple(k, p).weight_dimensions()) ch[w] = d;
        it->second.seed(es[k].lambda, ch);
        const auto d = decompose_weyl(it->second, es[k].lambda);
        Int total = 0;
        bool sane = d.count(es[k].lambda) && d.at(es[k].lambda) == 1;
        for (const auto& [mu, m] : d) {
          sane = sane && m > 0 && mu.is_dominant();
          total += m * Int(dim_of(it->second.simple_character(mu)));
          largest = std::max(largest, weyl_dimension(R, mu));
        }
        o.check(sane && total == weyl_dimension(R, es[k].lambda), describe(es[k], p));
        ++n;
        nontrivial += d.size() > 1;
      }
    }
    o.notes.push_back(std::to_string(n) + " cases, " + std::to_string(nontrivial) + " with a nontrivial radical, largest V(mu) built " + largest.str());
  });

  const auto incidence_specs = [] {
    std::vector<IncidenceSpec> s;
    for (long long p : {2, 3})
      for (long long r : {1, 2}) s.push_back({2, p, r});
    return s;
  }();

  report(7, "incidence n=2: brute_force_h0 = closed-form h0 for 0 <= a, b <= 4", [&](Outcome& o) {
    const auto t0 = Clock::now();
    o.check(brute_force_h0({2, 3, 1}, {3, 1}) == 29, "(p=3, r=1, a=3, b=1) is not 29");
    for (const auto& s : incidence_specs)
      for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b)
          o.check(brute_force_h0(s, {a, b}) == cohomology_effective(s, {a, b}).dims[0],
                  "p=" + std::to_string(s.p) + " r=" + std::to_string(s.r) + " a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
    o.check(seconds_since(t0) < 30, "runtime above 30 s");
  });

  report(8, "incidence (2,3,1; 0,1): h1 = 1, and chi-additivity on the sweep", [&](Outcome& o) {
    const auto t = cohomology_effective({2, 3, 1}, {0, 1});
    o.check(t.status == CohomologyStatus::closed_form && t.dims[1] == 1, "h1 = " + t.dims[1].str());
    std::size_t n = 0;
    for (const auto& s : incidence_specs)
      for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
          const BiDegree d{a, b};
          const auto g = general_cohomology(s, d);
          if (!g.exact()) continue;
          const std::string where =
              "p=" + std::to_string(s.p) + " r=" + std::to_string(s.r) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
          o.check(g.euler() == expected_euler(s, d), "chi mismatch at " + where);
          if (d.effective()) o.check(cohomology_effective(s, d).euler() == expected_euler(s, d), "closed form chi at " + where);
          ++n;
        }
    o.notes.push_back(std::to_string(n) + " bidegrees with exact tables");
  });

  report(9, "Kodaira-type vanishing for every ample (a, b) in the sweep", [&](Outcome& o) {
    for (const auto& s : incidence_specs)
      for (long long a = 1; a <= 4; ++a)
        for (long long b = 1; b <= 4; ++b)
          o.check(kodaira_check(s, {a, b}), "p=" + std::to_string(s.p) + " r=" + std::to_string(s.r) + " a=" +
                                                std::to_string(a) + " b=" + std::to_string(b));
  });

  report(10, "incidence parabolic of A_n: X(P) = Z w1 + Z p^r w_n, very ample iff a, b > 0", [](Outcome& o) {
    std::size_t from_modules = 0;
    for (int n : {2, 3})
      for (long long r : {1, 2})
        for (long long p : {2, 3}) {
          const auto A = build_root_system("A" + std::to_string(n));
          const long long q = to_ll(ipow(p, static_cast<unsigned>(r)));
          std::vector<ExtNat> simple(static_cast<std::size_t>(n), ExtNat::infinity());
          simple.front() = 0;
          simple.back() = static_cast<unsigned>(r);
          const ParabolicStandardSpec spec{simple};
          const std::string tag = "A" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r);
          const auto X = character_lattice(spec, p);
          o.check(X.to_string() == "Z*w1 + Z*" + std::to_string(q) + "*w" + std::to_string(n), tag + ": " + X.to_string());
          // the same parabolic arises as the stabilizer of the highest weight line of L(w1 + q w_n)
          const Weight la = Weight::fundamental(n, 0) + Weight::fundamental(n, static_cast<std::size_t>(n - 1)) * q;
          o.check(simple_exponents(A, la, p) == simple, tag + ": simple exponents of w1 + q w_n");
          if (weyl_dimension(A, la) <= sweep_dim) {
            const auto E = full_exponents(
                simple_head_mod_p(std::make_shared<const AdmissibleModule>(build_weyl_module(A, la, sweep_dim)), p));
            o.check(standard_spec(A, E).simple == simple, tag + ": stabilizer of the line");
            ++from_modules;
          }
          for (long long a = -3; a <= 3; ++a)
            for (long long b = -3; b <= 3; ++b) {
              const Weight chi = Weight::fundamental(n, 0) * a + Weight::fundamental(n, static_cast<std::size_t>(n - 1)) * (b * q);
              o.check(is_very_ample(chi, spec, p) == (a > 0 && b > 0), tag + ": chi " + chi.to_string());
            }
        }
    o.notes.push_back(std::to_string(from_modules) + " specs also recovered from the module L(w1 + p^r w_n)");
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
