#pragma once

// Request parsing, dispatch and output formatting for the modrep executable.

#include <chrono>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modrep/cache.hpp"
#include "modrep/chevalley.hpp"
#include "modrep/highestweight.hpp"
#include "modrep/incidence.hpp"
#include "modrep/io.hpp"
#include "modrep/jantzen.hpp"
#include "modrep/parabolic.hpp"
#include "modrep/rootsys.hpp"

namespace modrep::cli {

inline constexpr int schema_version = 1;

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> s = {"roots",   "weyl-dim",   "weyl-char", "simple",     "decompose",
                                             "jantzen", "stabilizer", "lattice",   "very-ample", "incidence"};
  return s;
}

struct CommandRequest {
  std::string subcommand;
  std::string system;
  std::string weight;
  std::optional<long long> p;
  std::string format = "json";
  long long cap = default_size_cap;
  std::string cache_dir;
  bool no_cache = false;
  bool verify_cache = false;
  bool dump_action = false;
  bool expand = false;
  std::string check_paper_table;
  std::string exponents;
  std::string chi;
  long long n = 2, r = 1, a = 0, b = 0;
  bool oracle = false;
  bool swap = false;

  json to_json() const {
    json j = {{"subcommand", subcommand}};
    if (subcommand == "incidence") {
      j["n"] = n;
      j["p"] = p ? json(*p) : json(nullptr);
      j["r"] = r;
      j["a"] = a;
      j["b"] = b;
      j["oracle"] = oracle;
      j["swap"] = swap;
    } else {
      j["system"] = system;
      if (!weight.empty()) j["weight"] = weight;
      if (p) j["p"] = *p;
      if (!exponents.empty()) j["exponents"] = exponents;
      if (!chi.empty()) j["chi"] = chi;
      if (dump_action) j["dump_action"] = true;
      if (expand) j["expand"] = true;
      if (!check_paper_table.empty()) j["check_paper_table"] = check_paper_table;
    }
    j["format"] = format;
    j["cap"] = cap;
    return j;
  }
};

struct ResultEnvelope {
  json request;
  json result;
  std::vector<std::string> warnings;
  double timing_ms = 0;
  json cache = {{"status", "unused"}};
  int exit_code = 0;  // nonzero when the payload reports a failed check

  json to_json() const {
    return {{"schema_version", schema_version}, {"request", request}, {"result", result},
            {"warnings", warnings},             {"timing_ms", timing_ms}, {"cache", cache}};
  }
};

/// The request after parsing; built completely before any computation.
struct Prepared {
  CommandRequest req;
  std::optional<RootSystem> R;
  std::optional<Weight> lambda;
  std::optional<std::vector<ExtNat>> exponents;
  std::optional<Weight> chi;
  std::optional<IncidenceSpec> incidence;
};

inline Prepared prepare(const CommandRequest& req) {
  Prepared out{req, {}, {}, {}, {}, {}};
  const auto& s = subcommands();
  if (std::find(s.begin(), s.end(), req.subcommand) == s.end())
    throw InputError("unknown subcommand '" + req.subcommand + "'");
  if (req.format != "json" && req.format != "tsv" && req.format != "text")
    throw InputError("format must be json, tsv or text");
  if (req.cap < 1) throw InputError("cap must be positive");
  if (req.no_cache && req.verify_cache) throw InputError("--no-cache and --verify-cache are exclusive");
  if (req.p) require_prime(*req.p);

  const auto& sub = req.subcommand;
  if (sub == "incidence") {
    if (!req.p) throw InputError("incidence needs --p");
    out.incidence = IncidenceSpec{req.n, *req.p, req.r};
    out.incidence->validate();
    return out;
  }

  if (req.system.empty()) throw InputError(sub + " needs a root system");
  out.R = build_root_system(req.system);
  const std::size_t l = out.R->rank();

  const bool needs_weight = sub != "roots" && sub != "lattice" && sub != "very-ample";
  if (!req.weight.empty()) {
    if (sub == "roots") throw InputError("roots takes no weight");
    out.lambda = parse_weight(req.weight, l);
    require_dominant(*out.lambda, sub.c_str());
  } else if (needs_weight) {
    throw InputError(sub + " needs a dominant weight");
  }

  const bool needs_p = sub != "roots" && sub != "weyl-dim" && sub != "weyl-char";
  if (needs_p && !req.p) throw InputError(sub + " needs -p");

  if (sub == "lattice" || sub == "very-ample") {
    if (!req.exponents.empty() && out.lambda) throw InputError("give either a weight or --exponents, not both");
    if (req.exponents.empty() && !out.lambda) throw InputError(sub + " needs a weight or --exponents");
    if (!req.exponents.empty()) out.exponents = parse_exponents(req.exponents, l);
  }
  if (sub == "very-ample") {
    if (req.chi.empty()) throw InputError("very-ample needs --chi");
    out.chi = parse_weight(req.chi, l);
  } else if (!req.chi.empty()) {
    throw InputError("--chi only applies to very-ample");
  }
  if (!req.check_paper_table.empty()) {
    if (sub != "stabilizer") throw InputError("--check-paper-table only applies to stabilizer");
    if (!reference_table(req.check_paper_table)) throw InputError("no embedded table '" + req.check_paper_table + "'");
  }
  if (req.dump_action && sub != "simple") throw InputError("--dump-action only applies to simple");
  if (req.expand && sub != "jantzen") throw InputError("--expand only applies to jantzen");
  return out;
}

namespace detail {

inline json weight_table(const std::map<Weight, std::size_t>& m) {
  json t = json::array();
  for (auto it = m.rbegin(); it != m.rend(); ++it) t.push_back({format_weight(it->first), it->second});
  return t;
}

inline json weight_table(const std::map<Weight, Int>& m) {
  json t = json::array();
  for (auto it = m.rbegin(); it != m.rend(); ++it) t.push_back({format_weight(it->first), to_json(it->second)});
  return t;
}

inline json mod_matrix(const ModMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

class Runner {
 public:
  Runner(const Prepared& pr, ResultEnvelope& env) : pr_(pr), env_(env) {
    CacheMode mode = pr.req.no_cache ? CacheMode::disabled
                                     : (pr.req.verify_cache ? CacheMode::verify : CacheMode::enabled);
    cache_.emplace(SummaryCache::resolve_dir(pr.req.cache_dir), mode);
  }

  json dispatch() {
    const auto& s = pr_.req.subcommand;
    if (pr_.R && pr_.req.p)
      if (auto w = characteristic_warning(*pr_.R, *pr_.req.p)) env_.warnings.push_back(*w);
    if (s == "roots") return roots();
    if (s == "weyl-dim") return weyl_dim();
    if (s == "weyl-char") return weyl_char();
    if (s == "simple") return simple();
    if (s == "decompose") return decompose();
    if (s == "jantzen") return jantzen();
    if (s == "stabilizer") return stabilizer();
    if (s == "lattice") return lattice();
    if (s == "very-ample") return very_ample();
    return incidence();
  }

 private:
  const RootSystem& R() const { return *pr_.R; }
  const Weight& lambda() const { return *pr_.lambda; }
  long long p() const { return *pr_.req.p; }

  ModuleSummary summary(const Weight& mu) {
    CacheReport rep;
    auto s = cache_->get(R().name(), mu, p(), [&] { return summarize(R(), mu, p(), pr_.req.cap); }, rep);
    if (rep.warning) env_.warnings.push_back(*rep.warning);
    env_.cache = rep.to_json();
    return s;
  }

  void require_cap(const Weight& mu) {
    const Int d = weyl_dimension(R(), mu);
    if (d > pr_.req.cap)
      throw UnsupportedError("dim V(" + mu.to_string() + ") = " + d.str() + " exceeds cap " +
                             std::to_string(pr_.req.cap));
  }

  json roots() {
    json pos = json::array();
    for (std::size_t j = 0; j < R().num_positive(); ++j)
      pos.push_back({R().root_label(j), R().root(j), R().height(j), R().root_norm(j)});
    return {{"system", R().name()},
            {"rank", R().rank()},
            {"cartan", R().cartan()},
            {"num_positive", R().num_positive()},
            {"rho", to_json(R().rho())},
            {"columns", {"root", "coefficients", "height", "norm"}},
            {"table", pos}};
  }

  json weyl_dim() {
    return {{"system", R().name()}, {"weight", format_weight(lambda())}, {"dim", to_json(weyl_dimension(R(), lambda()))}};
  }

  json weyl_char() {
    require_cap(lambda());
    const auto m = freudenthal_multiplicities(R(), lambda());
    Int total = 0;
    for (const auto& [w, c] : m) total += c;
    return {{"system", R().name()},
            {"weight", format_weight(lambda())},
            {"dim", to_json(total)},
            {"columns", {"weight", "multiplicity"}},
            {"table", weight_table(m)}};
  }

  json simple() {
    json out = {{"system", R().name()}, {"weight", format_weight(lambda())}, {"p", p()}};
    if (pr_.req.dump_action) {
      const auto V = std::make_shared<const AdmissibleModule>(build_weyl_module(R(), lambda(), pr_.req.cap));
      const auto L = simple_head_mod_p(V, p());
      out["dim"] = L.dimension();
      out["weyl_dim"] = V->dimension();
      out["zero_is_weight"] = L.weight_dimensions().count(Weight::zero(R().rank())) > 0;
      out["columns"] = {"weight", "dim"};
      out["table"] = weight_table(L.weight_dimensions());
      json acts = json::array();
      for (std::size_t k = 0; k < V->spaces().size(); ++k) {
        if (L.spaces()[k].dim == 0) continue;
        for (std::size_t i = 0; i < R().rank(); ++i) {
          if (auto e = L.raising(k, i); e && L.spaces()[e->first].dim > 0)
            acts.push_back({{"op", "e" + std::to_string(i + 1)},
                            {"from", format_weight(V->space(k).mu)},
                            {"to", format_weight(V->space(e->first).mu)},
                            {"matrix", mod_matrix(e->second)}});
          if (auto f = L.lowering(k, i, 1); f && L.spaces()[f->first].dim > 0)
            acts.push_back({{"op", "f" + std::to_string(i + 1)},
                            {"from", format_weight(V->space(k).mu)},
                            {"to", format_weight(V->space(f->first).mu)},
                            {"matrix", mod_matrix(f->second)}});
        }
      }
      out["action"] = acts;
      env_.cache = {{"status", "bypassed"}};
      return out;
    }
    const auto s = summary(lambda());
    out["dim"] = s.simple_dim;
    out["weyl_dim"] = to_json(s.weyl_dim);
    out["zero_is_weight"] = s.simple_weights.count(Weight::zero(R().rank())) > 0;
    out["columns"] = {"weight", "dim"};
    out["table"] = weight_table(s.simple_weights);
    return out;
  }

  json decompose() {
    require_cap(lambda());
    SimpleCharacterCache chars(R(), p(), pr_.req.cap);
    const auto d = decompose_weyl(chars, lambda());
    json rows = json::array();
    Int total = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
      Int dim = 0;
      for (const auto& [w, m] : chars.simple_character(it->first)) dim += m;
      total += it->second * dim;
      rows.push_back({format_weight(it->first), to_json(it->second), to_json(dim)});
    }
    const Int wd = weyl_dimension(R(), lambda());
    if (total != wd) throw InternalError("decomposition dimensions do not add up to dim V");
    return {{"system", R().name()},
            {"weight", format_weight(lambda())},
            {"p", p()},
            {"weyl_dim", to_json(wd)},
            {"columns", {"weight", "multiplicity", "dim"}},
            {"table", rows}};
  }

  json jantzen() {
    const auto J = jantzen_sum(R(), lambda(), p());
    json out = {{"system", R().name()},
                {"weight", format_weight(lambda())},
                {"p", p()},
                {"convention", jantzen_convention},
                {"columns", {"weight", "coefficient"}},
                {"table", weight_table(J.terms())}};
    if (pr_.req.expand) {
      require_cap(lambda());
      const auto rep = jantzen_vs_gram(R(), lambda(), p(), pr_.req.cap);
      out["expansion"] = weight_table(rep.sum_expansion);
      out["gram_valuations"] = weight_table(rep.gram_valuations);
      out["deltas"] = weight_table(rep.deltas);
      out["agree"] = rep.ok();
      if (!rep.ok()) env_.exit_code = 5;
    }
    return out;
  }

  json stabilizer() {
    const auto s = summary(lambda());
    json rows = json::array();
    for (std::size_t j = 0; j < s.labels.size(); ++j) rows.push_back({s.labels[j], to_json(s.exponents.entries[j])});
    const auto prop = simple_exponents(R(), lambda(), p());
    json out = {{"system", R().name()},
                {"weight", format_weight(lambda())},
                {"p", p()},
                {"columns", {"root", "exponent"}},
                {"table", rows},
                {"simple_exponents", to_json(s.exponents.simple_part(R()))},
                {"proposition_exponents", to_json(prop)},
                {"proposition_holds", s.exponents.simple_part(R()) == prop},
                {"exceptional", is_exceptional(R(), s.exponents)},
                {"orbit_dimension", orbit_dimension(s.exponents)},
                {"embedding_dimension", s.simple_dim >= 2 ? json(s.simple_dim - 1) : json(nullptr)}};
    if (s.exponents.simple_part(R()) != prop) env_.exit_code = 5;
    if (R().name() == "B2")
      env_.warnings.push_back(
          "B2 labels: simple roots here are 10 (long) and 01 (short). With omega dual to the long root, the "
          "short simple root gets inf and the long one 0, the reverse of the labels in the reference example "
          "(n_{-alpha} = 0, n_{-beta} = inf with beta long); the unordered data agree.");
    if (!pr_.req.check_paper_table.empty()) {
      const auto ref = *reference_table(pr_.req.check_paper_table);
      json mism = json::array();
      bool match = pr_.req.check_paper_table == R().name() && ref.size() == s.labels.size();
      for (std::size_t j = 0; j < s.labels.size(); ++j) {
        auto it = ref.find(s.labels[j]);
        if (it == ref.end() || it->second != s.exponents.entries[j]) {
          match = false;
          mism.push_back({s.labels[j], to_json(s.exponents.entries[j]),
                          it == ref.end() ? json(nullptr) : to_json(it->second)});
        }
      }
      out["paper_table"] = {{"name", pr_.req.check_paper_table}, {"rows", ref.size()}, {"match", match},
                            {"mismatches", mism}};
      if (!match) env_.exit_code = 5;
    }
    return out;
  }

  ParabolicStandardSpec standard_from_request(json& out) {
    if (pr_.exponents) {
      out["exponents"] = to_json(*pr_.exponents);
      return {*pr_.exponents};
    }
    const auto s = summary(*pr_.lambda);
    out["weight"] = format_weight(*pr_.lambda);
    out["exponents"] = to_json(s.exponents.simple_part(R()));
    return standard_spec(R(), s.exponents);
  }

  json lattice() {
    json out = {{"system", R().name()}, {"p", p()}};
    const auto spec = standard_from_request(out);
    const auto L = character_lattice(spec, p());
    json gens = json::array();
    for (const auto& g : L.generators()) gens.push_back({{"omega", g.simple + 1}, {"scale", to_json(g.scale)}});
    out["generators"] = gens;
    out["lattice"] = L.to_string();
    return out;
  }

  json very_ample() {
    json out = {{"system", R().name()}, {"p", p()}};
    const auto spec = standard_from_request(out);
    const auto L = character_lattice(spec, p());
    const auto a = L.coefficients(*pr_.chi);
    out["chi"] = format_weight(*pr_.chi);
    out["lattice"] = L.to_string();
    if (!a) throw InputError("chi = " + pr_.chi->to_string() + " is not in " + L.to_string());
    json coeffs = json::array();
    for (const auto& x : *a) coeffs.push_back(to_json(x));
    out["coefficients"] = coeffs;
    out["very_ample"] = is_very_ample(*pr_.chi, spec, p());
    return out;
  }

  json incidence() {
    const auto& S = *pr_.incidence;
    const auto& rq = pr_.req;
    const BiDegree given{rq.a, rq.b};
    const BiDegree d = rq.swap ? BiDegree{rq.b, rq.a} : given;
    CohomologyTable t;
    std::optional<Int> brute;
    if (rq.oracle) {
      t = general_cohomology(S, d, {default_incidence_cap, true});
      if (d.effective()) {
        brute = brute_force_h0(S, d);
        if (*brute != t.dims[0]) env_.exit_code = 5;
      }
    } else if (d.effective()) {
      t = cohomology_effective(S, d);
    } else {
      t = general_cohomology(S, d);
    }
    if (d.effective() && t.dims != cohomology_effective(S, d).dims) env_.exit_code = 5;
    if (!t.exact()) env_.exit_code = 4;

    json table = json::object();
    for (std::size_t i = 0; i < t.dims.size(); ++i) table["h" + std::to_string(i)] = to_json(t.dims[i]);
    BiDegree w = canonical_bidegree(S);
    if (rq.swap) w = {w.b, w.a};
    std::string section = defining_section(S).to_string();
    if (rq.swap) {
      std::string sw;
      for (char c : section) sw += c == 'x' ? 'y' : (c == 'y' ? 'x' : c);
      section = sw;
    }
    json out = {{"spec", {{"n", S.n}, {"p", S.p}, {"r", S.r}, {"q", S.q()}, {"dim", S.dim()}}},
                {"bidegree", {given.a, given.b}},
                {"section", section},
                {"table", table},
                {"status", status_name(t.status)},
                {"canonical", {w.a, w.b}},
                {"ample", is_ample(d)},
                {"euler", to_json(t.euler())}};
    if (!t.exact()) {
      json bounds = json::object();
      for (std::size_t i = 0; i < t.dims.size(); ++i)
        bounds["h" + std::to_string(i)] = {to_json(t.dims[i]), to_json(t.upper[i])};
      out["bounds"] = bounds;
      out.erase("euler");
    }
    if (brute) out["brute_force_h0"] = to_json(*brute);
    if (rq.swap) out["swapped"] = true;
    for (const auto& n : t.notes) env_.warnings.push_back(n);
    return out;
  }

  const Prepared& pr_;
  ResultEnvelope& env_;
  std::optional<SummaryCache> cache_;
};

inline std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + cell(v[i]);
    return s;
  }
  return v.dump();
}

}  // namespace detail

/// Parses, validates, computes. Library errors propagate as modrep::Error.
inline ResultEnvelope run(const CommandRequest& req) {
  const auto t0 = std::chrono::steady_clock::now();
  const Prepared pr = prepare(req);
  ResultEnvelope env;
  env.request = req.to_json();
  env.result = detail::Runner(pr, env).dispatch();
  env.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return env;
}

/// json: the whole envelope. tsv: the result table (or key/value pairs).
/// text: key/value lines followed by the table.
inline void write_output(std::ostream& os, const ResultEnvelope& env, const std::string& format) {
  if (format == "json") {
    os << env.to_json().dump(2) << "\n";
    return;
  }
  const json& r = env.result;
  const bool has_table = r.contains("table") && r["table"].is_array() && r.contains("columns");
  if (format == "tsv") {
    if (has_table) {
      const auto& cols = r["columns"];
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "") << cols[i].get<std::string>();
      os << "\n";
      for (const auto& row : r["table"]) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << detail::cell(row[i]);
        os << "\n";
      }
    } else {
      for (const auto& [k, v] : r.items()) os << k << "\t" << detail::cell(v) << "\n";
    }
    return;
  }
  for (const auto& w : env.warnings) os << "warning: " << w << "\n";
  for (const auto& [k, v] : r.items()) {
    if (has_table && (k == "table" || k == "columns")) continue;
    if (v.is_object()) {
      os << k << ":\n";
      for (const auto& [k2, v2] : v.items()) os << "  " << k2 << ": " << detail::cell(v2) << "\n";
    } else {
      os << k << ": " << detail::cell(v) << "\n";
    }
  }
  if (has_table) {
    os << "\n";
    const auto& cols = r["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "  " : "") << cols[i].get<std::string>();
    os << "\n";
    for (const auto& row : r["table"]) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "") << detail::cell(row[i]);
      os << "\n";
    }
  }
}

inline json error_json(const Error& e) {
  return {{"schema_version", schema_version}, {"error", {{"code", e.code_name()}, {"exit_code", e.exit_code()},
                                                        {"message", e.what()}}}};
}

}  // namespace modrep::cli
