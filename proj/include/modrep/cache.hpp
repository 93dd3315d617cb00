#pragma once

// On-disk JSON cache of module summaries keyed by (root system, lambda, p).

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "modrep/errors.hpp"
#include "modrep/highestweight.hpp"
#include "modrep/io.hpp"
#include "modrep/parabolic.hpp"

namespace modrep {

inline constexpr int summary_schema = 1;
inline constexpr const char* cache_env_var = "MODREP_CACHE_DIR";

/// Everything about L(lambda) mod p that the CLI reports without the module.
struct ModuleSummary {
  std::string system;
  Weight lambda;
  long long p = 2;
  Int weyl_dim = 0;
  std::size_t simple_dim = 0;
  std::map<Weight, std::size_t> simple_weights;
  std::vector<std::string> labels;  // positive roots, in root order
  ExponentVector exponents;

  json to_json() const {
    json w = json::array();
    for (const auto& [mu, d] : simple_weights) w.push_back({modrep::to_json(mu), d});
    json e = json::array();
    for (std::size_t j = 0; j < labels.size(); ++j) e.push_back({labels[j], modrep::to_json(exponents.entries[j])});
    return {{"schema", summary_schema},      {"system", system},
            {"weight", lambda.coords()},     {"p", p},
            {"weyl_dim", modrep::to_json(weyl_dim)}, {"simple_dim", simple_dim},
            {"simple_weights", w},           {"exponents", e}};
  }

  static ModuleSummary from_json(const json& j) {
    if (j.at("schema").get<int>() != summary_schema) throw InputError("summary schema mismatch");
    ModuleSummary s;
    s.system = j.at("system").get<std::string>();
    s.lambda = Weight(j.at("weight").get<std::vector<long long>>());
    s.p = j.at("p").get<long long>();
    const auto& wd = j.at("weyl_dim");
    s.weyl_dim = wd.is_string() ? Int(wd.get<std::string>()) : Int(wd.get<long long>());
    s.simple_dim = j.at("simple_dim").get<std::size_t>();
    for (const auto& e : j.at("simple_weights"))
      s.simple_weights[Weight(e.at(0).get<std::vector<long long>>())] = e.at(1).get<std::size_t>();
    for (const auto& e : j.at("exponents")) {
      s.labels.push_back(e.at(0).get<std::string>());
      s.exponents.entries.push_back(extnat_from_json(e.at(1)));
    }
    return s;
  }
};

inline ModuleSummary summarize(const RootSystem& R, const Weight& lambda, long long p,
                               long long cap = default_size_cap) {
  const auto V = std::make_shared<const AdmissibleModule>(build_weyl_module(R, lambda, cap));
  const auto L = simple_head_mod_p(V, p);
  ModuleSummary s;
  s.system = R.name();
  s.lambda = lambda;
  s.p = p;
  s.weyl_dim = Int(V->dimension());
  s.simple_dim = L.dimension();
  s.simple_weights = L.weight_dimensions();
  for (std::size_t j = 0; j < R.num_positive(); ++j) s.labels.push_back(R.root_label(j));
  s.exponents = full_exponents(L);
  return s;
}

enum class CacheMode { enabled, disabled, verify };

/// Provenance of one lookup, reported in the result envelope.
struct CacheReport {
  std::string status = "disabled";  // disabled | hit | miss | verified | recovered
  std::string path;
  std::optional<std::string> warning;

  json to_json() const {
    json j = {{"status", status}};
    if (!path.empty()) j["path"] = path;
    return j;
  }
};

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& p) {
    fd_ = ::open(p.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw UnsupportedError("cannot open cache lock " + p.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw UnsupportedError("cannot lock " + p.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

class SummaryCache {
 public:
  SummaryCache(std::optional<std::filesystem::path> dir, CacheMode mode) : dir_(std::move(dir)), mode_(mode) {
    if (!dir_) mode_ = CacheMode::disabled;
  }

  /// Directory from the explicit flag, else the environment, else none.
  static std::optional<std::filesystem::path> resolve_dir(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv(cache_env_var); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }

  std::string key(const std::string& system, const Weight& lambda, long long p) const {
    std::string w = lambda.to_string();
    for (auto& c : w)
      if (c == ',') c = '_';
    return "summary-" + system + "-" + w + "-p" + std::to_string(p) + ".json";
  }

  /// Stored summary if present, else computed (and stored). Under verify,
  /// a stored entry is recomputed and must match byte for byte.
  ModuleSummary get(const std::string& system, const Weight& lambda, long long p,
                    const std::function<ModuleSummary()>& compute, CacheReport& report) {
    if (mode_ == CacheMode::disabled) {
      report.status = "disabled";
      return compute();
    }
    std::filesystem::create_directories(*dir_);
    const auto path = *dir_ / key(system, lambda, p);
    report.path = path.string();
    FileLock lock(path.string() + ".lock");

    std::optional<std::string> stored;
    if (std::filesystem::exists(path)) {
      std::ifstream in(path, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      stored = ss.str();
    }

    std::optional<ModuleSummary> loaded;
    if (stored) {
      try {
        loaded = ModuleSummary::from_json(json::parse(*stored));
        if (loaded->system != system || loaded->lambda != lambda || loaded->p != p)
          throw InputError("key mismatch");
      } catch (const std::exception& e) {
        loaded.reset();
        report.warning = "discarded corrupted cache entry " + path.string() + " (" + e.what() + ")";
      }
    }

    if (loaded && mode_ == CacheMode::enabled) {
      report.status = "hit";
      return *loaded;
    }

    ModuleSummary fresh = compute();
    const std::string bytes = serialize(fresh);
    if (loaded && mode_ == CacheMode::verify) {
      if (bytes != *stored) throw InternalError("cache verification failed for " + path.string());
      report.status = "verified";
      return fresh;
    }
    write(path, bytes);
    report.status = report.warning ? "recovered" : "miss";
    return fresh;
  }

  static std::string serialize(const ModuleSummary& s) { return s.to_json().dump() + "\n"; }

 private:
  static void write(const std::filesystem::path& path, const std::string& bytes) {
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw UnsupportedError("cannot write cache file " + tmp);
      out << bytes;
    }
    std::filesystem::rename(tmp, path);
  }

  std::optional<std::filesystem::path> dir_;
  CacheMode mode_;
};

}  // namespace modrep
