#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankmetric/json_io.hpp"

namespace rankmetric {

struct TowerParams {
  std::uint32_t p = 2, e = 1, m = 2;
};

struct SuiteConfig {
  std::vector<TowerParams> towers;
  std::uint64_t max_enum = kDefaultEnumCap;
  std::uint64_t seed = 0;
  std::vector<std::size_t> cartesian_powers = {1, 2, 3};
  std::size_t random_generators_per_shape = 2;

  /// q ∈ {2, 3, 4, 5} × m ∈ {2, 3}.
  static SuiteConfig defaults();
};

enum class Verdict { PASS, FAIL, NOT_APPLICABLE };

std::string to_string(Verdict v);

/// Outcome of auditing one claim at one parameter point. FAIL certificates
/// carry a witness that reproduces the violation when fed back through the
/// construction path.
struct Certificate {
  std::string claim;
  Json params;
  Verdict verdict = Verdict::PASS;
  Json witness;       // null unless FAIL
  std::string note;   // empty unless informative

  Json to_json() const;
};

/// Runs every claim audit over the configured grid. Output is sorted by
/// (claim, params) and is byte-stable for a fixed config and seed.
std::vector<Certificate> run_suite(const SuiteConfig& cfg);

Verdict worst_verdict(const std::vector<Certificate>& certs);

std::string certificates_to_ndjson(const std::vector<Certificate>& certs);
std::string certificates_to_csv(const std::vector<Certificate>& certs);

}  // namespace rankmetric
