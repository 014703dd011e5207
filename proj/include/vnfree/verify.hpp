#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vnfree/algebra.hpp"

namespace vnfree {

struct VerifyConfig {
  std::uint64_t seed = 0;
  int cases = 1000;
  int max_summands = 4;
  int max_matrix_size = 4;
  int weight_denominator_bound = 12;
  bool strict = false;
};

struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  int regenerated = 0;  // inputs redrawn because a hypothesis did not hold
  int discarded = 0;    // triples dropped by the associativity suite
  std::string first_counterexample;

  bool ok() const { return failed == 0; }
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<SuiteReport> suites;

  bool all_passed() const;
  // Deterministic, human-readable report; one line per suite.
  std::string format() const;
};

// Deterministic generator of random algebras in the closed class. Summand
// kinds are drawn uniformly from {C, M_n (2 <= n <= max_matrix_size), LZ,
// LF(p/q) with 1 < p/q <= 4}; weights are normalized positive rationals with
// numerator/denominator bounded by weight_denominator_bound.
class AlgebraGen {
 public:
  explicit AlgebraGen(const VerifyConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Algebra random_algebra();
  // A random free group parameter in (1, 4].
  Rational random_fgf_param();
  Rational random_unit_fraction();  // in (0, 1]
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  VerifyConfig cfg_;
  std::mt19937_64 rng_;
};

// Runs the randomized property suites: fdim additivity, commutativity,
// associativity, closed-form oracle equivalence, factoriality, and the
// parameter-shift property.
VerifyReport run_verify(const VerifyConfig& cfg);

}  // namespace vnfree
