#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubings/json_io.hpp"

namespace tubings {

struct VerificationReport {
  std::string suite;
  std::string census;  // human-readable description of the case universe
  long long cases = 0;
  std::vector<std::string> failures;  // counterexamples, JSON text
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  bool passed() const { return failures.empty(); }
  Json to_json() const;
};

struct SuiteOptions {
  int max_n = 4;
  std::uint64_t seed = 1;
  long long samples = 10000;
  int threads = 0;  // 0: hardware concurrency
};

// d^2 = 0 on every tubing of every connected graph with n <= max_n.
VerificationReport verify_d2(const SuiteOptions& opt);

// Decomposition-independence of the recursive boundary evaluation.
VerificationReport verify_welldef(const SuiteOptions& opt);

// Right pre-Lie co-identity on all tubings, n <= max_n.
VerificationReport verify_prelie(const SuiteOptions& opt);

// Tubing <=> basis + connectivity condition, exhaustive tube collections.
VerificationReport verify_topo(const SuiteOptions& opt);

// Substitution commutation and associativity; exhaustive to max_n and sampled
// on 5- and 6-node graphs.
VerificationReport verify_substitution(const SuiteOptions& opt);

// Generator decomposition replay, exhaustive n <= max_n.
VerificationReport verify_generators(const SuiteOptions& opt);

// Operad / permutad relation checkers over all size triples with total nodes
// bounded by max_n (here max_n is the total-node cap).
VerificationReport verify_operad(const SuiteOptions& opt);
VerificationReport verify_permutad(const SuiteOptions& opt);

// Trias' relations (i)-(vii), Leibniz rules (viii)-(x) and d^2 = 0 on dtubings
// with total nodes <= max_n; simplex basis count over edgeless unions.
VerificationReport verify_trias(const SuiteOptions& opt);

// L-algebra identity and the perp relations, exhaustive small + sampled.
VerificationReport verify_lalgebra(const SuiteOptions& opt);

// Strict-operadic-category axiom suite over all connected graphs n <= max_n.
VerificationReport verify_opcat(const SuiteOptions& opt);

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

}  // namespace tubings
