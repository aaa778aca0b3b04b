// Self-check suites over the whole construction: group structure, exact
// representation properties, the published coefficient table, the worked
// projection catalogue, and the label identities behind the double-coset
// expansions. The fast tier runs fixture and generator-level checks; the
// full tier adds the all-pairs and sweep properties.
#pragma once

#include <string>
#include <vector>

#include "icosa/combine.hpp"

namespace icosa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failing assertion, or a summary count
  double seconds = 0;
};

// One worked projection from the published walkthrough: the exact expected
// state for psi^Gamma_{mu lambda} |j, rho>. The diagonal stretched-state
// blocks are expanded over every row label.
struct CataloguedProjection {
  IrrepName gamma;
  long two_mu, two_lambda, twoj, two_rho;
  SpinState expected;
};
const std::vector<CataloguedProjection>& catalogued_projections();

// Element identities of the double-coset expansions: T0^a . center . T0^b
// equals the named element up to an E' factor. center is "S5" or "S10"
// with b meaningful, or "S11" with b = 0.
struct ProductIdentity {
  int a, b;
  const char* center;
  const char* label;
};
const std::vector<ProductIdentity>& product_identities();

// Path of the transcribed coefficient table used by the fixture check;
// the ICOSA_TABLE1 environment variable overrides the built-in location.
std::string table_fixture_path();

// Fixture + generator-level invariants; a few seconds.
std::vector<CheckResult> verify_fast();
// Everything in verify_fast plus the all-pairs representation property
// suite, orthogonality, closed-form and subduction cross-checks, the
// projection catalogue, oracle sweeps, and the label identities.
std::vector<CheckResult> verify_full();

}  // namespace icosa
