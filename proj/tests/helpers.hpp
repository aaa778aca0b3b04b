// Shared test data: expected product-label identities of the double-coset
// expansions, used by both the unit tests and the acceptance gate.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace testdata {

struct CosetIdentity {
  int a, b;                // T0^a . center . T0^b
  const char* label;       // expected element, up to an E' factor
};

// center = S5
inline const std::vector<CosetIdentity>& s5_identities() {
  static const std::vector<CosetIdentity> v = {
      {0, 0, "S5"},   {1, 0, "R5^2"}, {2, 0, "T1^4"}, {3, 0, "T4"},
      {4, 0, "R4"},   {4, 1, "S4"},   {0, 1, "R4^2"}, {1, 1, "T5^4"},
      {2, 1, "T3"},   {3, 1, "R3"},   {3, 2, "S3"},   {4, 2, "R3^2"},
      {0, 2, "T4^4"}, {1, 2, "T2"},   {2, 2, "R2"},   {2, 3, "S2"},
      {3, 3, "R2^2"}, {4, 3, "T3^4"}, {0, 3, "T1"},   {1, 3, "R1"},
      {1, 4, "S1"},   {2, 4, "R1^2"}, {3, 4, "T2^4"}, {4, 4, "T5"},
      {0, 4, "R5"}};
  return v;
}

// center = S10
inline const std::vector<CosetIdentity>& s10_identities() {
  static const std::vector<CosetIdentity> v = {
      {0, 0, "S10"},  {1, 0, "T1^3"}, {2, 0, "R6^2"}, {3, 0, "R9"},
      {4, 0, "T5^2"}, {4, 1, "S9"},   {0, 1, "T5^3"}, {1, 1, "R10^2"},
      {2, 1, "R8"},   {3, 1, "T4^2"}, {3, 2, "S8"},   {4, 2, "T4^3"},
      {0, 2, "R9^2"}, {1, 2, "R7"},   {2, 2, "T3^2"}, {2, 3, "S7"},
      {3, 3, "T3^3"}, {4, 3, "R8^2"}, {0, 3, "R6"},   {1, 3, "T2^2"},
      {1, 4, "S6"},   {2, 4, "T2^3"}, {3, 4, "R7^2"}, {4, 4, "R10"},
      {0, 4, "T1^2"}};
  return v;
}

// T0^a . S11, a = 1..4
inline const std::vector<std::pair<int, const char*>>& s11_identities() {
  static const std::vector<std::pair<int, const char*>> v = {
      {1, "S14"}, {2, "S12"}, {3, "S15"}, {4, "S13"}};
  return v;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(ICOSA_FIXTURE_DIR) + "/" + name;
}

}  // namespace testdata
