#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klab/module_presentation.hpp"
#include "klab/ring.hpp"

namespace klab {

/// Truncation cap under which every catalog instance with n <= 4 is certified.
inline constexpr unsigned kFamilyLengthCap = 4096;

struct FamilyParameters {
  unsigned n = 2;
  /// z-exponent of the first generator (F1, F2, F6).
  std::optional<std::uint64_t> t;
  /// Exponent s in the relation pi^s * x1 (F5, F6).
  unsigned s = 1;
  /// Exponent k in the target R/(pi^k, x2) (F5).
  unsigned k = 1;
  /// Number of parameters (F2, F6); fixed for the other families.
  unsigned d = 3;
  /// F2 only: "", "x" or "z" selects which variable becomes the uniformizer proxy.
  std::string dvr;
  std::uint64_t prime = PrimeField::kDefaultModulus;
};

struct NamedTarget {
  std::string name;
  std::string description;
  ModulePresentation module;
};

/// An exact value the construction is known to produce, with a one-line derivation.
struct Expectation {
  std::string quantity;
  std::uint64_t value = 0;
  std::string basis;
};

struct FamilyInstance {
  std::string family_id;
  FamilyParameters parameters;
  RingSpec ring;
  std::vector<Polynomial> ideal;
  /// Source text of each generator, as fed to the parser.
  std::vector<std::string> generator_text;
  std::vector<NamedTarget> targets;
  std::vector<Expectation> expected;
  /// True when a variable stands in for the uniformizer of a DVR.
  bool dvr_proxy = false;

  const NamedTarget& target(const std::string& name) const;
  std::optional<std::uint64_t> expected_value(const std::string& quantity) const;
};

struct FamilyInfo {
  std::string id;
  std::string title;
  std::string ring;
  std::string generators;
  std::string parameters;
  std::vector<std::string> targets;
  std::string notes;
};

std::vector<FamilyInfo> list_families();

/// Throws ArgumentError for unknown ids or parameters outside the documented ranges.
FamilyInstance instantiate_family(const std::string& id, const FamilyParameters& parameters);
inline FamilyInstance instantiate_family(const std::string& id, unsigned n) {
  FamilyParameters p;
  p.n = n;
  return instantiate_family(id, p);
}

/// Default t for a family at (n, d): n^4 for F1, 4 n^(d-1) for F2 and F6.
std::uint64_t default_t(const std::string& id, unsigned n, unsigned d);

}  // namespace klab
