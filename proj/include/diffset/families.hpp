#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/diffcore.hpp"
#include "diffset/groups.hpp"

namespace diffset {

enum class FamilyName { Paley, QuarticB, QuarticB0, OcticO, OcticO0, Singer, Sporadic };

std::optional<FamilyName> parse_family_name(const std::string& name);
std::string to_string(FamilyName name);

/// C_0 of order e modulo a prime p: {x^e mod p : 1 <= x < p}, sorted.
/// Throws std::invalid_argument unless p is prime and e | p - 1.
IndexSet power_residues(std::uint64_t p, std::uint32_t e);

/// Quadratic residues modulo a prime v = 3 (mod 4).
IndexSet paley(std::uint64_t v);

/// A (q^2+q+1, q+1, 1) Singer difference set in Z_{q^2+q+1} for prime q.
IndexSet singer_planar(std::uint32_t q);

struct SporadicRecord {
  std::string id;
  GroupSpec group;
  std::vector<GroupElement> set;
  std::optional<GroupElement> extension;  // documented addable element, if any
  AdsParams params;                       // (v, k, lambda) of the base difference set
};

const std::vector<SporadicRecord>& sporadic_records();
/// Throws std::invalid_argument for an unknown id.
const SporadicRecord& sporadic(const std::string& id);

struct FamilyInstance {
  GroupSpec group;
  IndexSet set;
  std::string description;
};

/// Builds a named family member. `param` is p for residue families, q for Singer.
/// Quartic B / octic O are the residues alone; B0 / O0 add zero. `with_zero` adds zero to any family.
FamilyInstance make_family(FamilyName name, std::uint64_t param, bool with_zero = false);

}  // namespace diffset
