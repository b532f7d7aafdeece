#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffset/diffcore.hpp"
#include "diffset/numtheory.hpp"

namespace diffset {

/// Cyclotomic numbers (i,j)_e = |{x in C_i : x + 1 in C_j}| for C_i = g^i <g^e>.
struct CyclotomicTable {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t f = 0;  // (p-1)/e
  std::uint64_t g = 0;
  std::vector<std::vector<std::uint64_t>> numbers;  // e x e

  std::uint64_t total() const;
  bool operator==(const CyclotomicTable&) const = default;
};

/// Exact table by enumeration in O(p). g == 0 selects the smallest primitive root.
/// Throws std::invalid_argument if p is not prime, e does not divide p-1, or g is not primitive.
CyclotomicTable cyclotomic_numbers(std::uint64_t p, std::uint32_t e, std::uint64_t g = 0);

/// p = x^2 + 4y^2 = a^2 + 2b^2 with x = a = 1 (mod 4).
struct QuadReps {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  /// How the signs of y and b were fixed: "unnormalized" (both positive) or "y=+/-,b=+/-" for a generator.
  std::string sign_convention = "unnormalized";
  std::uint64_t generator = 0;
  /// Every (sign of y, sign of b) pair that reproduced the enumerated table.
  std::vector<std::pair<int, int>> matching_signs;
};

/// Throws std::invalid_argument unless p is a prime = 1 (mod 8). y and b are returned positive.
QuadReps quad_representations(std::uint64_t p);

/// The four coefficient systems of order 8: p mod 16 and whether 2 is a quartic residue.
enum class OcticCase { P1Quartic, P1NonQuartic, P9Quartic, P9NonQuartic };

std::string to_string(OcticCase c);  // "1Q", "1N", "9Q", "9N"
OcticCase parse_octic_case(const std::string& name);
/// Requires p prime = 1 (mod 8).
OcticCase octic_case(std::uint64_t p);

/// Assembles the 8x8 table from the closed-form coefficients for the case of p,
/// using the signs in `reps` as given. Throws std::domain_error when some entry is not an integer.
CyclotomicTable octic_closed_form(std::uint64_t p, const QuadReps& reps);

/// Fixes the signs of y and b for generator g (0: smallest primitive root) by matching the
/// enumerated table. Throws std::logic_error if no sign pair matches.
QuadReps sign_normalization(std::uint64_t p, std::uint64_t g = 0);

/// Sizes of the octic-residue profile at g^0..g^7 (with zero adjoined if requested), counted
/// directly from the residue set in O(p).
std::vector<std::uint64_t> octic_class_counts(std::uint64_t p, bool with_zero, std::uint64_t g = 0);

struct OcticDsVerdict {
  bool is_ds = false;
  std::uint64_t lambda = 0;
  std::string reason;
  bool verified_directly = false;
};

/// Octic residues mod p form a difference set iff A = I = N = J in the p = 9 (mod 16),
/// 2-quartic system, which forces a = 1 and x = -3. For p <= direct_limit the answer is
/// also checked against octic_class_counts (std::logic_error on disagreement).
OcticDsVerdict octic_ds_test(std::uint64_t p, std::uint64_t direct_limit = 20'000'000);

enum class OcticType { O, O0 };
std::string to_string(OcticType t);

struct OcticOptions {
  /// Largest p for the O(p) class-count verification.
  std::uint64_t direct_limit = 20'000'000;
  /// Largest p for building the whole set and running the general classifier.
  std::uint64_t full_limit = 30'000;
};

struct OcticClassification {
  std::uint64_t p = 0;
  OcticType type = OcticType::O;
  std::optional<AdsParams> ads;  // set iff the residue set (with 0 for O0) is a proper ADS
  std::string condition;         // which arithmetic condition held, or why none did
  bool verified_direct = false;
  bool verified_full = false;
};

/// Arithmetic test (p in {17, 41} or p = 8t^2 + 49 = 64u^2 + 441, t odd, u even), cross-checked
/// against direct verification within the option limits. Disagreement throws std::logic_error.
/// Returns no ADS for p != 1 (mod 8); throws std::invalid_argument if p is not prime.
OcticClassification classify_type_O(std::uint64_t p, const OcticOptions& options = {});

/// As classify_type_O for the residues with 0 adjoined: p = 41 or p = 8t^2 + 1 = 64u^2 + 9, t and u odd.
OcticClassification classify_type_O0(std::uint64_t p, const OcticOptions& options = {});

struct OcticScanEntry {
  std::uint64_t p = 0;
  std::optional<AdsParams> type_o;
  std::optional<AdsParams> type_o0;
  std::optional<std::uint64_t> ds_lambda;  // octic residues form a DS
};

/// Every prime p = 1 (mod 8) up to max_p whose octic residues (with or without 0) give a DS or ADS.
std::vector<OcticScanEntry> octic_scan(std::uint64_t max_p, unsigned jobs = 1, const OcticOptions& options = {});

/// One integer solution of the column-0 system for a given assignment of lambda / lambda+1.
struct OcticSystemRow {
  std::string letters;        // distinct column-0 entries, in system order
  std::vector<int> pattern;   // 0 = lambda, 1 = lambda+1, per letter
  std::int64_t x = 0;
  std::int64_t a = 0;
  std::optional<std::int64_t> y;  // empty when free
  std::optional<std::int64_t> b;  // empty when free
  std::int64_t norm = 0;          // (x^2 - a^2) / 2 = b^2 - 2y^2
  std::string factorization;
  /// No prime = +/-3 (mod 8) divides the norm to an odd power.
  bool representable = false;
  /// Some orbit of norm solutions has content coprime to a and x, so p = a^2 + 2b^2 can be prime.
  bool prime_capable = false;
  std::optional<std::uint64_t> p;  // when y or b is pinned
  std::string status;              // "family", "prime", or "rejected"
  std::string note;
};

/// Enumerates every non-constant lambda/lambda+1 assignment of the column-0 entries, solves the
/// difference equations over the rationals, and keeps solutions with x, a integral and = 1 (mod 4).
std::vector<OcticSystemRow> solve_octic_systems(OcticCase c, OcticType target);

struct NormSolution {
  BigInt b;
  BigInt y;
  std::size_t seed = 0;  // index into norm_seeds(N)
  std::uint32_t index = 0;
  BigInt p;  // a^2 + 2 b^2
  PrimeCertainty certainty = PrimeCertainty::Composite;
};

/// Orbit representatives (b, y) of b^2 - 2y^2 = N under multiplication by 3 + 2 sqrt 2, up to
/// the sign of the whole element: y in [0, sqrt(N/2)] for N > 0, [0, sqrt(-N)] for N < 0.
std::vector<std::pair<std::int64_t, std::int64_t>> norm_seeds(std::int64_t N);

/// The `count` solutions with smallest p = a^2 + 2b^2 over all seed orbits, ascending in p.
/// Throws std::invalid_argument for N == 0.
std::vector<NormSolution> enumerate_norm_solutions(std::int64_t N, std::size_t count, std::int64_t a);

}  // namespace diffset
