#pragma once

// Integer helpers shared by the family generators and the cyclotomy module:
// modular arithmetic on 64-bit operands, primality, factorization, and an
// arbitrary-precision integer type for the norm-equation enumerator.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diffset {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Floor square root; exact for every 64-bit input.
std::uint64_t isqrt_u64(std::uint64_t n);
bool is_square_u64(std::uint64_t n, std::uint64_t* root = nullptr);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

enum class PrimeCertainty { Composite, Prime, ProbablePrime };

/// Deterministic below 3.3e24 (first 13 prime bases), 40 random rounds above.
PrimeCertainty prime_certainty(const BigInt& n);

/// Prime factorization as (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

/// Renders a signed integer's factorization, e.g. -12 -> "-2^2*3".
std::string factorization_string(std::int64_t n);

/// Smallest primitive root modulo a prime p.
std::uint64_t primitive_root(std::uint64_t p);
bool is_primitive_root(std::uint64_t g, std::uint64_t p);

}  // namespace diffset
