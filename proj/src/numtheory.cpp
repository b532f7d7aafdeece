#include "diffset/numtheory.hpp"

#include <array>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

namespace diffset {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square_u64(std::uint64_t n, std::uint64_t* root) {
  const std::uint64_t r = isqrt_u64(n);
  if (root != nullptr) *root = r;
  return r * r == n;
}

namespace {

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 13> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint64_t p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first 12 prime bases are deterministic below 3.18e23, well past 2^64.
  for (const std::uint64_t a : kSmallPrimes) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

PrimeCertainty prime_certainty(const BigInt& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime_u64(static_cast<std::uint64_t>(n)) ? PrimeCertainty::Prime : PrimeCertainty::Composite;
  }
  for (const std::uint64_t p : kSmallPrimes) {
    if (n % p == 0) return PrimeCertainty::Composite;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (const std::uint64_t a : kSmallPrimes) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return PrimeCertainty::Composite;
  }
  static const BigInt kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return PrimeCertainty::Prime;
  std::mt19937_64 rng(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 40, rng) ? PrimeCertainty::ProbablePrime
                                                                : PrimeCertainty::Composite;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string factorization_string(std::int64_t n) {
  if (n == 0) return "0";
  std::ostringstream os;
  if (n < 0) os << '-';
  const auto mag = static_cast<std::uint64_t>(n < 0 ? -n : n);
  if (mag == 1) {
    os << 1;
    return os.str();
  }
  bool first = true;
  for (const auto& [p, e] : factorize_u64(mag)) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
  if (g % p == 0) return false;
  for (const auto& [q, e] : factorize_u64(p - 1)) {
    if (powmod(g, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = factorize_u64(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::invalid_argument("primitive_root: modulus is not prime");
}

}  // namespace diffset
