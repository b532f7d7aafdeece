#pragma once

// Slow, independent reference implementations used to check the library.
// None of these call into the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Coords = std::vector<std::uint32_t>;

/// Difference counts over coordinate vectors: result[c] = #{(x, y), x != y : x - y = c}.
inline std::map<Coords, std::uint32_t> differences(const std::vector<std::uint32_t>& orders,
                                                   const std::vector<Coords>& set) {
  std::map<Coords, std::uint32_t> counts;
  for (const auto& x : set)
    for (const auto& y : set) {
      if (x == y) continue;
      Coords d(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) d[i] = (x[i] + orders[i] - y[i]) % orders[i];
      ++counts[d];
    }
  return counts;
}

/// Kind of a set from its full count vector over the v-1 nonidentity elements:
/// 0 = DS, 1 = ADS, 2 = neither; lambda and t are filled for 0 and 1.
struct Kind {
  int kind = 2;
  std::uint64_t lambda = 0;
  std::uint64_t t = 0;
};

inline Kind kind_of(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) return {};
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  if (*lo == *hi) return {0, *lo, counts.size()};
  if (*hi != *lo + 1) return {};
  const auto t = static_cast<std::uint64_t>(std::count(counts.begin(), counts.end(), *lo));
  return {1, *lo, t};
}

inline Kind kind_of_set(const std::vector<std::uint32_t>& orders, const std::vector<Coords>& set) {
  std::uint64_t v = 1;
  for (const auto n : orders) v *= n;
  const auto d = differences(orders, set);
  std::vector<std::uint64_t> counts;
  // Walk every nonidentity element in coordinate order.
  Coords c(orders.size(), 0);
  for (std::uint64_t i = 0; i < v; ++i) {
    if (i > 0) {
      const auto it = d.find(c);
      counts.push_back(it == d.end() ? 0 : it->second);
    }
    for (std::size_t pos = orders.size(); pos-- > 0;) {
      if (++c[pos] < orders[pos]) break;
      c[pos] = 0;
    }
  }
  return kind_of(counts);
}

inline Kind kind_of_cyclic(std::uint32_t v, const std::vector<std::uint32_t>& set) {
  std::vector<std::uint64_t> counts(v, 0);
  for (const auto x : set)
    for (const auto y : set)
      if (x != y) ++counts[(x + v - y) % v];
  counts.erase(counts.begin());
  return kind_of(counts);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t r = 0;
  for (std::uint64_t i = 1; i <= n; ++i) r += std::gcd(i, n) == 1 ? 1 : 0;
  return r;
}

/// Number of binary necklaces of length v with k ones (Burnside over rotations).
inline std::uint64_t necklaces(std::uint64_t v, std::uint64_t k) {
  if (v == 0) return k == 0 ? 1 : 0;
  std::uint64_t sum = 0;
  const std::uint64_t g = std::gcd(v, k);
  for (std::uint64_t d = 1; d <= g; ++d)
    if (g % d == 0) sum += phi(d) * binomial(v / d, k / d);
  return sum / v;
}

/// Calls visit on every k-subset of {0..n-1} that contains `fixed` (or all subsets when fixed is empty).
inline void subsets(std::uint32_t n, std::uint32_t k, std::optional<std::uint32_t> fixed,
                    const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> cur;
  bool stop = false;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t next) {
    if (stop) return;
    if (cur.size() == k) {
      if (!fixed || std::find(cur.begin(), cur.end(), *fixed) != cur.end()) stop = !visit(cur);
      return;
    }
    for (std::uint32_t x = next; x < n && !stop; ++x) {
      if (n - x < k - cur.size()) break;
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Some k-subset of Z_v whose difference counts take at most the values {lambda, lambda+1}
/// for the forced lambda. Returns 0 = proper ADS exists, 1 = only a DS exists, 2 = nothing.
inline int ads_exists(std::uint32_t v, std::uint32_t k) {
  bool ads = false, ds = false;
  subsets(v, k, 0u, [&](const std::vector<std::uint32_t>& s) {
    const Kind kd = kind_of_cyclic(v, s);
    if (kd.kind == 1) ads = true;
    if (kd.kind == 0) ds = true;
    return !ads;
  });
  return ads ? 0 : ds ? 1 : 2;
}

/// True when the k(k-1) differences of `marks` mod v are distinct.
inline bool is_ruler_mod(const std::vector<std::uint32_t>& marks, std::uint32_t v) {
  std::vector<bool> seen(v, false);
  for (const auto x : marks)
    for (const auto y : marks) {
      if (x == y) continue;
      const std::uint32_t d = (x + v - y) % v;
      if (d == 0 || seen[d]) return false;
      seen[d] = true;
    }
  return true;
}

inline bool mgr_exists(std::uint32_t v, std::uint32_t k) {
  bool found = false;
  subsets(v, k, 0u, [&](const std::vector<std::uint32_t>& s) {
    found = is_ruler_mod(s, v);
    return !found;
  });
  return found;
}

/// Shortest Golomb ruler length with k marks by plain search over increasing lengths.
inline std::uint32_t golomb_length(std::uint32_t k) {
  if (k <= 1) return 0;
  for (std::uint32_t len = k - 1;; ++len) {
    std::vector<std::uint32_t> marks{0, len};
    std::vector<bool> used(len + 1, false);
    used[len] = true;
    std::function<bool(std::uint32_t)> rec = [&](std::uint32_t next) -> bool {
      if (marks.size() == k) return true;
      for (std::uint32_t x = next; x < len; ++x) {
        std::vector<std::uint32_t> added;
        bool ok = true;
        for (const auto m : marks) {
          const std::uint32_t d = x > m ? x - m : m - x;
          if (used[d] || std::find(added.begin(), added.end(), d) != added.end()) {
            ok = false;
            break;
          }
          added.push_back(d);
        }
        if (!ok) continue;
        for (const auto d : added) used[d] = true;
        marks.push_back(x);
        const bool done = rec(x + 1);
        marks.pop_back();
        for (const auto d : added) used[d] = false;
        if (done) return true;
      }
      return false;
    };
    if (rec(1)) return len;
  }
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Class index i of x in C_i = g^i C_0 by testing (x g^{-i})^{(p-1)/e} = 1.
inline std::uint32_t class_of(std::uint64_t x, std::uint64_t p, std::uint32_t e, std::uint64_t g) {
  const std::uint64_t ginv = pow_mod(g, p - 2, p);
  std::uint64_t y = x % p;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (pow_mod(y, (p - 1) / e, p) == 1) return i;
    y = static_cast<std::uint64_t>(static_cast<unsigned __int128>(y) * ginv % p);
  }
  return e;
}

/// (i, j)_e = #{x in C_i : x + 1 in C_j}, computed by residue tests.
inline std::vector<std::vector<std::uint64_t>> cyclotomic_numbers(std::uint64_t p, std::uint32_t e, std::uint64_t g) {
  std::vector<std::vector<std::uint64_t>> t(e, std::vector<std::uint64_t>(e, 0));
  for (std::uint64_t x = 1; x + 1 < p; ++x) ++t[class_of(x, p, e, g)][class_of(x + 1, p, e, g)];
  return t;
}

inline std::vector<std::uint32_t> power_residues(std::uint64_t p, std::uint32_t e) {
  std::vector<std::uint32_t> r;
  for (std::uint64_t x = 1; x < p; ++x)
    if (pow_mod(x, (p - 1) / e, p) == 1) r.push_back(static_cast<std::uint32_t>(x));
  return r;
}

}  // namespace oracle
