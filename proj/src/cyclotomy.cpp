#include "diffset/cyclotomy.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/rational.hpp>

#include "diffset/families.hpp"
#include "diffset/groups.hpp"
#include "parallel.hpp"

namespace diffset {

std::uint64_t CyclotomicTable::total() const {
  std::uint64_t s = 0;
  for (const auto& row : numbers)
    for (const auto n : row) s += n;
  return s;
}

namespace {

void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime_u64(p)) throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

void require_octic_prime(std::uint64_t p, const char* who) {
  require_prime(p, who);
  if (p % 8 != 1) throw std::invalid_argument(std::string(who) + ": need p = 1 (mod 8)");
}

std::uint64_t pick_generator(std::uint64_t p, std::uint64_t g) {
  if (g == 0) return primitive_root(p);
  if (!is_primitive_root(g % p, p))
    throw std::invalid_argument(std::to_string(g) + " is not a primitive root mod " + std::to_string(p));
  return g % p;
}

}  // namespace

CyclotomicTable cyclotomic_numbers(std::uint64_t p, std::uint32_t e, std::uint64_t g) {
  require_prime(p, "cyclotomic_numbers");
  if (p > (1ULL << 32)) throw std::invalid_argument("cyclotomic_numbers: p too large to enumerate");
  if (e == 0 || e > 65535 || (p - 1) % e != 0) throw std::invalid_argument("cyclotomic_numbers: e must divide p-1");
  CyclotomicTable t;
  t.p = p;
  t.e = e;
  t.f = (p - 1) / e;
  t.g = pick_generator(p, g);
  std::vector<std::uint16_t> ind(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t s = 0; s + 1 < p; ++s) {
    ind[x] = static_cast<std::uint16_t>(s % e);
    x = x * t.g % p;
  }
  t.numbers.assign(e, std::vector<std::uint64_t>(e, 0));
  for (std::uint64_t y = 1; y + 1 < p; ++y) ++t.numbers[ind[y]][ind[y + 1]];
  return t;
}

QuadReps quad_representations(std::uint64_t p) {
  require_octic_prime(p, "quad_representations");
  QuadReps r;
  for (std::uint64_t y = 1; 4 * y * y < p; ++y) {
    std::uint64_t root = 0;
    if (is_square_u64(p - 4 * y * y, &root)) {
      r.x = static_cast<std::int64_t>(root);
      r.y = static_cast<std::int64_t>(y);
      break;
    }
  }
  for (std::uint64_t b = 1; 2 * b * b < p; ++b) {
    std::uint64_t root = 0;
    if (is_square_u64(p - 2 * b * b, &root)) {
      r.a = static_cast<std::int64_t>(root);
      r.b = static_cast<std::int64_t>(b);
      break;
    }
  }
  if (r.y == 0 || r.b == 0) throw std::logic_error("quad_representations: no representation found");
  auto mod4 = [](std::int64_t v) { return ((v % 4) + 4) % 4; };
  if (mod4(r.x) != 1) r.x = -r.x;
  if (mod4(r.a) != 1) r.a = -r.a;
  return r;
}

std::string to_string(OcticCase c) {
  switch (c) {
    case OcticCase::P1Quartic: return "1Q";
    case OcticCase::P1NonQuartic: return "1N";
    case OcticCase::P9Quartic: return "9Q";
    case OcticCase::P9NonQuartic: return "9N";
  }
  return "?";
}

OcticCase parse_octic_case(const std::string& name) {
  for (const auto c : {OcticCase::P1Quartic, OcticCase::P1NonQuartic, OcticCase::P9Quartic, OcticCase::P9NonQuartic})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown octic case '" + name + "' (expected 1Q, 1N, 9Q or 9N)");
}

OcticCase octic_case(std::uint64_t p) {
  require_octic_prime(p, "octic_case");
  const bool quartic = powmod(2, (p - 1) / 4, p) == 1;
  if (p % 16 == 1) return quartic ? OcticCase::P1Quartic : OcticCase::P1NonQuartic;
  return quartic ? OcticCase::P9Quartic : OcticCase::P9NonQuartic;
}

namespace {

/// 64 * entry = p + c0 + cx x + ca a + cy y + cb b
struct Coef {
  int c0, cx, ca, cy, cb;
};

struct CaseData {
  std::array<const char*, 8> layout;
  std::array<Coef, 15> coef;  // letters A..O
};

constexpr std::array<const char*, 8> kLayout1 = {"ABCDEFGH", "BHIJKLMI", "CIGMNONJ", "DJMFLOOK",
                                                 "EKNLEKNL", "FLOOKDJM", "GMNONJCI", "HIJKLMIB"};
constexpr std::array<const char*, 8> kLayout9 = {"ABCDEFGH", "IJKLFDLM", "NONMGLCK", "JOOIHMKB",
                                                 "AINJAINJ", "IHMKBJOO", "NMGLCKNO", "JKLFDLMI"};

const CaseData& case_data(OcticCase c) {
  static const CaseData k1q{kLayout1,
                            {{{-23, -18, -24, 0, 0},
                              {-7, 2, 4, 16, 16},
                              {-7, 6, 0, 16, 0},
                              {-7, 2, 4, -16, 16},
                              {-7, -2, 8, 0, 0},
                              {-7, 2, 4, 16, -16},
                              {-7, 6, 0, -16, 0},
                              {-7, 2, 4, -16, -16},
                              {1, 2, -4, 0, 0},
                              {1, -6, 4, 0, 0},
                              {1, 2, -4, 0, 0},
                              {1, 2, -4, 0, 0},
                              {1, -6, 4, 0, 0},
                              {1, -2, 0, 0, 0},
                              {1, 2, -4, 0, 0}}}};
  static const CaseData k1n{kLayout1,
                            {{{-23, 6, 0, 0, 0},
                              {-7, 2, 4, 0, 0},
                              {-7, -2, -8, -16, 0},
                              {-7, 2, 4, 0, 0},
                              {-7, -10, 0, 0, 0},
                              {-7, 2, 4, 0, 0},
                              {-7, -2, -8, 16, 0},
                              {-7, 2, 4, 0, 0},
                              {1, -6, 4, 0, 0},
                              {1, 2, -4, 0, -16},
                              {1, 2, -4, 16, 0},
                              {1, 2, -4, -16, 0},
                              {1, 2, -4, 0, 16},
                              {1, 6, 8, 0, 0},
                              {1, -6, 4, 0, 0}}}};
  static const CaseData k9q{kLayout9,
                            {{{-15, -2, 0, 0, 0},
                              {1, 2, -4, 16, 0},
                              {1, 6, 8, -16, 0},
                              {1, 2, -4, -16, 0},
                              {1, -18, 0, 0, 0},
                              {1, 2, -4, 16, 0},
                              {1, 6, 8, 16, 0},
                              {1, 2, -4, -16, 0},
                              {-7, 2, 4, 0, 0},
                              {-7, 2, 4, 0, 0},
                              {1, -6, 4, 0, 16},
                              {1, 2, -4, 0, 0},
                              {1, -6, 4, 0, -16},
                              {-7, -2, -8, 0, 0},
                              {1, 2, -4, 0, 0}}}};
  static const CaseData k9n{kLayout9,
                            {{{-15, -10, -8, 0, 0},
                              {1, 2, -4, 0, -16},
                              {1, -2, 0, 16, 0},
                              {1, 2, -4, 0, -16},
                              {1, 6, 24, 0, 0},
                              {1, 2, -4, 0, 16},
                              {1, -2, 0, -16, 0},
                              {1, 2, -4, 0, 16},
                              {-7, 2, 4, 16, 0},
                              {-7, 2, 4, -16, 0},
                              {1, 2, -4, 0, 0},
                              {1, -6, 4, 0, 0},
                              {1, 2, -4, 0, 0},
                              {-7, 6, 0, 0, 0},
                              {1, -6, 4, 0, 0}}}};
  switch (c) {
    case OcticCase::P1Quartic: return k1q;
    case OcticCase::P1NonQuartic: return k1n;
    case OcticCase::P9Quartic: return k9q;
    case OcticCase::P9NonQuartic: return k9n;
  }
  throw std::logic_error("case_data: bad case");
}

std::optional<CyclotomicTable> closed_form_impl(std::uint64_t p, std::int64_t x, std::int64_t y, std::int64_t a,
                                                std::int64_t b) {
  const CaseData& data = case_data(octic_case(p));
  CyclotomicTable t;
  t.p = p;
  t.e = 8;
  t.f = (p - 1) / 8;
  t.numbers.assign(8, std::vector<std::uint64_t>(8, 0));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Coef& c = data.coef[data.layout[i][j] - 'A'];
      const __int128 v = static_cast<__int128>(p) + c.c0 + static_cast<__int128>(c.cx) * x +
                         static_cast<__int128>(c.ca) * a + static_cast<__int128>(c.cy) * y +
                         static_cast<__int128>(c.cb) * b;
      if (v < 0 || v % 64 != 0) return std::nullopt;
      t.numbers[i][j] = static_cast<std::uint64_t>(v / 64);
    }
  }
  return t;
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

CyclotomicTable octic_closed_form(std::uint64_t p, const QuadReps& reps) {
  require_octic_prime(p, "octic_closed_form");
  auto t = closed_form_impl(p, reps.x, reps.y, reps.a, reps.b);
  if (!t) throw std::domain_error("octic_closed_form: entry not divisible by 64 (wrong case or signs)");
  t->g = reps.generator;
  return *t;
}

QuadReps sign_normalization(std::uint64_t p, std::uint64_t g) {
  require_octic_prime(p, "sign_normalization");
  const CyclotomicTable enumerated = cyclotomic_numbers(p, 8, g);
  QuadReps r = quad_representations(p);
  r.generator = enumerated.g;
  for (const int sy : {1, -1}) {
    for (const int sb : {1, -1}) {
      const auto t = closed_form_impl(p, r.x, sy * r.y, r.a, sb * r.b);
      if (t && t->numbers == enumerated.numbers) r.matching_signs.emplace_back(sy, sb);
    }
  }
  if (r.matching_signs.empty())
    throw std::logic_error("sign_normalization: no sign choice reproduces the table for p = " + std::to_string(p));
  const auto [sy, sb] = r.matching_signs.front();
  r.y *= sy;
  r.b *= sb;
  r.sign_convention = "y=" + sign_char(sy) + ",b=" + sign_char(sb);
  return r;
}

std::vector<std::uint64_t> octic_class_counts(std::uint64_t p, bool with_zero, std::uint64_t g) {
  require_octic_prime(p, "octic_class_counts");
  g = pick_generator(p, g);
  const std::uint64_t f = (p - 1) / 8;
  const std::uint64_t h = powmod(g, 8, p);
  std::vector<char> in(p, 0);
  std::vector<std::uint64_t> residues;
  residues.reserve(f);
  std::uint64_t x = 1;
  for (std::uint64_t s = 0; s < f; ++s) {
    in[x] = 1;
    residues.push_back(x);
    x = mulmod(x, h, p);
  }
  std::vector<std::uint64_t> counts(8, 0);
  std::uint64_t d = 1;  // g^i
  for (int i = 0; i < 8; ++i) {
    std::uint64_t c = 0;
    for (const auto y : residues) {
      const std::uint64_t z = y + d >= p ? y + d - p : y + d;
      c += static_cast<std::uint64_t>(in[z]);
    }
    if (with_zero) c += static_cast<std::uint64_t>(in[d]) + static_cast<std::uint64_t>(in[p - d]);
    counts[i] = c;
    d = mulmod(d, g, p);
  }
  return counts;
}

namespace {

Classification classify_class_counts(std::uint64_t p, std::uint64_t k, const std::vector<std::uint64_t>& counts) {
  const std::uint64_t f = (p - 1) / 8;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> vm;
  for (const auto c : counts) vm.emplace_back(c, f);
  return classify_counts(p, k, vm);
}

bool same_params(const std::optional<AdsParams>& x, const std::optional<AdsParams>& y) {
  if (x.has_value() != y.has_value()) return false;
  if (!x) return true;
  return x->v == y->v && x->k == y->k && x->lambda == y->lambda && x->t == y->t;
}

std::optional<AdsParams> proper_ads(const Classification& c) {
  if (!c.is_ads()) return std::nullopt;
  return c.params;
}

std::string params_text(const std::optional<AdsParams>& a) {
  if (!a) return "none";
  return "(" + std::to_string(a->v) + "," + std::to_string(a->k) + "," + std::to_string(a->lambda) + "," +
         std::to_string(a->t) + ")";
}

}  // namespace

OcticDsVerdict octic_ds_test(std::uint64_t p, std::uint64_t direct_limit) {
  require_octic_prime(p, "octic_ds_test");
  OcticDsVerdict v;
  const OcticCase c = octic_case(p);
  if (c == OcticCase::P1Quartic || c == OcticCase::P1NonQuartic) {
    v.reason = "p = 1 (mod 16): the column-0 entries cannot all be equal";
  } else if (c == OcticCase::P9NonQuartic) {
    v.reason = "2 is not a quartic residue: the two column-0 entries I and J differ by y/2";
  } else {
    const QuadReps r = quad_representations(p);
    if (r.a == 1 && r.x == -3) {
      v.is_ds = true;
      v.lambda = (p - 9) / 64;
      v.reason = "a = 1 and x = -3";
    } else {
      v.reason = "A = I = N = J needs a = 1 and x = -3, here a = " + std::to_string(r.a) +
                 ", x = " + std::to_string(r.x);
    }
  }
  if (p <= direct_limit) {
    const auto counts = octic_class_counts(p, false);
    const Classification direct = classify_class_counts(p, (p - 1) / 8, counts);
    const bool direct_ds = direct.is_ds();
    if (direct_ds != v.is_ds || (direct_ds && direct.params.lambda != v.lambda))
      throw std::logic_error("octic_ds_test: closed-form verdict disagrees with the residue set at p = " +
                             std::to_string(p));
    v.verified_directly = true;
  }
  return v;
}

std::string to_string(OcticType t) { return t == OcticType::O ? "O" : "O0"; }

namespace {

// Theorem-style arithmetic condition; returns the explanation and sets `holds`.
std::string octic_condition(std::uint64_t p, OcticType type, bool& holds) {
  holds = false;
  const std::uint64_t special = 41;
  if (p == special || (type == OcticType::O && p == 17)) {
    holds = true;
    return "exceptional prime " + std::to_string(p);
  }
  const std::uint64_t base_t = type == OcticType::O ? 49 : 1;
  const std::uint64_t base_u = type == OcticType::O ? 441 : 9;
  const bool u_even = type == OcticType::O;
  const std::string form = "8t^2 + " + std::to_string(base_t) + " = 64u^2 + " + std::to_string(base_u);
  std::uint64_t t = 0, u = 0;
  if (p <= base_u || (p - base_t) % 8 != 0 || !is_square_u64((p - base_t) / 8, &t) || (p - base_u) % 64 != 0 ||
      !is_square_u64((p - base_u) / 64, &u))
    return "p is not of the form " + form;
  const std::string where = " with t = " + std::to_string(t) + ", u = " + std::to_string(u);
  if (t % 2 == 0) return "p = " + form + where + " but t is even";
  if ((u % 2 == 0) != u_even) return "p = " + form + where + " but u is " + (u_even ? "odd" : "even");
  holds = true;
  return "p = " + form + where;
}

OcticClassification classify_octic(std::uint64_t p, OcticType type, const OcticOptions& options) {
  require_prime(p, type == OcticType::O ? "classify_type_O" : "classify_type_O0");
  OcticClassification out;
  out.p = p;
  out.type = type;
  if (p % 8 != 1) {
    out.condition = "p != 1 (mod 8)";
    return out;
  }
  const bool with_zero = type == OcticType::O0;
  const std::uint64_t k = (p - 1) / 8 + (with_zero ? 1 : 0);
  bool holds = false;
  out.condition = octic_condition(p, type, holds);
  if (holds) {
    const std::uint64_t pairs = k * (k - 1);
    const std::uint64_t lambda = pairs / (p - 1);
    out.ads = AdsParams{p, k, lambda, (lambda + 1) * (p - 1) - pairs};
  }
  const auto fail = [&](const std::string& route, const std::optional<AdsParams>& got) {
    throw std::logic_error("classify_type_" + to_string(type) + "(" + std::to_string(p) + "): arithmetic test gives " +
                           params_text(out.ads) + " but " + route + " gives " + params_text(got));
  };
  if (p <= options.direct_limit) {
    const auto direct = proper_ads(classify_class_counts(p, k, octic_class_counts(p, with_zero)));
    if (!same_params(direct, out.ads)) fail("the class counts", direct);
    out.verified_direct = true;
  }
  if (p <= options.full_limit) {
    IndexSet set = power_residues(p, 8);
    if (with_zero) set.insert(set.begin(), 0);
    const auto full = proper_ads(classify(GroupSpec::cyclic(static_cast<std::uint32_t>(p)), set));
    if (!same_params(full, out.ads)) fail("the full profile", full);
    out.verified_full = true;
  }
  return out;
}

}  // namespace

OcticClassification classify_type_O(std::uint64_t p, const OcticOptions& options) {
  return classify_octic(p, OcticType::O, options);
}

OcticClassification classify_type_O0(std::uint64_t p, const OcticOptions& options) {
  return classify_octic(p, OcticType::O0, options);
}

std::vector<OcticScanEntry> octic_scan(std::uint64_t max_p, unsigned jobs, const OcticOptions& options) {
  std::vector<std::uint64_t> primes;
  if (max_p >= 17) {
    std::vector<char> composite(max_p + 1, 0);
    for (std::uint64_t i = 2; i * i <= max_p; ++i)
      if (!composite[i])
        for (std::uint64_t j = i * i; j <= max_p; j += i) composite[j] = 1;
    for (std::uint64_t p = 17; p <= max_p; p += 8)
      if (!composite[p]) primes.push_back(p);
  }
  std::vector<OcticScanEntry> entries(primes.size());
  detail::parallel_for(primes.size(), jobs, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    entries[i].p = p;
    entries[i].type_o = classify_type_O(p, options).ads;
    entries[i].type_o0 = classify_type_O0(p, options).ads;
    const OcticDsVerdict ds = octic_ds_test(p, options.direct_limit);
    if (ds.is_ds) entries[i].ds_lambda = ds.lambda;
  });
  std::vector<OcticScanEntry> out;
  for (auto& e : entries)
    if (e.type_o || e.type_o0 || e.ds_lambda) out.push_back(std::move(e));
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> norm_seeds(std::int64_t N) {
  if (N == 0) throw std::invalid_argument("norm_seeds: N must be nonzero");
  const std::uint64_t mag = static_cast<std::uint64_t>(N < 0 ? -N : N);
  const std::uint64_t bound = N > 0 ? isqrt_u64(mag / 2) : isqrt_u64(mag);
  std::vector<std::pair<std::int64_t, std::int64_t>> seeds;
  for (std::uint64_t y = 0; y <= bound; ++y) {
    const std::int64_t r = N + 2 * static_cast<std::int64_t>(y * y);
    std::uint64_t b = 0;
    if (r < 0 || !is_square_u64(static_cast<std::uint64_t>(r), &b)) continue;
    const auto bi = static_cast<std::int64_t>(b);
    const auto yi = static_cast<std::int64_t>(y);
    seeds.emplace_back(bi, yi);
    if (yi > 0 && bi > 0) seeds.emplace_back(-bi, yi);
  }
  return seeds;
}

std::vector<NormSolution> enumerate_norm_solutions(std::int64_t N, std::size_t count, std::int64_t a) {
  if (N == 0) throw std::invalid_argument("enumerate_norm_solutions: N must be nonzero");
  const auto seeds = norm_seeds(N);
  const BigInt target = N;
  const BigInt a2 = BigInt(a) * a;
  std::vector<NormSolution> all;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    BigInt b = seeds[s].first;
    BigInt y = seeds[s].second;
    // Along an orbit b^2 grows from the seed on, so the first `count` of each orbit suffice.
    for (std::uint32_t i = 0; i < count; ++i) {
      if (b * b - 2 * y * y != target) throw std::logic_error("enumerate_norm_solutions: norm drifted");
      NormSolution sol;
      sol.b = b;
      sol.y = y;
      sol.seed = s;
      sol.index = i;
      sol.p = a2 + 2 * b * b;
      sol.certainty = prime_certainty(sol.p);
      all.push_back(std::move(sol));
      BigInt nb = 3 * b + 4 * y;
      BigInt ny = 2 * b + 3 * y;
      b = std::move(nb);
      y = std::move(ny);
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const NormSolution& l, const NormSolution& r) { return l.p < r.p; });
  if (all.size() > count) all.resize(count);
  return all;
}

namespace {

using Rational = boost::rational<std::int64_t>;

struct LinearSolution {
  // For each unknown: a value when it does not depend on a free unknown.
  std::array<std::optional<Rational>, 4> value;
  std::array<bool, 4> free{};
};

/// Gauss-Jordan over Q for rows [c_x c_a c_y c_b | rhs]. Empty when inconsistent.
std::optional<LinearSolution> solve_rational(std::vector<std::array<Rational, 5>> m) {
  std::array<int, 4> pivot_row{-1, -1, -1, -1};
  std::size_t r = 0;
  for (int col = 0; col < 4 && r < m.size(); ++col) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][col].numerator() == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[r]);
    const Rational lead = m[r][col];
    for (auto& v : m[r]) v /= lead;
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o == r || m[o][col].numerator() == 0) continue;
      const Rational factor = m[o][col];
      for (int c = 0; c < 5; ++c) m[o][c] -= factor * m[r][c];
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t o = r; o < m.size(); ++o)
    if (m[o][4].numerator() != 0) return std::nullopt;
  LinearSolution s;
  for (int col = 0; col < 4; ++col) {
    if (pivot_row[col] < 0) {
      s.free[col] = true;
      continue;
    }
    const auto& row = m[pivot_row[col]];
    bool depends = false;
    for (int other = 0; other < 4; ++other)
      if (other != col && pivot_row[other] < 0 && row[other].numerator() != 0) depends = true;
    if (!depends) s.value[col] = row[4];
  }
  return s;
}

std::int64_t mod4(std::int64_t v) { return ((v % 4) + 4) % 4; }

bool norm_representable(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& [q, e] : factorize_u64(static_cast<std::uint64_t>(n < 0 ? -n : n)))
    if ((q % 8 == 3 || q % 8 == 5) && e % 2 == 1) return false;
  return true;
}

bool norm_prime_capable(std::int64_t n, std::int64_t x, std::int64_t a) {
  if (n == 0) return false;
  for (const auto& [b, y] : norm_seeds(n)) {
    const std::uint64_t content = gcd_u64(static_cast<std::uint64_t>(b < 0 ? -b : b), static_cast<std::uint64_t>(y));
    if (gcd_u64(content, static_cast<std::uint64_t>(a < 0 ? -a : a)) == 1 &&
        gcd_u64(content, static_cast<std::uint64_t>(x < 0 ? -x : x)) == 1)
      return true;
  }
  return false;
}

// Pins p from the determined unknowns and checks it really is a solution of this case.
void judge_concrete(OcticSystemRow& row, OcticCase c, OcticType target) {
  std::int64_t p = 0;
  if (row.y) {
    if (*row.y == 0) {
      row.status = "rejected";
      row.note = "y = 0";
      return;
    }
    p = row.x * row.x + 4 * *row.y * *row.y;
  }
  if (row.b) {
    if (*row.b == 0) {
      row.status = "rejected";
      row.note = "b = 0";
      return;
    }
    const std::int64_t q = row.a * row.a + 2 * *row.b * *row.b;
    if (row.y && q != p) {
      row.status = "rejected";
      row.note = "x^2 + 4y^2 != a^2 + 2b^2";
      return;
    }
    p = q;
  }
  row.p = static_cast<std::uint64_t>(p);
  row.status = "rejected";
  if (!is_prime_u64(*row.p)) {
    row.note = "p = " + std::to_string(p) + " is not prime";
    return;
  }
  std::uint64_t root = 0;
  if (!row.y && ((p - row.x * row.x) % 4 != 0 || !is_square_u64(static_cast<std::uint64_t>(p - row.x * row.x) / 4, &root))) {
    row.note = "p = " + std::to_string(p) + " has no representation x^2 + 4y^2 with this x";
    return;
  }
  if (!row.b && ((p - row.a * row.a) % 2 != 0 || !is_square_u64(static_cast<std::uint64_t>(p - row.a * row.a) / 2, &root))) {
    row.note = "p = " + std::to_string(p) + " has no representation a^2 + 2b^2 with this a";
    return;
  }
  if (*row.p % 8 != 1 || octic_case(*row.p) != c) {
    row.note = "p = " + std::to_string(p) + " is outside this case";
    return;
  }
  const OcticClassification v = target == OcticType::O ? classify_type_O(*row.p) : classify_type_O0(*row.p);
  if (!v.ads) {
    row.note = "p = " + std::to_string(p) + " gives no almost difference set";
    return;
  }
  row.status = "prime";
  row.note = "ADS " + params_text(v.ads);
}

}  // namespace

std::vector<OcticSystemRow> solve_octic_systems(OcticCase c, OcticType target) {
  const CaseData& data = case_data(c);
  const bool p9 = c == OcticCase::P9Quartic || c == OcticCase::P9NonQuartic;
  // Adjoining 0 raises (0,0) by one, plus (4,0) when f is odd (p = 9 mod 16) or (0,0) again when f is even.
  std::array<int, 8> adjust{};
  if (target == OcticType::O0) {
    adjust[0] += 1;
    adjust[p9 ? 4 : 0] += 1;
  }
  std::vector<std::pair<char, int>> groups;
  for (int i = 0; i < 8; ++i) {
    const std::pair<char, int> g{data.layout[i][0], adjust[i]};
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
  }
  std::sort(groups.begin(), groups.end());
  const std::size_t n = groups.size();

  std::vector<OcticSystemRow> rows;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = static_cast<int>((mask >> (n - 1 - i)) & 1u);
    const Coef& ref = data.coef[groups[0].first - 'A'];
    std::vector<std::array<Rational, 5>> m;
    for (std::size_t i = 1; i < n; ++i) {
      const Coef& cg = data.coef[groups[i].first - 'A'];
      const std::int64_t rhs =
          64 * (eps[i] - eps[0]) - (cg.c0 - ref.c0) - 64 * (groups[i].second - groups[0].second);
      m.push_back({Rational(cg.cx - ref.cx), Rational(cg.ca - ref.ca), Rational(cg.cy - ref.cy),
                   Rational(cg.cb - ref.cb), Rational(rhs)});
    }
    const auto sol = solve_rational(m);
    if (!sol) continue;
    const auto& xv = sol->value[0];
    const auto& av = sol->value[1];
    if (!xv || !av || xv->denominator() != 1 || av->denominator() != 1) continue;
    if ((!sol->free[2] && !sol->value[2]) || (!sol->free[3] && !sol->value[3])) continue;
    if ((sol->value[2] && sol->value[2]->denominator() != 1) || (sol->value[3] && sol->value[3]->denominator() != 1))
      continue;
    OcticSystemRow row;
    for (const auto& g : groups) row.letters.push_back(g.first);
    row.pattern = eps;
    row.x = xv->numerator();
    row.a = av->numerator();
    if (mod4(row.x) != 1 || mod4(row.a) != 1) continue;
    if (sol->value[2]) row.y = sol->value[2]->numerator();
    if (sol->value[3]) row.b = sol->value[3]->numerator();
    row.norm = (row.x * row.x - row.a * row.a) / 2;
    row.factorization = factorization_string(row.norm);
    row.representable = norm_representable(row.norm);
    row.prime_capable = row.representable && norm_prime_capable(row.norm, row.x, row.a);
    if (!row.y && !row.b) {
      row.status = "family";
      row.note = !row.representable   ? "no element of Z[sqrt 2] has this norm"
                 : !row.prime_capable ? "every solution shares a factor with a or x"
                                      : "can produce primes";
    } else {
      judge_concrete(row, c, target);
    }
    const bool dup = std::any_of(rows.begin(), rows.end(), [&](const OcticSystemRow& o) {
      return o.x == row.x && o.a == row.a && o.y == row.y && o.b == row.b;
    });
    if (!dup) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace diffset
