#include "diffset/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "diffset/numtheory.hpp"

namespace diffset {

std::optional<FamilyName> parse_family_name(const std::string& name) {
  std::string s;
  for (const char ch : name) s.push_back(ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "paley") return FamilyName::Paley;
  if (s == "quartic_b" || s == "quartic" || s == "b") return FamilyName::QuarticB;
  if (s == "quartic_b0" || s == "b0") return FamilyName::QuarticB0;
  if (s == "octic_o" || s == "octic" || s == "o") return FamilyName::OcticO;
  if (s == "octic_o0" || s == "o0") return FamilyName::OcticO0;
  if (s == "singer") return FamilyName::Singer;
  if (s == "sporadic") return FamilyName::Sporadic;
  return std::nullopt;
}

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::Paley: return "PALEY";
    case FamilyName::QuarticB: return "QUARTIC_B";
    case FamilyName::QuarticB0: return "QUARTIC_B0";
    case FamilyName::OcticO: return "OCTIC_O";
    case FamilyName::OcticO0: return "OCTIC_O0";
    case FamilyName::Singer: return "SINGER";
    case FamilyName::Sporadic: return "SPORADIC";
  }
  return "?";
}

IndexSet power_residues(std::uint64_t p, std::uint32_t e) {
  if (!is_prime_u64(p)) throw std::invalid_argument("power_residues: modulus is not prime");
  if (e == 0 || (p - 1) % e != 0) throw std::invalid_argument("power_residues: e must divide p - 1");
  if (p > (1ULL << 31)) throw std::invalid_argument("power_residues: modulus too large to materialize");
  // C_0 = <g^e>, generated by repeated multiplication
  const std::uint64_t g = primitive_root(p);
  const std::uint64_t step = powmod(g, e, p);
  const std::uint64_t f = (p - 1) / e;
  IndexSet out;
  out.reserve(f);
  std::uint64_t x = 1;
  for (std::uint64_t s = 0; s < f; ++s) {
    out.push_back(static_cast<std::uint32_t>(x));
    x = mulmod(x, step, p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet paley(std::uint64_t v) {
  if (!is_prime_u64(v) || v % 4 != 3) throw std::invalid_argument("paley: v must be a prime = 3 (mod 4)");
  return power_residues(v, 2);
}

namespace {

// GF(q^3) as F_q[x] / (x^3 + f2 x^2 + f1 x + f0); an element is (c0, c1, c2).
struct CubicField {
  std::uint32_t q;
  std::array<std::uint32_t, 3> f;  // f0, f1, f2

  using Elem = std::array<std::uint32_t, 3>;

  Elem mul(const Elem& a, const Elem& b) const {
    std::array<std::uint64_t, 5> prod{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    for (auto& c : prod) c %= q;
    // x^3 = -(f2 x^2 + f1 x + f0)
    for (int deg = 4; deg >= 3; --deg) {
      const std::uint64_t c = prod[deg];
      prod[deg] = 0;
      for (int i = 0; i < 3; ++i) prod[deg - 3 + i] = (prod[deg - 3 + i] + (q - f[i]) * c) % q;
    }
    return {static_cast<std::uint32_t>(prod[0]), static_cast<std::uint32_t>(prod[1]),
            static_cast<std::uint32_t>(prod[2])};
  }

  Elem pow(Elem base, std::uint64_t e) const {
    Elem r{1, 0, 0};
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

bool has_root(std::uint32_t q, const std::array<std::uint32_t, 3>& f) {
  for (std::uint64_t x = 0; x < q; ++x) {
    const std::uint64_t val = (x * x % q * x + f[2] * x % q * x + f[1] * x + f[0]) % q;
    if (val == 0) return true;
  }
  return false;
}

}  // namespace

IndexSet singer_planar(std::uint32_t q) {
  if (!is_prime_u64(q)) throw std::invalid_argument("singer_planar: q must be prime");
  if (q > 1000) throw std::invalid_argument("singer_planar: q too large");
  // A cubic without roots in F_q is irreducible.
  std::optional<CubicField> field;
  for (std::uint32_t f2 = 0; f2 < q && !field; ++f2)
    for (std::uint32_t f1 = 0; f1 < q && !field; ++f1)
      for (std::uint32_t f0 = 1; f0 < q && !field; ++f0)
        if (!has_root(q, {f0, f1, f2})) field = CubicField{q, {f0, f1, f2}};
  if (!field) throw std::logic_error("singer_planar: no irreducible cubic found");

  const std::uint64_t order = static_cast<std::uint64_t>(q) * q * q - 1;
  const auto factors = factorize_u64(order);
  std::optional<CubicField::Elem> alpha;
  for (std::uint32_t c0 = 0; c0 < q && !alpha; ++c0)
    for (std::uint32_t c1 = 1; c1 < q && !alpha; ++c1) {
      const CubicField::Elem cand{c0, c1, 0};
      bool primitive = true;
      for (const auto& [r, e] : factors)
        if (field->pow(cand, order / r) == CubicField::Elem{1, 0, 0}) {
          primitive = false;
          break;
        }
      if (primitive) alpha = cand;
    }
  if (!alpha) throw std::logic_error("singer_planar: no primitive element found");

  // Tr(1) = 3, Tr(x) = -f2, Tr(x^2) = f2^2 - 2 f1 (Newton's identities).
  const auto& f = field->f;
  const std::uint64_t tr0 = 3 % q;
  const std::uint64_t tr1 = (q - f[2]) % q;
  const std::uint64_t tr2 = (static_cast<std::uint64_t>(f[2]) * f[2] + 2ULL * q - 2ULL * f[1] % q) % q;

  const std::uint32_t v = q * q + q + 1;
  IndexSet out;
  CubicField::Elem beta{1, 0, 0};
  for (std::uint32_t i = 0; i < v; ++i) {
    if ((tr0 * beta[0] + tr1 * beta[1] + tr2 * beta[2]) % q == 0) out.push_back(i);
    beta = field->mul(beta, *alpha);
  }
  if (out.size() != q + 1) throw std::logic_error("singer_planar: trace hyperplane has wrong size");
  return out;
}

namespace {

using E = GroupElement;

SporadicRecord make_record(std::string id, std::vector<std::uint32_t> orders,
                           std::vector<std::vector<std::uint32_t>> pts, std::optional<std::vector<std::uint32_t>> ext,
                           AdsParams params) {
  std::vector<GroupElement> set;
  for (auto& c : pts) set.push_back(E{std::move(c)});
  std::optional<GroupElement> e;
  if (ext) e = E{*ext};
  return SporadicRecord{std::move(id), GroupSpec(std::move(orders)), std::move(set), std::move(e), params};
}

std::vector<SporadicRecord> build_sporadic() {
  std::vector<SporadicRecord> r;
  // Table 1 of the source: difference sets in 2-groups plus the element whose addition gives an ADS.
  r.push_back(make_record("16-6-2-Z4xZ4", {4, 4}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 2}, {0, 3}},
                          std::vector<std::uint32_t>{1, 1}, {16, 6, 2, 15}));
  r.push_back(make_record("64-28-12-Z8xZ8", {8, 8},
                          {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {4, 0}, {0, 4}, {1, 1}, {3, 0}, {1, 2},
                           {1, 4}, {0, 3}, {4, 1}, {4, 4}, {3, 4}, {1, 6}, {2, 3}, {2, 5}, {4, 3}, {6, 4},
                           {4, 6}, {3, 3}, {5, 5}, {7, 2}, {6, 3}, {6, 5}, {7, 6}, {7, 7}},
                          std::vector<std::uint32_t>{3, 1}, {64, 28, 12, 63}));
  r.push_back(make_record("64-28-12-Z4xZ4xZ4-a", {4, 4, 4},
                          {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0},
                           {1, 0, 1}, {1, 2, 0}, {1, 0, 2}, {2, 0, 1}, {0, 0, 3}, {2, 2, 0}, {1, 1, 1},
                           {3, 1, 0}, {1, 2, 1}, {1, 2, 2}, {2, 3, 0}, {2, 1, 2}, {0, 3, 2}, {2, 0, 3},
                           {1, 1, 3}, {1, 3, 2}, {3, 0, 3}, {3, 3, 1}, {3, 3, 2}, {3, 2, 3}, {3, 3, 3}},
                          std::vector<std::uint32_t>{0, 1, 1}, {64, 28, 12, 63}));
  r.push_back(make_record("64-28-12-Z4xZ4xZ4-b", {4, 4, 4},
                          {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0},
                           {1, 0, 1}, {3, 0, 0}, {1, 0, 2}, {0, 1, 1}, {0, 1, 2}, {2, 0, 1}, {2, 2, 0},
                           {1, 3, 0}, {3, 0, 2}, {0, 3, 1}, {0, 1, 3}, {2, 3, 0}, {0, 2, 3}, {3, 1, 2},
                           {3, 2, 1}, {3, 0, 3}, {1, 2, 3}, {0, 3, 3}, {2, 3, 2}, {2, 2, 3}, {3, 3, 2}},
                          std::vector<std::uint32_t>{1, 1, 1}, {64, 28, 12, 63}));
  r.push_back(make_record("64-28-12-Z4xZ4xZ4-c", {4, 4, 4},
                          {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0},
                           {1, 0, 1}, {3, 0, 0}, {1, 0, 2}, {0, 1, 1}, {2, 1, 0}, {0, 2, 1}, {2, 2, 0},
                           {1, 0, 3}, {3, 0, 2}, {0, 3, 1}, {0, 1, 3}, {0, 3, 2}, {2, 0, 3}, {3, 3, 0},
                           {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {0, 3, 3}, {2, 3, 2}, {2, 2, 3}, {3, 2, 3}},
                          std::vector<std::uint32_t>{1, 1, 1}, {64, 28, 12, 63}));
  r.push_back(make_record("64-28-12-Z4xZ4xZ4-d", {4, 4, 4},
                          {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0},
                           {1, 0, 1}, {3, 0, 0}, {1, 0, 2}, {0, 1, 1}, {2, 1, 0}, {0, 2, 1}, {0, 0, 3},
                           {2, 2, 0}, {1, 0, 3}, {3, 0, 2}, {0, 3, 1}, {0, 3, 2}, {0, 2, 3}, {3, 3, 0},
                           {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {2, 1, 3}, {2, 3, 2}, {3, 2, 3}, {2, 3, 3}},
                          std::vector<std::uint32_t>{1, 1, 1}, {64, 28, 12, 63}));
  r.push_back(make_record("64-28-12-Z4xZ4xZ4-e", {4, 4, 4},
                          {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0},
                           {1, 0, 1}, {3, 0, 0}, {1, 0, 2}, {0, 1, 1}, {2, 1, 0}, {0, 2, 1}, {0, 0, 3},
                           {2, 2, 0}, {1, 3, 0}, {1, 0, 3}, {3, 0, 2}, {0, 3, 2}, {0, 2, 3}, {3, 1, 2},
                           {3, 2, 1}, {2, 3, 1}, {2, 1, 3}, {0, 3, 3}, {2, 3, 2}, {3, 3, 2}, {3, 2, 3}},
                          std::vector<std::uint32_t>{1, 1, 1}, {64, 28, 12, 63}));
  // The Z2 x Z8 (16,6,2) set whose sumset misses (1,4), a non-double; no valid extension.
  r.push_back(make_record("16-6-2-Z2xZ8", {2, 8}, {{0, 0}, {0, 1}, {0, 2}, {0, 5}, {1, 0}, {1, 6}}, std::nullopt,
                          {16, 6, 2, 15}));
  return r;
}

}  // namespace

const std::vector<SporadicRecord>& sporadic_records() {
  static const std::vector<SporadicRecord> records = build_sporadic();
  return records;
}

const SporadicRecord& sporadic(const std::string& id) {
  for (const auto& r : sporadic_records())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown sporadic id '" + id + "'");
}

FamilyInstance make_family(FamilyName name, std::uint64_t param, bool with_zero) {
  auto residues = [&](std::uint32_t e) {
    if (param > (1ULL << 31)) throw std::invalid_argument("prime too large to materialize");
    return FamilyInstance{GroupSpec::cyclic(static_cast<std::uint32_t>(param)), power_residues(param, e), ""};
  };
  FamilyInstance inst{GroupSpec::cyclic(2), {}, ""};
  switch (name) {
    case FamilyName::Paley:
      inst = FamilyInstance{GroupSpec::cyclic(static_cast<std::uint32_t>(param)), paley(param), ""};
      inst.description = "quadratic residues mod " + std::to_string(param);
      break;
    case FamilyName::QuarticB:
    case FamilyName::QuarticB0:
      inst = residues(4);
      inst.description = "quartic residues mod " + std::to_string(param);
      if (name == FamilyName::QuarticB0) with_zero = true;
      break;
    case FamilyName::OcticO:
    case FamilyName::OcticO0:
      inst = residues(8);
      inst.description = "octic residues mod " + std::to_string(param);
      if (name == FamilyName::OcticO0) with_zero = true;
      break;
    case FamilyName::Singer: {
      if (param > 1000) throw std::invalid_argument("singer: q too large");
      const auto q = static_cast<std::uint32_t>(param);
      inst = FamilyInstance{GroupSpec::cyclic(q * q + q + 1), singer_planar(q), ""};
      inst.description = "Singer planar difference set for q = " + std::to_string(q);
      break;
    }
    case FamilyName::Sporadic:
      throw std::invalid_argument("sporadic sets are addressed by id");
  }
  if (with_zero && !std::binary_search(inst.set.begin(), inst.set.end(), 0u)) {
    inst.set.insert(inst.set.begin(), 0u);
    inst.description += " with 0";
  }
  return inst;
}

}  // namespace diffset
