#include "ringlab/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace ringlab {

namespace {

constexpr std::size_t kMaxComponents = 32;

void decode_uniform(std::size_t radix, std::size_t count, Index v, Index* out) {
  for (std::size_t i = count; i-- > 0;) {
    out[i] = static_cast<Index>(v % radix);
    v = static_cast<Index>(v / radix);
  }
}

Index encode_uniform(std::size_t radix, std::size_t count, const Index* d) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < count; ++i) v = v * radix + d[i];
  return static_cast<Index>(v);
}

std::size_t checked_power(std::size_t base, unsigned exp,
                          const std::string& what) {
  std::vector<std::size_t> radices(exp, base);
  try {
    return codec::checked_size(radices);
  } catch (const size_cap_error&) {
    throw size_cap_error(what + " exceeds the element cap of " +
                         std::to_string(max_ring_size()));
  }
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Index encode_components(std::size_t base_size,
                        const std::vector<Index>& comps) {
  return encode_uniform(base_size, comps.size(), comps.data());
}

std::vector<Index> decode_components(std::size_t base_size, std::size_t count,
                                     Index v) {
  std::vector<Index> out(count);
  decode_uniform(base_size, count, v, out.data());
  return out;
}

void validate_endomorphism(const RingEndomorphism& f) {
  const FiniteRing& R = *f.domain;
  const std::size_t n = R.size();
  if (f.map.size() != n) throw ring_error("endomorphism map has wrong size");
  if (f.map[R.zero()] != R.zero()) throw ring_error("endomorphism moves 0");
  if (f.map[R.one()] != R.one()) throw ring_error("endomorphism moves 1");
  auto check = [&](Index a, Index b) {
    if (f.map[R.add(a, b)] != R.add(f.map[a], f.map[b]) ||
        f.map[R.mul(a, b)] != R.mul(f.map[a], f.map[b])) {
      throw ring_error("map is not a ring endomorphism of " + R.label());
    }
  };
  if (n <= FiniteRing::kExhaustivePairLimit) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) check(a, b);
  } else {
    std::mt19937_64 rng(sample_seed());
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    for (std::size_t i = 0; i < FiniteRing::kSampledChecks; ++i)
      check(pick(rng), pick(rng));
  }
}

RingEndomorphism identity_endomorphism(RingPtr R) {
  std::vector<Index> map(R->size());
  for (Index a = 0; a < R->size(); ++a) map[a] = a;
  return {std::move(R), std::move(map), "identity"};
}

RingPtr make_zmod(std::uint64_t n) {
  if (n == 0) throw ring_error("Z0 is not a ring with identity");
  if (n > max_ring_size()) {
    throw size_cap_error("Z" + std::to_string(n) + " exceeds the element cap");
  }
  const Index m = static_cast<Index>(n);
  RingOps ops{
      [m](Index a, Index b) { return Index((std::uint64_t(a) + b) % m); },
      [m](Index a, Index b) { return Index((std::uint64_t(a) * b) % m); },
      [m](Index a) { return Index(a == 0 ? 0 : m - a); }};
  return FiniteRing::create(n, "Z" + std::to_string(n), 0, 1 % m,
                            std::move(ops));
}

namespace {

// Polynomial helpers over Z_p, coefficients ascending.
using Poly = std::vector<Index>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus,
                  std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<Index> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  for (std::size_t d = prod.size(); d-- > k;) {
    Index c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i) {
      prod[d - k + i] =
          (prod[d - k + i] + p * p - (c * modulus[i]) % p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

// Remainder of a by b (b monic), both ascending. Used only for the
// irreducibility scan over small fields.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    Index lead = a.back();
    if (lead) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + p * p - (lead * b[i]) % p) % p;
      }
    }
    a.pop_back();
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (f[0] == 0) return false;  // divisible by x
  // trial division by every monic polynomial of degree 1..k/2
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      std::uint64_t v = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Index>(v % p);
        v /= p;
      }
      g[d] = 1;
      Poly r = poly_rem(f, g, p);
      if (r.size() == 1 && r[0] == 0) return false;
    }
  }
  return true;
}

Poly fixed_or_least_irreducible(std::uint32_t p, std::uint32_t k) {
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  // least monic irreducible in the ascending-coefficient value order
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(k + 1, 0);
    std::uint64_t v = t;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<Index>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw ring_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

GaloisField make_gf(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) {
    throw ring_error("GF(" + std::to_string(p) + "," + std::to_string(k) +
                     "): p must be prime");
  }
  if (k == 0) throw ring_error("GF: k must be positive");
  std::size_t size = checked_power(p, k, "GF(" + std::to_string(p) + "," +
                                             std::to_string(k) + ")");
  std::string label =
      "GF(" + std::to_string(p) + ", " + std::to_string(k) + ")";

  GaloisField gf;
  gf.p = p;
  gf.k = k;
  gf.modulus = fixed_or_least_irreducible(p, k);

  const Poly modulus = gf.modulus;
  auto to_poly = [p, k](Index v) {
    Poly c(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto to_index = [p, k](const Poly& c) {
    std::uint64_t v = 0;
    for (std::uint32_t i = k; i-- > 0;) v = v * p + c[i];
    return static_cast<Index>(v);
  };

  RingOps ops{
      [=](Index a, Index b) {
        Poly ca = to_poly(a), cb = to_poly(b);
        for (std::uint32_t i = 0; i < k; ++i) ca[i] = (ca[i] + cb[i]) % p;
        return to_index(ca);
      },
      [=](Index a, Index b) {
        return to_index(poly_mul_mod(to_poly(a), to_poly(b), modulus, p));
      },
      [=](Index a) {
        Poly c = to_poly(a);
        for (auto& x : c) x = (p - x) % p;
        return to_index(c);
      }};
  gf.ring = FiniteRing::create(size, label, 0, 1, std::move(ops));

  std::vector<Index> frob(size);
  for (Index a = 0; a < size; ++a) frob[a] = gf.ring->pow(a, p);
  gf.frobenius = {gf.ring, std::move(frob), "frobenius"};
  validate_endomorphism(gf.frobenius);
  return gf;
}

RingPtr direct_product(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw ring_error("direct product needs a factor");
  std::vector<std::size_t> radices;
  std::string label;
  for (const auto& R : factors) {
    radices.push_back(R->size());
    if (!label.empty()) label += " x ";
    label += R->label();
  }
  std::size_t size = codec::checked_size(radices);
  const std::size_t m = factors.size();
  auto fs = std::make_shared<std::vector<RingPtr>>(factors);
  auto rads = std::make_shared<std::vector<std::size_t>>(radices);

  auto componentwise = [fs, rads, m](auto op) {
    return [fs, rads, m, op](Index a, Index b) {
      std::array<Index, kMaxComponents> da{}, db{}, dc{};
      std::uint64_t x = a, y = b;
      for (std::size_t i = m; i-- > 0;) {
        da[i] = static_cast<Index>(x % (*rads)[i]);
        x /= (*rads)[i];
        db[i] = static_cast<Index>(y % (*rads)[i]);
        y /= (*rads)[i];
      }
      for (std::size_t i = 0; i < m; ++i) dc[i] = op(*(*fs)[i], da[i], db[i]);
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < m; ++i) v = v * (*rads)[i] + dc[i];
      return static_cast<Index>(v);
    };
  };

  RingOps ops{
      componentwise([](const FiniteRing& R, Index a, Index b) {
        return R.add(a, b);
      }),
      componentwise([](const FiniteRing& R, Index a, Index b) {
        return R.mul(a, b);
      }),
      [fs, rads, m](Index a) {
        std::array<Index, kMaxComponents> d{};
        std::uint64_t x = a;
        for (std::size_t i = m; i-- > 0;) {
          d[i] = static_cast<Index>(x % (*rads)[i]);
          x /= (*rads)[i];
        }
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < m; ++i)
          v = v * (*rads)[i] + (*fs)[i]->neg(d[i]);
        return static_cast<Index>(v);
      }};

  std::vector<Index> one_digits;
  for (const auto& R : factors) one_digits.push_back(R->one());
  Index one = codec::encode(radices, one_digits);
  return FiniteRing::create(size, label, 0, one, std::move(ops));
}

RingPtr matrix_ring(RingPtr R, unsigned n) {
  if (n == 0) throw ring_error("matrix ring needs n >= 1");
  const std::size_t cells = std::size_t(n) * n;
  if (cells > kMaxComponents) throw ring_error("matrix dimension too large");
  std::size_t size =
      checked_power(R->size(), static_cast<unsigned>(cells),
                    "M" + std::to_string(n) + "(" + R->label() + ")");
  const std::size_t q = R->size();
  RingPtr base = R;

  RingOps ops{
      [base, q, cells](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{}, dc{};
        decode_uniform(q, cells, a, da.data());
        decode_uniform(q, cells, b, db.data());
        for (std::size_t i = 0; i < cells; ++i)
          dc[i] = base->add(da[i], db[i]);
        return encode_uniform(q, cells, dc.data());
      },
      [base, q, n, cells](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{}, dc{};
        decode_uniform(q, cells, a, da.data());
        decode_uniform(q, cells, b, db.data());
        for (unsigned i = 0; i < n; ++i) {
          for (unsigned j = 0; j < n; ++j) {
            Index acc = base->zero();
            for (unsigned k = 0; k < n; ++k) {
              acc = base->add(acc, base->mul(da[i * n + k], db[k * n + j]));
            }
            dc[i * n + j] = acc;
          }
        }
        return encode_uniform(q, cells, dc.data());
      },
      [base, q, cells](Index a) {
        std::array<Index, kMaxComponents> d{};
        decode_uniform(q, cells, a, d.data());
        for (std::size_t i = 0; i < cells; ++i) d[i] = base->neg(d[i]);
        return encode_uniform(q, cells, d.data());
      }};

  std::array<Index, kMaxComponents> one_digits{};
  for (unsigned i = 0; i < n; ++i) one_digits[i * n + i] = R->one();
  Index one = encode_uniform(q, cells, one_digits.data());
  return FiniteRing::create(
      size, "M" + std::to_string(n) + "(" + R->label() + ")", 0, one,
      std::move(ops));
}

namespace {

// Shared implementation for T_n(R) and S_n(R): a position list of
// upper-triangular coordinates; S_n collapses the diagonal into one
// leading component.
RingPtr triangular_impl(RingPtr R, unsigned n, bool equal_diag,
                        const std::string& label) {
  struct Layout {
    RingPtr base;
    std::size_t q;
    unsigned n;
    bool equal_diag;
    std::vector<std::pair<unsigned, unsigned>> pos;  // component -> (i,j)
    std::vector<std::vector<int>> slot;  // (i,j) -> component or -1
    std::size_t count;

    int at(unsigned i, unsigned j) const { return slot[i][j]; }
  };
  auto L = std::make_shared<Layout>();
  L->base = R;
  L->q = R->size();
  L->n = n;
  L->equal_diag = equal_diag;
  L->slot.assign(n, std::vector<int>(n, -1));
  if (equal_diag) {
    L->pos.emplace_back(0, 0);
    for (unsigned i = 0; i < n; ++i) L->slot[i][i] = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        L->slot[i][j] = static_cast<int>(L->pos.size());
        L->pos.emplace_back(i, j);
      }
  } else {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i; j < n; ++j) {
        L->slot[i][j] = static_cast<int>(L->pos.size());
        L->pos.emplace_back(i, j);
      }
  }
  L->count = L->pos.size();
  if (L->count > kMaxComponents) throw ring_error("triangular size too large");
  std::size_t size = checked_power(L->q, static_cast<unsigned>(L->count), label);

  RingOps ops{
      [L](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{};
        decode_uniform(L->q, L->count, a, da.data());
        decode_uniform(L->q, L->count, b, db.data());
        for (std::size_t i = 0; i < L->count; ++i)
          da[i] = L->base->add(da[i], db[i]);
        return encode_uniform(L->q, L->count, da.data());
      },
      [L](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{}, dc{};
        decode_uniform(L->q, L->count, a, da.data());
        decode_uniform(L->q, L->count, b, db.data());
        const FiniteRing& B = *L->base;
        for (std::size_t c = 0; c < L->count; ++c) {
          auto [i, j] = L->pos[c];
          Index acc = B.zero();
          for (unsigned k = i; k <= j; ++k) {
            int sa = L->at(i, k), sb = L->at(k, j);
            acc = B.add(acc, B.mul(da[sa], db[sb]));
          }
          dc[c] = acc;
        }
        return encode_uniform(L->q, L->count, dc.data());
      },
      [L](Index a) {
        std::array<Index, kMaxComponents> d{};
        decode_uniform(L->q, L->count, a, d.data());
        for (std::size_t i = 0; i < L->count; ++i) d[i] = L->base->neg(d[i]);
        return encode_uniform(L->q, L->count, d.data());
      }};

  std::array<Index, kMaxComponents> one_digits{};
  if (equal_diag) {
    one_digits[0] = R->one();
  } else {
    for (unsigned i = 0; i < n; ++i)
      one_digits[static_cast<std::size_t>(L->slot[i][i])] = R->one();
  }
  Index one = encode_uniform(L->q, L->count, one_digits.data());
  return FiniteRing::create(size, label, 0, one, std::move(ops));
}

}  // namespace

RingPtr upper_triangular(RingPtr R, unsigned n) {
  if (n == 0) throw ring_error("triangular ring needs n >= 1");
  std::string label = "T" + std::to_string(n) + "(" + R->label() + ")";
  return triangular_impl(std::move(R), n, false, label);
}

RingPtr equal_diag_triangular(RingPtr R, unsigned n) {
  if (n == 0) throw ring_error("triangular ring needs n >= 1");
  std::string label = "S" + std::to_string(n) + "(" + R->label() + ")";
  return triangular_impl(std::move(R), n, true, label);
}

RingPtr skew_triangular(RingPtr R, const RingEndomorphism& alpha, unsigned n) {
  if (n == 0) throw ring_error("skew triangular ring needs n >= 1");
  if (alpha.domain.get() != R.get()) {
    throw ring_error("endomorphism domain does not match the base ring");
  }
  if (n > kMaxComponents) throw ring_error("skew triangular n too large");
  std::string label =
      "Tskew" + std::to_string(n) + "(" + R->label() + ", " + alpha.name + ")";
  std::size_t size = checked_power(R->size(), n, label);

  struct State {
    RingPtr base;
    std::size_t q;
    unsigned n;
    std::vector<std::vector<Index>> alpha_pow;  // alpha^k as index maps
  };
  auto st = std::make_shared<State>();
  st->base = R;
  st->q = R->size();
  st->n = n;
  st->alpha_pow.resize(n);
  st->alpha_pow[0].resize(R->size());
  for (Index a = 0; a < R->size(); ++a) st->alpha_pow[0][a] = a;
  for (unsigned k = 1; k < n; ++k) {
    st->alpha_pow[k].resize(R->size());
    for (Index a = 0; a < R->size(); ++a)
      st->alpha_pow[k][a] = alpha.map[st->alpha_pow[k - 1][a]];
  }

  RingOps ops{
      [st](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{};
        decode_uniform(st->q, st->n, a, da.data());
        decode_uniform(st->q, st->n, b, db.data());
        for (unsigned i = 0; i < st->n; ++i)
          da[i] = st->base->add(da[i], db[i]);
        return encode_uniform(st->q, st->n, da.data());
      },
      [st](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{}, dc{};
        decode_uniform(st->q, st->n, a, da.data());
        decode_uniform(st->q, st->n, b, db.data());
        const FiniteRing& B = *st->base;
        for (unsigned i = 0; i < st->n; ++i) {
          Index acc = B.zero();
          for (unsigned k = 0; k <= i; ++k) {
            acc = B.add(acc, B.mul(da[k], st->alpha_pow[k][db[i - k]]));
          }
          dc[i] = acc;
        }
        return encode_uniform(st->q, st->n, dc.data());
      },
      [st](Index a) {
        std::array<Index, kMaxComponents> d{};
        decode_uniform(st->q, st->n, a, d.data());
        for (unsigned i = 0; i < st->n; ++i) d[i] = st->base->neg(d[i]);
        return encode_uniform(st->q, st->n, d.data());
      }};

  std::array<Index, kMaxComponents> one_digits{};
  one_digits[0] = R->one();
  Index one = encode_uniform(R->size(), n, one_digits.data());
  return FiniteRing::create(size, label, 0, one, std::move(ops));
}

namespace {

void require_central(const RingPtr& R, Index s, const std::string& label) {
  for (Index r = 0; r < R->size(); ++r) {
    if (R->mul(r, s) != R->mul(s, r)) {
      throw ring_error(label + ": the twist element " + std::to_string(s) +
                       " is not central in " + R->label());
    }
  }
}

}  // namespace

RingPtr formal_matrix_ks(RingPtr R, Index s) {
  if (s >= R->size()) throw ring_error("twist element out of range");
  std::string label = "K(" + R->label() + ", " + std::to_string(s) + ")";
  require_central(R, s, label);
  std::size_t size = checked_power(R->size(), 4, label);
  const std::size_t q = R->size();
  RingPtr base = R;

  RingOps ops{
      [base, q](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{};
        decode_uniform(q, 4, a, da.data());
        decode_uniform(q, 4, b, db.data());
        for (int i = 0; i < 4; ++i) da[i] = base->add(da[i], db[i]);
        return encode_uniform(q, 4, da.data());
      },
      [base, q, s](Index a, Index b) {
        std::array<Index, 4> u{}, v{};
        decode_uniform(q, 4, a, u.data());
        decode_uniform(q, 4, b, v.data());
        const FiniteRing& B = *base;
        // (a, x, y, b)
        std::array<Index, 4> out{
            B.add(B.mul(u[0], v[0]), B.mul(s, B.mul(u[1], v[2]))),
            B.add(B.mul(u[0], v[1]), B.mul(u[1], v[3])),
            B.add(B.mul(u[2], v[0]), B.mul(u[3], v[2])),
            B.add(B.mul(s, B.mul(u[2], v[1])), B.mul(u[3], v[3]))};
        return encode_uniform(q, 4, out.data());
      },
      [base, q](Index a) {
        std::array<Index, kMaxComponents> d{};
        decode_uniform(q, 4, a, d.data());
        for (int i = 0; i < 4; ++i) d[i] = base->neg(d[i]);
        return encode_uniform(q, 4, d.data());
      }};

  std::array<Index, 4> one_digits{R->one(), 0, 0, R->one()};
  Index one = encode_uniform(q, 4, one_digits.data());
  return FiniteRing::create(size, label, 0, one, std::move(ops));
}

RingPtr formal_matrix_ns(RingPtr R, unsigned n, Index s) {
  if (n == 0) throw ring_error("formal matrix ring needs n >= 1");
  if (s >= R->size()) throw ring_error("twist element out of range");
  const std::size_t cells = std::size_t(n) * n;
  if (cells > kMaxComponents) throw ring_error("formal matrix n too large");
  std::string label = "MF" + std::to_string(n) + "(" + R->label() + ", " +
                      std::to_string(s) + ")";
  require_central(R, s, label);
  std::size_t size = checked_power(R->size(), static_cast<unsigned>(cells), label);
  const std::size_t q = R->size();
  RingPtr base = R;

  // s^0, s^1, s^2 cover every exponent value of e(i,k,j).
  std::array<Index, 3> spow{R->one(), s, R->mul(s, s)};

  RingOps ops{
      [base, q, cells](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{};
        decode_uniform(q, cells, a, da.data());
        decode_uniform(q, cells, b, db.data());
        for (std::size_t i = 0; i < cells; ++i)
          da[i] = base->add(da[i], db[i]);
        return encode_uniform(q, cells, da.data());
      },
      [base, q, n, cells, spow](Index a, Index b) {
        std::array<Index, kMaxComponents> da{}, db{}, dc{};
        decode_uniform(q, cells, a, da.data());
        decode_uniform(q, cells, b, db.data());
        const FiniteRing& B = *base;
        for (unsigned i = 0; i < n; ++i) {
          for (unsigned j = 0; j < n; ++j) {
            Index acc = B.zero();
            for (unsigned k = 0; k < n; ++k) {
              int e = 1 + (i == j) - (i == k) - (k == j);
              Index term = B.mul(da[i * n + k], db[k * n + j]);
              acc = B.add(acc, B.mul(spow[static_cast<std::size_t>(e)], term));
            }
            dc[i * n + j] = acc;
          }
        }
        return encode_uniform(q, cells, dc.data());
      },
      [base, q, cells](Index a) {
        std::array<Index, kMaxComponents> d{};
        decode_uniform(q, cells, a, d.data());
        for (std::size_t i = 0; i < cells; ++i) d[i] = base->neg(d[i]);
        return encode_uniform(q, cells, d.data());
      }};

  std::array<Index, kMaxComponents> one_digits{};
  for (unsigned i = 0; i < n; ++i) one_digits[i * n + i] = R->one();
  Index one = encode_uniform(q, cells, one_digits.data());
  return FiniteRing::create(size, label, 0, one, std::move(ops));
}

RingPtr trivial_extension(RingPtr R) {
  std::string label = "TE(" + R->label() + ")";
  std::size_t size = checked_power(R->size(), 2, label);
  const std::size_t q = R->size();
  RingPtr base = R;

  RingOps ops{
      [base, q](Index a, Index b) {
        return static_cast<Index>(
            base->add(Index(a / q), Index(b / q)) * q +
            base->add(Index(a % q), Index(b % q)));
      },
      [base, q](Index a, Index b) {
        Index r = Index(a / q), m = Index(a % q);
        Index s = Index(b / q), t = Index(b % q);
        return static_cast<Index>(
            base->mul(r, s) * q +
            base->add(base->mul(r, t), base->mul(m, s)));
      },
      [base, q](Index a) {
        return static_cast<Index>(base->neg(Index(a / q)) * q +
                                  base->neg(Index(a % q)));
      }};

  return FiniteRing::create(size, label, 0,
                            static_cast<Index>(R->one() * q), std::move(ops));
}

QuotientRing make_quotient(RingPtr R, const ElementSet& ideal,
                           std::string label) {
  if (ideal.ring.get() != R.get()) {
    throw ring_error(label + ": ideal belongs to a different ring");
  }
  if (!is_ideal(*R, ideal)) {
    throw ring_error(label + ": the given set is not a two-sided ideal of " +
                     R->label());
  }
  const std::size_t n = R->size();

  // canonical representative: least index in the coset x + I
  std::vector<Index> least(n);
  for (Index x = 0; x < n; ++x) {
    Index best = x;
    for (Index i : ideal.members) {
      best = std::min(best, R->add(x, i));
    }
    least[x] = best;
  }
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (least[x] == x) reps.push_back(x);
  }
  std::vector<Index> class_of(n);
  for (Index x = 0; x < n; ++x) {
    class_of[x] = static_cast<Index>(
        std::lower_bound(reps.begin(), reps.end(), least[x]) - reps.begin());
  }

  // sampled representative-independence check
  {
    std::mt19937_64 rng(sample_seed());
    std::uniform_int_distribution<std::size_t> px(0, n - 1);
    std::uniform_int_distribution<std::size_t> pi(0, ideal.members.size() - 1);
    std::size_t rounds = std::min<std::size_t>(2000, n * n);
    for (std::size_t t = 0; t < rounds; ++t) {
      Index x = static_cast<Index>(px(rng)), y = static_cast<Index>(px(rng));
      Index x2 = R->add(x, ideal.members[pi(rng)]);
      Index y2 = R->add(y, ideal.members[pi(rng)]);
      if (class_of[R->mul(x, y)] != class_of[R->mul(x2, y2)] ||
          class_of[R->add(x, y)] != class_of[R->add(x2, y2)]) {
        throw internal_check_error(label +
                                   ": quotient operations depend on the "
                                   "choice of representatives");
      }
    }
  }

  auto st = std::make_shared<std::pair<RingPtr, std::vector<Index>>>();
  st->first = R;
  st->second = class_of;
  auto reps_ptr = std::make_shared<std::vector<Index>>(reps);

  RingOps ops{
      [st, reps_ptr](Index a, Index b) {
        return st->second[st->first->add((*reps_ptr)[a], (*reps_ptr)[b])];
      },
      [st, reps_ptr](Index a, Index b) {
        return st->second[st->first->mul((*reps_ptr)[a], (*reps_ptr)[b])];
      },
      [st, reps_ptr](Index a) {
        return st->second[st->first->neg((*reps_ptr)[a])];
      }};

  QuotientRing out;
  out.base = R;
  out.rep_of = reps;
  out.class_of = class_of;
  out.ring = FiniteRing::create(reps.size(), std::move(label),
                                class_of[R->zero()], class_of[R->one()],
                                std::move(ops));
  return out;
}

RingPtr quotient(RingPtr R, const ElementSet& ideal, std::string label) {
  return make_quotient(std::move(R), ideal, std::move(label)).ring;
}

RingPtr corner_ring(RingPtr R, Index e) {
  if (R->mul(e, e) != e) {
    throw ring_error(R->label() + ": corner element is not idempotent");
  }
  if (e == R->zero()) {
    throw ring_error(R->label() + ": corner at 0 is not a unital ring");
  }
  if (e == R->one()) return R;

  const std::size_t n = R->size();
  std::vector<Index> image;
  image.reserve(n);
  for (Index a = 0; a < n; ++a) {
    image.push_back(R->mul(R->mul(e, a), e));
  }
  std::vector<Index> members = image;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Index> to_sub(n, 0);
  for (std::size_t i = 0; i < members.size(); ++i) to_sub[members[i]] = i;

  auto st = std::make_shared<std::pair<RingPtr, std::vector<Index>>>();
  st->first = R;
  st->second = members;
  auto sub = std::make_shared<std::vector<Index>>(to_sub);

  RingOps ops{
      [st, sub](Index a, Index b) {
        return (*sub)[st->first->add(st->second[a], st->second[b])];
      },
      [st, sub](Index a, Index b) {
        return (*sub)[st->first->mul(st->second[a], st->second[b])];
      },
      [st, sub](Index a) { return (*sub)[st->first->neg(st->second[a])]; }};

  std::string label =
      R->label() + " corner@" + std::to_string(e);
  return FiniteRing::create(members.size(), std::move(label), to_sub[R->zero()],
                            to_sub[e], std::move(ops));
}

}  // namespace ringlab
