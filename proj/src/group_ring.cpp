#include "ringlab/group_ring.hpp"

#include <array>

namespace ringlab {

namespace {
constexpr std::size_t kMaxGroup = 16;
}

Index GroupRing::coefficient(Index x, GIndex g) const {
  const std::size_t q = coeff->size();
  std::size_t shift = group->size() - 1 - g;
  std::uint64_t v = x;
  for (std::size_t i = 0; i < shift; ++i) v /= q;
  return static_cast<Index>(v % q);
}

Index GroupRing::element(const std::vector<Index>& coeffs) const {
  return encode_components(coeff->size(), coeffs);
}

Index GroupRing::scalar(Index r) const {
  std::vector<Index> c(group->size(), coeff->zero());
  c[group->identity()] = r;
  return element(c);
}

GroupRing make_group_ring(RingPtr R, GroupPtr G) {
  const std::size_t m = G->size();
  if (m > kMaxGroup) throw ring_error("group too large for a group ring");
  std::string label = "GR(" + R->label() + ", " + G->label() + ")";
  std::size_t size;
  {
    std::vector<std::size_t> radices(m, R->size());
    try {
      size = codec::checked_size(radices);
    } catch (const size_cap_error&) {
      throw size_cap_error(label + " exceeds the element cap of " +
                           std::to_string(max_ring_size()));
    }
  }
  const std::size_t q = R->size();
  RingPtr base = R;
  GroupPtr grp = G;

  RingOps ops{
      [base, q, m](Index a, Index b) {
        std::array<Index, kMaxGroup> da{}, db{};
        std::uint64_t x = a, y = b;
        for (std::size_t i = m; i-- > 0;) {
          da[i] = static_cast<Index>(x % q);
          x /= q;
          db[i] = static_cast<Index>(y % q);
          y /= q;
        }
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < m; ++i)
          v = v * q + base->add(da[i], db[i]);
        return static_cast<Index>(v);
      },
      [base, grp, q, m](Index a, Index b) {
        std::array<Index, kMaxGroup> da{}, db{}, dc{};
        std::uint64_t x = a, y = b;
        for (std::size_t i = m; i-- > 0;) {
          da[i] = static_cast<Index>(x % q);
          x /= q;
          db[i] = static_cast<Index>(y % q);
          y /= q;
        }
        for (std::size_t i = 0; i < m; ++i) dc[i] = base->zero();
        for (GIndex g = 0; g < m; ++g) {
          if (da[g] == base->zero()) continue;
          for (GIndex h = 0; h < m; ++h) {
            if (db[h] == base->zero()) continue;
            GIndex t = grp->compose(g, h);
            dc[t] = base->add(dc[t], base->mul(da[g], db[h]));
          }
        }
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < m; ++i) v = v * q + dc[i];
        return static_cast<Index>(v);
      },
      [base, q, m](Index a) {
        std::array<Index, kMaxGroup> d{};
        std::uint64_t x = a;
        for (std::size_t i = m; i-- > 0;) {
          d[i] = static_cast<Index>(x % q);
          x /= q;
        }
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < m; ++i) v = v * q + base->neg(d[i]);
        return static_cast<Index>(v);
      }};

  GroupRing out;
  out.coeff = R;
  out.group = G;
  std::vector<Index> one_c(m, R->zero());
  one_c[G->identity()] = R->one();
  Index one = encode_components(q, one_c);
  out.ring = FiniteRing::create(size, label, 0, one, std::move(ops));
  return out;
}

Index augmentation(const GroupRing& RG, Index x) {
  Index sum = RG.coeff->zero();
  for (GIndex g = 0; g < RG.group->size(); ++g) {
    sum = RG.coeff->add(sum, RG.coefficient(x, g));
  }
  return sum;
}

ElementSet augmentation_ideal(const GroupRing& RG) {
  std::vector<Index> members;
  for (Index x = 0; x < RG.ring->size(); ++x) {
    if (augmentation(RG, x) == RG.coeff->zero()) members.push_back(x);
  }
  ElementSet delta{RG.ring, std::move(members)};
  if (!is_ideal(*RG.ring, delta)) {
    throw internal_check_error(RG.ring->label() +
                               ": augmentation kernel is not an ideal");
  }

  // the quotient by the kernel must reproduce the coefficient ring
  // under the scalar section r -> r * identity
  QuotientRing Q = make_quotient(RG.ring, delta, RG.ring->label() + "/Delta");
  const FiniteRing& R = *RG.coeff;
  if (Q.ring->size() != R.size()) {
    throw internal_check_error(RG.ring->label() +
                               ": quotient by the augmentation ideal has the "
                               "wrong size");
  }
  std::vector<Index> section(R.size());
  std::vector<std::uint8_t> hit(R.size(), 0);
  for (Index r = 0; r < R.size(); ++r) {
    section[r] = Q.class_of[RG.scalar(r)];
    hit[section[r]] = 1;
  }
  for (Index r = 0; r < R.size(); ++r) {
    if (!hit[r]) {
      throw internal_check_error(RG.ring->label() +
                                 ": scalar section is not onto the quotient");
    }
  }
  for (Index r = 0; r < R.size(); ++r) {
    for (Index s = 0; s < R.size(); ++s) {
      if (Q.ring->add(section[r], section[s]) != section[R.add(r, s)] ||
          Q.ring->mul(section[r], section[s]) != section[R.mul(r, s)]) {
        throw internal_check_error(
            RG.ring->label() +
            ": quotient by the augmentation ideal is not the coefficient "
            "ring");
      }
    }
  }
  return delta;
}

}  // namespace ringlab
