#pragma once

/**
 * @file constructions.hpp
 * @brief Constructors for every ring family the library works with.
 *
 * Element encodings (mixed radix, first component most significant):
 *   - make_zmod(n): index i is the residue i.
 *   - make_gf(p,k): coefficient c_i of x^i contributes c_i * p^i, so
 *     one = 1 and the generator x has index p.
 *   - direct_product: components in factor order.
 *   - matrix_ring: entries row-major.
 *   - upper_triangular: on/above-diagonal entries row-major, i.e.
 *     (0,0),(0,1),...,(0,n-1),(1,1),...,(n-1,n-1).
 *   - equal_diag_triangular: shared diagonal value first, then the
 *     strictly upper entries row-major.
 *   - skew_triangular: the defining tuple (a_0,...,a_{n-1}).
 *   - formal_matrix_ks: (a, x, y, b) for [[a, x], [y, b]].
 *   - formal_matrix_ns: entries row-major.
 *   - trivial_extension: the pair (r, m).
 *   - quotient: cosets ordered by their least base representative.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

struct RingEndomorphism {
  RingPtr domain;
  std::vector<Index> map;
  std::string name;

  Index operator()(Index a) const { return map[a]; }
};

/// Verifies map(0)=0, map(1)=1 and preservation of + and * (exhaustive
/// on pairs up to the pair limit, sampled above). Throws ring_error.
void validate_endomorphism(const RingEndomorphism& f);

RingEndomorphism identity_endomorphism(RingPtr R);

/// Integers mod n. Rejects n = 0.
RingPtr make_zmod(std::uint64_t n);

struct GaloisField {
  RingPtr ring;
  RingEndomorphism frobenius;  // x -> x^p
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<Index> modulus;  // monic irreducible, coefficients c_0..c_k
};

/// The field with p^k elements over a fixed modulus polynomial
/// (GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1; otherwise the
/// lexicographically least monic irreducible). Rejects non-prime p.
GaloisField make_gf(std::uint32_t p, std::uint32_t k);

RingPtr direct_product(const std::vector<RingPtr>& factors);

RingPtr matrix_ring(RingPtr R, unsigned n);
RingPtr upper_triangular(RingPtr R, unsigned n);
RingPtr equal_diag_triangular(RingPtr R, unsigned n);

/// Tuples (a_0,...,a_{n-1}) with product c_i = sum_k a_k * alpha^k(b_{i-k}).
RingPtr skew_triangular(RingPtr R, const RingEndomorphism& alpha, unsigned n);

/// 2x2 generalized matrix ring with the s-twisted product
/// [[a1*a2 + s*x1*y2, a1*x2 + x1*b2], [y1*a2 + b1*y2, s*y1*x2 + b1*b2]].
/// Rejects non-central s.
RingPtr formal_matrix_ks(RingPtr R, Index s);

/// n x n formal matrix ring: c_ij = sum_k s^e(i,k,j) a_ik b_kj with
/// e(i,k,j) = 1 + [i==j] - [i==k] - [k==j]. Rejects non-central s.
RingPtr formal_matrix_ns(RingPtr R, unsigned n, Index s);

/// T(R, R) with the regular bimodule: (r,m)(s,n) = (rs, rn + ms).
RingPtr trivial_extension(RingPtr R);

struct QuotientRing {
  RingPtr ring;
  RingPtr base;
  std::vector<Index> rep_of;    // quotient index -> least coset representative
  std::vector<Index> class_of;  // base index -> quotient index
};

/// Quotient by a two-sided ideal; throws ring_error when I is not one.
QuotientRing make_quotient(RingPtr R, const ElementSet& ideal,
                           std::string label);
RingPtr quotient(RingPtr R, const ElementSet& ideal, std::string label);

/// The corner ring eRe for an idempotent e != 0; identity is e.
RingPtr corner_ring(RingPtr R, Index e);

// Uniform-radix component codec (public for tests and reports).
Index encode_components(std::size_t base_size, const std::vector<Index>& comps);
std::vector<Index> decode_components(std::size_t base_size, std::size_t count,
                                     Index v);

}  // namespace ringlab
