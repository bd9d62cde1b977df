#pragma once

/**
 * @file group_ring.hpp
 * @brief Group rings RG with the convolution product.
 *
 * Elements are coefficient vectors indexed by group elements (first
 * group element most significant), so |RG| = |R|^|G|.
 */

#include "ringlab/constructions.hpp"
#include "ringlab/groups.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

struct GroupRing {
  RingPtr ring;
  RingPtr coeff;
  GroupPtr group;

  /// Coefficient of the group element g in x.
  Index coefficient(Index x, GIndex g) const;
  /// Element with the given coefficients (one per group element).
  Index element(const std::vector<Index>& coeffs) const;
  /// The scalar r embedded as r * identity.
  Index scalar(Index r) const;
};

GroupRing make_group_ring(RingPtr R, GroupPtr G);

/// Coefficient sum of x, an element of the coefficient ring.
Index augmentation(const GroupRing& RG, Index x);

/// Kernel of the augmentation map. Validates that the kernel is a
/// two-sided ideal and that the quotient is table-isomorphic to the
/// coefficient ring under the scalar section.
ElementSet augmentation_ideal(const GroupRing& RG);

}  // namespace ringlab
