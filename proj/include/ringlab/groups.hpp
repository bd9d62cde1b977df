#pragma once

/**
 * @file groups.hpp
 * @brief Finite groups with fixed element orderings.
 *
 * Conventions: the identity always has index 0.
 *   - make_cyclic(n): index i is the rotation r^i.
 *   - make_group_product: pairs, first component most significant.
 *   - make_dihedral(n): 0..n-1 are r^i, n..2n-1 are s*r^i with the
 *     relation r*s = s*r^{-1}.
 *   - make_quaternion8: index = 2*letter + sign with letters 1,i,j,k
 *     and sign 0:+ 1:-, so 1=0, -1=1, i=2, -i=3, j=4, -j=5, k=6, -k=7.
 *   - make_symmetric3: permutations of {0,1,2} in lexicographic
 *     one-line order; composition (f*g)(x) = f(g(x)).
 */

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

using GIndex = std::uint32_t;

class FiniteGroup {
 public:
  /// Validates the group axioms exhaustively and computes inverses.
  static std::shared_ptr<const FiniteGroup> create(
      std::size_t size, std::string label,
      const std::function<GIndex(GIndex, GIndex)>& compose);

  GIndex compose(GIndex a, GIndex b) const {
    return table_[std::size_t(a) * size_ + b];
  }
  GIndex inverse(GIndex a) const { return inverse_[a]; }
  GIndex identity() const { return identity_; }
  std::size_t size() const { return size_; }
  const std::string& label() const { return label_; }

 private:
  FiniteGroup() = default;
  std::size_t size_ = 0;
  GIndex identity_ = 0;
  std::string label_;
  std::vector<GIndex> table_;
  std::vector<GIndex> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_cyclic(unsigned n);
GroupPtr make_group_product(const GroupPtr& G, const GroupPtr& H);
GroupPtr make_dihedral(unsigned n);
GroupPtr make_quaternion8();
GroupPtr make_symmetric3();

std::uint32_t element_order(const FiniteGroup& G, GIndex g);

/// Every element has order a power of p.
bool is_p_group(const FiniteGroup& G, std::uint32_t p);

std::vector<GIndex> group_center(const FiniteGroup& G);

/// Upper central series reaches the whole group.
bool is_nilpotent_group(const FiniteGroup& G);

}  // namespace ringlab
