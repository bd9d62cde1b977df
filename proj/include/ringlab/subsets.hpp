#pragma once

/**
 * @file subsets.hpp
 * @brief Distinguished subsets of a finite ring: U(R), Id(R), Nil(R),
 *        J(R), Z(R), ideal closures and the prime radical.
 *
 * All scans are exhaustive over the element indices and memoized per
 * ring (rings are immutable, see SubsetMemo). Functions taking a
 * RingPtr return owning ElementSet values; the mask accessors are the
 * cheap path for hot loops.
 */

#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A subset of a ring's elements, stored as a sorted index vector.
struct ElementSet {
  RingPtr ring;
  std::vector<Index> members;  // sorted ascending, no duplicates

  bool contains(Index a) const;
  std::size_t size() const { return members.size(); }
};

ElementSet units(const RingPtr& R);
ElementSet idempotents(const RingPtr& R);
std::vector<NilWitness> nilpotents(const RingPtr& R);
ElementSet nilpotent_set(const RingPtr& R);
ElementSet center(const RingPtr& R);

/// {x : 1 - r*x is a unit for every r}. Construction also verifies the
/// right-sided variant {x : 1 - x*r unit} gives the same set.
ElementSet jacobson_radical(const RingPtr& R);

/// Smallest two-sided ideal containing gens (fixed-point closure under
/// addition, negation and multiplication by arbitrary ring elements).
ElementSet ideal_closure(const RingPtr& R, const std::vector<Index>& gens);

/// True iff I is a two-sided ideal of R.
bool is_ideal(const FiniteRing& R, const ElementSet& I);

/// True iff every member of the ideal I is nilpotent. Throws if I is
/// not an ideal.
bool is_nil_ideal(const RingPtr& R, const ElementSet& I);

/// Largest nilpotent ideal, the finite-ring realization of the
/// intersection of all prime ideals.
ElementSet prime_radical(const RingPtr& R);

// Mask-based fast accessors (memoized per ring).
bool is_unit(const FiniteRing& R, Index a);
bool is_nilpotent(const FiniteRing& R, Index a);
const std::vector<Index>& unit_list(const FiniteRing& R);
const std::vector<Index>& idempotent_list(const FiniteRing& R);

/// Least e >= 1 with a^e = 0, or 0 when a is not nilpotent.
std::uint32_t nilpotency_exponent(const FiniteRing& R, Index a);

}  // namespace ringlab
