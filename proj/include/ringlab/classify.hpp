#pragma once

/**
 * @file classify.hpp
 * @brief Element decompositions and ring-class predicates.
 *
 * Decomposition searches are deterministic: the + sign is tried before
 * -, idempotents in ascending index order, and the remaining part is
 * derived and tested. Predicates with a criterion characterization run
 * both the criterion and the independent decomposition search and
 * throw internal_check_error if the two ever disagree.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

enum class DecompKind {
  StronglyNilClean,
  WeaklyNilClean,
  StronglyWeaklyNilClean,
  StronglyWeaklyClean,
};

/// Witness for a = q + sign*e (nil-clean kinds, first_part = e) or
/// a = u + sign*e (clean kind, first_part = u, nil_or_idem_part = e).
struct Decomposition {
  DecompKind kind;
  int sign;  // +1 or -1
  Index first_part;
  Index nil_or_idem_part;
  bool commuting;
};

/// Recomputes the decomposed element, for verification.
Index recompose(const FiniteRing& R, const Decomposition& d);

// a = q + e, q nilpotent, e idempotent, qe = eq.
std::optional<Decomposition> snc_decompose(const FiniteRing& R, Index a);
// a = q +- e, no commutation requirement.
std::optional<Decomposition> wnc_decompose(const FiniteRing& R, Index a);
// a = q +- e with qe = eq.
std::optional<Decomposition> swnc_decompose(const FiniteRing& R, Index a);
// a = u +- e, u a unit, ue = eu.
std::optional<Decomposition> swc_decompose(const FiniteRing& R, Index a);

struct PredicateResult {
  bool verdict = false;
  std::optional<Index> counterexample;  // filled whenever verdict is false
  std::string note;
};

// Universal predicates; results memoized per ring.
PredicateResult is_gswnc(const RingPtr& R);
PredicateResult is_swnc_ring(const RingPtr& R);
PredicateResult is_gsnc(const RingPtr& R);
PredicateResult is_snc_ring(const RingPtr& R);
PredicateResult is_strongly_weakly_clean(const RingPtr& R);
PredicateResult is_uu(const RingPtr& R);
PredicateResult is_wuu(const RingPtr& R);
PredicateResult is_local(const RingPtr& R);
PredicateResult has_only_trivial_idempotents(const RingPtr& R);
PredicateResult is_abelian(const RingPtr& R);
PredicateResult is_dedekind_finite(const RingPtr& R);
PredicateResult is_strongly_pi_regular(const RingPtr& R);
PredicateResult is_2_primal(const RingPtr& R);
PredicateResult is_commutative(const RingPtr& R);

bool is_division_ring(const RingPtr& R);

struct ClassificationReport {
  std::string ring_label;
  std::vector<std::pair<std::string, PredicateResult>> predicates;

  const PredicateResult* find(const std::string& name) const;
};

/// Runs every predicate above in a fixed order.
ClassificationReport classify(const RingPtr& R);

/// Names in the order classify() reports them.
const std::vector<std::string>& predicate_names();

}  // namespace ringlab
