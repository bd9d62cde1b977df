#pragma once

/**
 * @file isomorphism.hpp
 * @brief Fingerprint-gated ring isomorphism testing for small rings.
 *
 * The search assigns images to a greedy additive generating sequence,
 * extends additively, prunes on per-element invariants and partial
 * multiplicative consistency, and verifies any complete assignment on
 * all pairs. Sound in both directions up to the node budget.
 */

#include <cstdint>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

struct RingFingerprint {
  std::size_t size = 0;
  std::size_t units = 0;
  std::size_t idempotents = 0;
  std::size_t nilpotents = 0;
  std::size_t center = 0;
  std::uint32_t characteristic = 0;

  bool operator==(const RingFingerprint&) const = default;
};

RingFingerprint fingerprint(const RingPtr& R);

struct IsoSearchResult {
  enum class Status {
    Isomorphic,
    FingerprintMismatch,
    NotIsomorphic,      // exhaustive search ruled every bijection out
    BudgetExhausted,    // inconclusive
  };
  Status status = Status::NotIsomorphic;
  std::vector<Index> map;  // A index -> B index when Isomorphic
  std::uint64_t nodes = 0;
};

constexpr std::size_t kIsoSizeLimit = 81;

/// Throws ring_error when either ring exceeds kIsoSizeLimit.
IsoSearchResult find_isomorphism(const RingPtr& A, const RingPtr& B,
                                 std::uint64_t node_budget = 2000000);

/// Identical operation tables under the identity index map.
bool tables_identical(const FiniteRing& A, const FiniteRing& B);

}  // namespace ringlab
