#pragma once

/**
 * @file ring.hpp
 * @brief Finite rings with identity over opaque element indices.
 *
 * A FiniteRing is an immutable value: a size n, total operations
 * add/mul/neg over the index range 0..n-1, and distinguished zero and
 * one. Every higher layer (subset computations, classifiers, the
 * verification harness) talks to rings only through these operations,
 * so the concrete element encoding of each construction stays private
 * to its constructor.
 *
 * Rings of size <= kTableLimit carry materialized Cayley tables;
 * larger rings evaluate the supplied closures on demand. Construction
 * verifies the ring axioms: exhaustively for small sizes, by seeded
 * random sampling above the thresholds.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

using Index = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class ring_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested construction would exceed the configured element cap.
class size_cap_error : public ring_error {
 public:
  using ring_error::ring_error;
};

/// Two supposedly equivalent computation paths disagreed.
class internal_check_error : public ring_error {
 public:
  using ring_error::ring_error;
};

// Runtime knobs shared by the CLI and the library. The element cap
// bounds every construction; the seed drives sampled axiom checks.
std::size_t max_ring_size();
void set_max_ring_size(std::size_t cap);
std::uint64_t sample_seed();
void set_sample_seed(std::uint64_t seed);

constexpr std::size_t kDefaultMaxRingSize = 1u << 16;

struct RingOps {
  std::function<Index(Index, Index)> add;
  std::function<Index(Index, Index)> mul;
  std::function<Index(Index)> neg;
};

struct NilWitness {
  Index element;
  std::uint32_t exponent;  // least e >= 1 with element^e = 0
};

struct PredicateResult;  // classify.hpp

// Lazily filled, mutex-guarded per-ring cache of subset scans and
// predicate verdicts. Rings are immutable, so cached values never
// go stale.
struct SubsetMemo {
  std::mutex lock;
  std::optional<std::vector<std::uint8_t>> unit_mask;
  std::optional<std::vector<Index>> units;
  std::optional<std::vector<Index>> inverse;  // index -> inverse, units only
  std::optional<std::vector<Index>> idempotents;
  std::optional<std::vector<std::uint8_t>> nil_mask;
  std::optional<std::vector<NilWitness>> nil_witnesses;
  std::optional<std::vector<Index>> center;
  std::optional<std::vector<Index>> jacobson;
  std::optional<std::vector<Index>> prime_radical;
  std::map<std::string, std::shared_ptr<const PredicateResult>> predicates;
};

class FiniteRing {
 public:
  static constexpr std::size_t kTableLimit = 4096;
  // Exhaustive axiom verification limits; sampled above these.
  static constexpr std::size_t kExhaustivePairLimit = 4096;
  static constexpr std::size_t kExhaustiveTripleLimit = 512;
  static constexpr std::size_t kSampledChecks = 100000;

  /// Builds a ring, materializes tables when small enough, and
  /// verifies the axioms. Throws ring_error on an axiom violation and
  /// size_cap_error when size exceeds the configured cap.
  static RingPtr create(std::size_t size, std::string label, Index zero,
                        Index one, RingOps ops);

  Index add(Index a, Index b) const {
    return add_table_.empty() ? ops_.add(a, b)
                              : add_table_[std::size_t(a) * size_ + b];
  }
  Index mul(Index a, Index b) const {
    return mul_table_.empty() ? ops_.mul(a, b)
                              : mul_table_[std::size_t(a) * size_ + b];
  }
  Index neg(Index a) const { return neg_table_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }

  /// a^k for k >= 1 by repeated squaring.
  Index pow(Index a, std::uint64_t k) const;

  /// The image of the integer n, i.e. n * 1 (n may be negative).
  Index of_integer(std::int64_t n) const;

  /// Additive order of 1.
  std::uint32_t characteristic() const { return characteristic_; }

  std::size_t size() const { return size_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  const std::string& label() const { return label_; }
  bool tabled() const { return !add_table_.empty(); }

  SubsetMemo& memo() const { return memo_; }

 private:
  FiniteRing() = default;

  std::size_t size_ = 0;
  std::string label_;
  Index zero_ = 0;
  Index one_ = 0;
  std::uint32_t characteristic_ = 1;
  RingOps ops_;
  std::vector<std::uint16_t> add_table_;  // empty above kTableLimit
  std::vector<std::uint16_t> mul_table_;
  std::vector<Index> neg_table_;
  mutable SubsetMemo memo_;
};

// Mixed-radix index codec shared by the constructions: the first
// component is the most significant digit (the last varies fastest).
namespace codec {

Index encode(const std::vector<std::size_t>& radices,
             const std::vector<Index>& digits);
std::vector<Index> decode(const std::vector<std::size_t>& radices, Index v);

/// Product of radices, throwing size_cap_error past the configured cap.
std::size_t checked_size(const std::vector<std::size_t>& radices);

}  // namespace codec

}  // namespace ringlab
