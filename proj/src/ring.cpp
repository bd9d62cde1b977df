#include "ringlab/ring.hpp"

#include <atomic>
#include <random>

namespace ringlab {

namespace {

std::atomic<std::size_t> g_max_ring_size{kDefaultMaxRingSize};
std::atomic<std::uint64_t> g_sample_seed{0x52494e474c414221ull};

void fail(const std::string& label, const std::string& what) {
  throw ring_error(label + ": " + what);
}

}  // namespace

std::size_t max_ring_size() { return g_max_ring_size.load(); }
void set_max_ring_size(std::size_t cap) { g_max_ring_size.store(cap); }
std::uint64_t sample_seed() { return g_sample_seed.load(); }
void set_sample_seed(std::uint64_t seed) { g_sample_seed.store(seed); }

namespace codec {

Index encode(const std::vector<std::size_t>& radices,
             const std::vector<Index>& digits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    v = v * radices[i] + digits[i];
  }
  return static_cast<Index>(v);
}

std::vector<Index> decode(const std::vector<std::size_t>& radices, Index v) {
  std::vector<Index> out(radices.size());
  std::uint64_t x = v;
  for (std::size_t i = radices.size(); i-- > 0;) {
    out[i] = static_cast<Index>(x % radices[i]);
    x /= radices[i];
  }
  return out;
}

std::size_t checked_size(const std::vector<std::size_t>& radices) {
  const std::size_t cap = max_ring_size();
  std::size_t total = 1;
  for (std::size_t r : radices) {
    if (r == 0) throw ring_error("zero radix");
    total *= r;  // factors stay <= cap, so this cannot overflow size_t
    if (total > cap) {
      throw size_cap_error("construction of size " + std::to_string(total) +
                           "+ exceeds the element cap of " +
                           std::to_string(cap));
    }
  }
  return total;
}

}  // namespace codec

namespace {

// Axiom verification. Pair laws (additive commutativity, identities,
// inverses) run exhaustively up to kExhaustivePairLimit; triple laws
// (associativity, distributivity) up to kExhaustiveTripleLimit. Above
// a limit the same laws are checked on kSampledChecks seeded random
// tuples.
void validate_axioms(const FiniteRing& R) {
  const std::size_t n = R.size();
  const Index zero = R.zero(), one = R.one();
  const std::string& label = R.label();

  auto check_unary = [&](Index a) {
    if (R.add(a, zero) != a) fail(label, "a + 0 != a");
    if (R.add(zero, a) != a) fail(label, "0 + a != a");
    if (R.add(a, R.neg(a)) != zero) fail(label, "a + (-a) != 0");
    if (R.mul(a, one) != a) fail(label, "a * 1 != a");
    if (R.mul(one, a) != a) fail(label, "1 * a != a");
  };
  auto check_pair = [&](Index a, Index b) {
    if (R.add(a, b) != R.add(b, a)) fail(label, "addition not commutative");
  };
  auto check_triple = [&](Index a, Index b, Index c) {
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
      fail(label, "addition not associative");
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
      fail(label, "multiplication not associative");
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
      fail(label, "left distributivity fails");
    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
      fail(label, "right distributivity fails");
  };

  if (n > 1 && zero == one) fail(label, "zero equals one in a nonzero ring");

  for (Index a = 0; a < n; ++a) check_unary(a);

  std::mt19937_64 rng(sample_seed());
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));

  if (n <= FiniteRing::kExhaustivePairLimit) {
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b) check_pair(a, b);
  } else {
    for (std::size_t i = 0; i < FiniteRing::kSampledChecks; ++i)
      check_pair(pick(rng), pick(rng));
  }

  if (n <= FiniteRing::kExhaustiveTripleLimit) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    for (std::size_t i = 0; i < FiniteRing::kSampledChecks; ++i)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

RingPtr FiniteRing::create(std::size_t size, std::string label, Index zero,
                           Index one, RingOps ops) {
  if (size == 0) throw ring_error(label + ": a ring needs at least one element");
  if (size > max_ring_size()) {
    throw size_cap_error(label + ": size " + std::to_string(size) +
                         " exceeds the element cap of " +
                         std::to_string(max_ring_size()));
  }

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->size_ = size;
  ring->label_ = std::move(label);
  ring->zero_ = zero;
  ring->one_ = one;

  ring->neg_table_.resize(size);
  for (Index a = 0; a < size; ++a) ring->neg_table_[a] = ops.neg(a);

  if (size <= kTableLimit) {
    ring->add_table_.resize(size * size);
    ring->mul_table_.resize(size * size);
    for (Index a = 0; a < size; ++a) {
      for (Index b = 0; b < size; ++b) {
        ring->add_table_[std::size_t(a) * size + b] =
            static_cast<std::uint16_t>(ops.add(a, b));
        ring->mul_table_[std::size_t(a) * size + b] =
            static_cast<std::uint16_t>(ops.mul(a, b));
      }
    }
  } else {
    ring->ops_ = std::move(ops);
  }

  // additive order of 1
  {
    std::uint32_t ch = 1;
    Index x = ring->one_;
    while (x != ring->zero_) {
      x = ring->add(x, ring->one_);
      ++ch;
      if (ch > size + 1) fail(ring->label_, "1 has no finite additive order");
    }
    ring->characteristic_ = ch;
  }

  validate_axioms(*ring);
  return ring;
}

Index FiniteRing::pow(Index a, std::uint64_t k) const {
  Index result = one_;
  Index base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Index FiniteRing::of_integer(std::int64_t n) const {
  bool negate = n < 0;
  std::uint64_t m = negate ? static_cast<std::uint64_t>(-n)
                           : static_cast<std::uint64_t>(n);
  m %= characteristic_;
  Index x = zero_;
  for (std::uint64_t i = 0; i < m; ++i) x = add(x, one_);
  return negate ? neg(x) : x;
}

}  // namespace ringlab
