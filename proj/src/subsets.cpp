#include "ringlab/subsets.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringlab {

bool ElementSet::contains(Index a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

namespace {

// Callers hold no other lock; every ensure_* takes the ring memo lock
// for the duration of the fill.

void ensure_units(const FiniteRing& R) {
  auto& memo = R.memo();
  std::scoped_lock guard(memo.lock);
  if (memo.unit_mask) return;
  const std::size_t n = R.size();
  std::vector<std::uint8_t> mask(n, 0);
  std::vector<Index> inv(n, 0);
  std::vector<Index> list;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) {
        mask[a] = 1;
        inv[a] = b;
        list.push_back(a);
        break;
      }
    }
  }
  memo.unit_mask = std::move(mask);
  memo.inverse = std::move(inv);
  memo.units = std::move(list);
}

void ensure_idempotents(const FiniteRing& R) {
  auto& memo = R.memo();
  std::scoped_lock guard(memo.lock);
  if (memo.idempotents) return;
  std::vector<Index> list;
  for (Index a = 0; a < R.size(); ++a) {
    if (R.mul(a, a) == a) list.push_back(a);
  }
  memo.idempotents = std::move(list);
}

// Power iteration with cycle detection: walk a, a^2, a^3, ... until
// either zero (nilpotent, exponent = step count) or a repeated value
// (the orbit cycles without reaching zero).
std::uint32_t nil_exponent_scan(const FiniteRing& R, Index a) {
  if (a == R.zero()) return 1;
  std::unordered_set<Index> seen;
  Index x = a;
  std::uint32_t e = 1;
  while (true) {
    if (x == R.zero()) return e;
    if (!seen.insert(x).second) return 0;
    x = R.mul(x, a);
    ++e;
  }
}

void ensure_nilpotents(const FiniteRing& R) {
  auto& memo = R.memo();
  std::scoped_lock guard(memo.lock);
  if (memo.nil_mask) return;
  const std::size_t n = R.size();
  std::vector<std::uint8_t> mask(n, 0);
  std::vector<NilWitness> wits;
  for (Index a = 0; a < n; ++a) {
    std::uint32_t e = nil_exponent_scan(R, a);
    if (e > 0) {
      mask[a] = 1;
      wits.push_back({a, e});
    }
  }
  memo.nil_mask = std::move(mask);
  memo.nil_witnesses = std::move(wits);
}

void ensure_center(const FiniteRing& R) {
  auto& memo = R.memo();
  std::scoped_lock guard(memo.lock);
  if (memo.center) return;
  const std::size_t n = R.size();
  std::vector<Index> list;
  for (Index a = 0; a < n; ++a) {
    bool central = true;
    for (Index b = 0; b < n; ++b) {
      if (R.mul(a, b) != R.mul(b, a)) {
        central = false;
        break;
      }
    }
    if (central) list.push_back(a);
  }
  memo.center = std::move(list);
}

void ensure_jacobson(const FiniteRing& R) {
  ensure_units(R);
  auto& memo = R.memo();
  std::scoped_lock guard(memo.lock);
  if (memo.jacobson) return;
  const std::size_t n = R.size();
  const auto& mask = *memo.unit_mask;
  std::vector<Index> left, right;
  for (Index x = 0; x < n; ++x) {
    bool in_left = true;
    for (Index r = 0; r < n; ++r) {
      if (!mask[R.sub(R.one(), R.mul(r, x))]) {
        in_left = false;
        break;
      }
    }
    if (in_left) left.push_back(x);
    bool in_right = true;
    for (Index r = 0; r < n; ++r) {
      if (!mask[R.sub(R.one(), R.mul(x, r))]) {
        in_right = false;
        break;
      }
    }
    if (in_right) right.push_back(x);
  }
  if (left != right) {
    throw internal_check_error(R.label() +
                               ": left and right quasi-regularity disagree");
  }
  memo.jacobson = std::move(left);
}

std::vector<Index> closure_worklist(const FiniteRing& R,
                                    const std::vector<Index>& gens) {
  const std::size_t n = R.size();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Index> members;
  std::vector<Index> work;
  auto push = [&](Index x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  };
  push(R.zero());
  for (Index g : gens) push(g);
  while (!work.empty()) {
    Index x = work.back();
    work.pop_back();
    push(R.neg(x));
    for (Index r = 0; r < n; ++r) {
      push(R.mul(r, x));
      push(R.mul(x, r));
    }
    // additive closure against everything collected so far
    for (std::size_t i = 0; i < members.size(); ++i) {
      Index s = R.add(x, members[i]);
      push(s);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// An ideal I is nilpotent when the chain I >= I^2 >= ... reaches {0},
// where I^(k+1) is the ideal generated by products x*y, x in I^k, y in I.
bool ideal_is_nilpotent(const FiniteRing& R, const std::vector<Index>& I) {
  std::vector<Index> power = I;
  while (true) {
    if (power.size() == 1 && power[0] == R.zero()) return true;
    std::vector<Index> gens;
    gens.reserve(power.size() * I.size());
    for (Index x : power)
      for (Index y : I) gens.push_back(R.mul(x, y));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Index> next = closure_worklist(R, gens);
    if (next == power) return false;  // stabilized above zero
    power = std::move(next);
  }
}

void ensure_prime_radical(const RingPtr& R) {
  ensure_nilpotents(*R);
  ensure_jacobson(*R);
  auto& memo = R->memo();
  std::scoped_lock guard(memo.lock);
  if (memo.prime_radical) return;
  // Sum of all principal ideals that are nilpotent ideals, iterated to
  // a fixed point. Candidates are confined to Nil(R) and J(R): a
  // nilpotent ideal consists of nilpotents and sits inside J(R).
  const auto& jac = *memo.jacobson;
  std::vector<Index> candidates;
  for (const auto& w : *memo.nil_witnesses) {
    if (std::binary_search(jac.begin(), jac.end(), w.element))
      candidates.push_back(w.element);
  }
  std::vector<Index> acc{R->zero()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Index x : candidates) {
      if (std::binary_search(acc.begin(), acc.end(), x)) continue;
      std::vector<Index> principal = closure_worklist(*R, {x});
      if (!ideal_is_nilpotent(*R, principal)) continue;
      std::vector<Index> gens = acc;
      gens.push_back(x);
      acc = closure_worklist(*R, gens);
      grew = true;
    }
  }
  if (!ideal_is_nilpotent(*R, acc)) {
    throw internal_check_error(R->label() +
                               ": prime radical candidate is not nilpotent");
  }
  memo.prime_radical = std::move(acc);
}

}  // namespace

ElementSet units(const RingPtr& R) {
  ensure_units(*R);
  return {R, *R->memo().units};
}

ElementSet idempotents(const RingPtr& R) {
  ensure_idempotents(*R);
  return {R, *R->memo().idempotents};
}

std::vector<NilWitness> nilpotents(const RingPtr& R) {
  ensure_nilpotents(*R);
  return *R->memo().nil_witnesses;
}

ElementSet nilpotent_set(const RingPtr& R) {
  ensure_nilpotents(*R);
  std::vector<Index> m;
  for (const auto& w : *R->memo().nil_witnesses) m.push_back(w.element);
  return {R, std::move(m)};
}

ElementSet center(const RingPtr& R) {
  ensure_center(*R);
  return {R, *R->memo().center};
}

ElementSet jacobson_radical(const RingPtr& R) {
  ensure_jacobson(*R);
  return {R, *R->memo().jacobson};
}

ElementSet ideal_closure(const RingPtr& R, const std::vector<Index>& gens) {
  return {R, closure_worklist(*R, gens)};
}

bool is_ideal(const FiniteRing& R, const ElementSet& I) {
  if (!I.contains(R.zero())) return false;
  for (Index x : I.members) {
    if (!I.contains(R.neg(x))) return false;
    for (Index y : I.members) {
      if (!I.contains(R.add(x, y))) return false;
    }
    for (Index r = 0; r < R.size(); ++r) {
      if (!I.contains(R.mul(r, x))) return false;
      if (!I.contains(R.mul(x, r))) return false;
    }
  }
  return true;
}

bool is_nil_ideal(const RingPtr& R, const ElementSet& I) {
  if (!is_ideal(*R, I)) {
    throw ring_error(R->label() + ": is_nil_ideal needs a two-sided ideal");
  }
  for (Index x : I.members) {
    if (!is_nilpotent(*R, x)) return false;
  }
  return true;
}

ElementSet prime_radical(const RingPtr& R) {
  ensure_prime_radical(R);
  return {R, *R->memo().prime_radical};
}

bool is_unit(const FiniteRing& R, Index a) {
  ensure_units(R);
  return (*R.memo().unit_mask)[a] != 0;
}

bool is_nilpotent(const FiniteRing& R, Index a) {
  ensure_nilpotents(R);
  return (*R.memo().nil_mask)[a] != 0;
}

const std::vector<Index>& unit_list(const FiniteRing& R) {
  ensure_units(R);
  return *R.memo().units;
}

const std::vector<Index>& idempotent_list(const FiniteRing& R) {
  ensure_idempotents(R);
  return *R.memo().idempotents;
}

std::uint32_t nilpotency_exponent(const FiniteRing& R, Index a) {
  return nil_exponent_scan(R, a);
}

}  // namespace ringlab
