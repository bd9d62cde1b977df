#include "ringlab/isomorphism.hpp"

#include <algorithm>

#include "ringlab/subsets.hpp"

namespace ringlab {

RingFingerprint fingerprint(const RingPtr& R) {
  RingFingerprint fp;
  fp.size = R->size();
  fp.units = unit_list(*R).size();
  fp.idempotents = idempotent_list(*R).size();
  fp.nilpotents = nilpotents(R).size();
  fp.center = center(R).members.size();
  fp.characteristic = R->characteristic();
  return fp;
}

bool tables_identical(const FiniteRing& A, const FiniteRing& B) {
  if (A.size() != B.size() || A.zero() != B.zero() || A.one() != B.one())
    return false;
  for (Index a = 0; a < A.size(); ++a) {
    for (Index b = 0; b < A.size(); ++b) {
      if (A.add(a, b) != B.add(a, b) || A.mul(a, b) != B.mul(a, b))
        return false;
    }
  }
  return true;
}

namespace {

std::uint32_t additive_order(const FiniteRing& R, Index a) {
  std::uint32_t n = 1;
  Index x = a;
  while (x != R.zero()) {
    x = R.add(x, a);
    ++n;
  }
  return n;
}

std::uint32_t multiplicative_order(const FiniteRing& R, Index u) {
  std::uint32_t n = 1;
  Index x = u;
  while (x != R.one()) {
    x = R.mul(x, u);
    ++n;
  }
  return n;
}

// Per-element isomorphism invariant, packed for multiset comparison.
std::vector<std::uint64_t> profiles(const RingPtr& R) {
  const std::size_t n = R->size();
  ElementSet zn = center(R);
  std::vector<std::uint64_t> out(n);
  for (Index a = 0; a < n; ++a) {
    std::uint64_t p = additive_order(*R, a);
    p = (p << 16) | nilpotency_exponent(*R, a);
    std::uint64_t flags = 0;
    if (is_unit(*R, a)) flags |= 1;
    if (R->mul(a, a) == a) flags |= 2;
    if (zn.contains(a)) flags |= 4;
    p = (p << 4) | flags;
    p = (p << 16) | (is_unit(*R, a) ? multiplicative_order(*R, a) : 0);
    out[a] = p;
  }
  return out;
}

struct Searcher {
  const FiniteRing& A;
  const FiniteRing& B;
  std::vector<std::uint64_t> profA, profB;
  std::vector<Index> gens;                 // additive generator sequence of A
  std::vector<std::vector<Index>> spans;   // span elements before each generator
  std::vector<int> img;                    // A -> B, -1 unassigned
  std::vector<std::uint8_t> used;          // assigned B images
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool exhausted = false;

  bool consistent_on(Index x, const std::vector<Index>& others) const {
    for (Index z : others) {
      Index p = A.mul(x, z);
      if (img[p] >= 0 &&
          B.mul(static_cast<Index>(img[x]), static_cast<Index>(img[z])) !=
              static_cast<Index>(img[p]))
        return false;
      Index q = A.mul(z, x);
      if (img[q] >= 0 &&
          B.mul(static_cast<Index>(img[z]), static_cast<Index>(img[x])) !=
              static_cast<Index>(img[q]))
        return false;
    }
    return true;
  }

  bool verify_complete() const {
    if (img[A.one()] != static_cast<int>(B.one())) return false;
    for (Index a = 0; a < A.size(); ++a) {
      for (Index b = 0; b < A.size(); ++b) {
        if (img[A.add(a, b)] != static_cast<int>(B.add(
                                    static_cast<Index>(img[a]),
                                    static_cast<Index>(img[b]))) ||
            img[A.mul(a, b)] != static_cast<int>(B.mul(
                                    static_cast<Index>(img[a]),
                                    static_cast<Index>(img[b]))))
          return false;
      }
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == gens.size()) return verify_complete();
    const Index g = gens[depth];
    const std::vector<Index>& old_span = spans[depth];
    const std::uint32_t ord = additive_order(A, g);

    for (Index y = 0; y < B.size(); ++y) {
      if (used[y] || profB[y] != profA[g]) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }

      std::vector<Index> added;       // A elements assigned in this step
      std::vector<Index> used_added;  // B images marked in this step
      bool ok = true;

      Index gc = g, yc = y;
      for (std::uint32_t c = 1; c < ord && ok; ++c) {
        for (Index s : old_span) {
          Index x = A.add(s, gc);
          Index image = B.add(static_cast<Index>(img[s]), yc);
          if (img[x] >= 0) {
            if (img[x] != static_cast<int>(image)) {
              ok = false;
              break;
            }
          } else {
            if (used[image]) {
              ok = false;
              break;
            }
            img[x] = static_cast<int>(image);
            used[image] = 1;
            added.push_back(x);
            used_added.push_back(image);
          }
        }
        gc = A.add(gc, g);
        yc = B.add(yc, y);
      }

      if (ok) {
        std::vector<Index> known = old_span;
        known.insert(known.end(), added.begin(), added.end());
        for (Index x : added) {
          if (!consistent_on(x, known)) {
            ok = false;
            break;
          }
        }
      }

      if (ok && assign(depth + 1)) return true;

      for (Index x : added) img[x] = -1;
      for (Index image : used_added) used[image] = 0;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

IsoSearchResult find_isomorphism(const RingPtr& A, const RingPtr& B,
                                 std::uint64_t node_budget) {
  if (A->size() > kIsoSizeLimit || B->size() > kIsoSizeLimit) {
    throw ring_error("isomorphism search is limited to " +
                     std::to_string(kIsoSizeLimit) + " elements");
  }
  IsoSearchResult result;
  if (fingerprint(A) != fingerprint(B)) {
    result.status = IsoSearchResult::Status::FingerprintMismatch;
    return result;
  }

  Searcher s{*A, *B};
  s.budget = node_budget;
  s.profA = profiles(A);
  s.profB = profiles(B);
  {
    auto ma = s.profA, mb = s.profB;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) {
      result.status = IsoSearchResult::Status::NotIsomorphic;
      return result;
    }
  }

  // greedy additive generating sequence with span snapshots
  const std::size_t n = A->size();
  std::vector<std::uint8_t> in_span(n, 0);
  std::vector<Index> span{A->zero()};
  in_span[A->zero()] = 1;
  for (Index g = 0; g < n; ++g) {
    if (in_span[g]) continue;
    s.gens.push_back(g);
    s.spans.push_back(span);
    std::uint32_t ord = additive_order(*A, g);
    std::size_t before = span.size();
    Index gc = g;
    for (std::uint32_t c = 1; c < ord; ++c) {
      for (std::size_t i = 0; i < before; ++i) {
        Index x = A->add(span[i], gc);
        if (!in_span[x]) {
          in_span[x] = 1;
          span.push_back(x);
        }
      }
      gc = A->add(gc, g);
    }
  }

  s.img.assign(n, -1);
  s.used.assign(B->size(), 0);
  s.img[A->zero()] = static_cast<int>(B->zero());
  s.used[B->zero()] = 1;

  bool found = s.assign(0);
  result.nodes = s.nodes;
  if (found) {
    result.status = IsoSearchResult::Status::Isomorphic;
    result.map.resize(n);
    for (Index a = 0; a < n; ++a) result.map[a] = static_cast<Index>(s.img[a]);
  } else if (s.exhausted) {
    result.status = IsoSearchResult::Status::BudgetExhausted;
  } else {
    result.status = IsoSearchResult::Status::NotIsomorphic;
  }
  return result;
}

}  // namespace ringlab
