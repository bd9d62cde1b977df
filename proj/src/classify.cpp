#include "ringlab/classify.hpp"

#include <algorithm>
#include <unordered_map>

#include "ringlab/subsets.hpp"

namespace ringlab {

Index recompose(const FiniteRing& R, const Decomposition& d) {
  Index second = d.kind == DecompKind::StronglyWeaklyClean ? d.nil_or_idem_part
                                                           : d.first_part;
  Index first = d.kind == DecompKind::StronglyWeaklyClean ? d.first_part
                                                          : d.nil_or_idem_part;
  Index signed_e = d.sign > 0 ? second : R.neg(second);
  return R.add(first, signed_e);
}

namespace {

// Shared nil-clean search: a = q + sign*e with q nilpotent and e
// idempotent, optionally commuting, + tried before -.
std::optional<Decomposition> nil_clean_search(const FiniteRing& R, Index a,
                                              DecompKind kind,
                                              bool allow_minus,
                                              bool need_commuting) {
  for (int sign : {+1, -1}) {
    if (sign < 0 && !allow_minus) break;
    for (Index e : idempotent_list(R)) {
      Index q = sign > 0 ? R.sub(a, e) : R.add(a, e);
      if (!is_nilpotent(R, q)) continue;
      bool commuting = R.mul(q, e) == R.mul(e, q);
      if (need_commuting && !commuting) continue;
      return Decomposition{kind, sign, e, q, commuting};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Decomposition> snc_decompose(const FiniteRing& R, Index a) {
  return nil_clean_search(R, a, DecompKind::StronglyNilClean, false, true);
}

std::optional<Decomposition> wnc_decompose(const FiniteRing& R, Index a) {
  return nil_clean_search(R, a, DecompKind::WeaklyNilClean, true, false);
}

std::optional<Decomposition> swnc_decompose(const FiniteRing& R, Index a) {
  return nil_clean_search(R, a, DecompKind::StronglyWeaklyNilClean, true, true);
}

std::optional<Decomposition> swc_decompose(const FiniteRing& R, Index a) {
  for (int sign : {+1, -1}) {
    for (Index e : idempotent_list(R)) {
      Index u = sign > 0 ? R.sub(a, e) : R.add(a, e);
      if (!is_unit(R, u)) continue;
      if (R.mul(u, e) != R.mul(e, u)) continue;
      return Decomposition{DecompKind::StronglyWeaklyClean, sign, u, e, true};
    }
  }
  return std::nullopt;
}

namespace {

using PredicateFn = PredicateResult (*)(const RingPtr&);

PredicateResult cached(const RingPtr& R, const std::string& name,
                       PredicateResult (*compute)(const RingPtr&)) {
  {
    std::scoped_lock guard(R->memo().lock);
    auto it = R->memo().predicates.find(name);
    if (it != R->memo().predicates.end()) return *it->second;
  }
  PredicateResult result = compute(R);
  std::scoped_lock guard(R->memo().lock);
  R->memo().predicates.emplace(
      name, std::make_shared<const PredicateResult>(result));
  return result;
}

// Criterion: a is strongly weakly nil-clean iff a + a^2 or a - a^2 is
// nilpotent. Evaluated per element against the decomposition search;
// the two routes guard each other.
bool swnc_element_both_routes(const FiniteRing& R, Index a) {
  Index a2 = R.mul(a, a);
  bool criterion =
      is_nilpotent(R, R.add(a, a2)) || is_nilpotent(R, R.sub(a, a2));
  bool search = swnc_decompose(R, a).has_value();
  if (criterion != search) {
    throw internal_check_error(
        R.label() + ": element " + std::to_string(a) +
        ": a +- a^2 criterion and decomposition search disagree");
  }
  return search;
}

PredicateResult compute_gswnc(const RingPtr& R) {
  for (Index a = 0; a < R->size(); ++a) {
    if (is_unit(*R, a)) continue;
    if (!swnc_element_both_routes(*R, a)) {
      return {false, a, "non-unit with no strongly weakly nil-clean form"};
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_swnc_ring(const RingPtr& R) {
  for (Index a = 0; a < R->size(); ++a) {
    if (!swnc_element_both_routes(*R, a)) {
      return {false, a, "element with no strongly weakly nil-clean form"};
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_gsnc(const RingPtr& R) {
  for (Index a = 0; a < R->size(); ++a) {
    if (is_unit(*R, a)) continue;
    if (!snc_decompose(*R, a)) {
      return {false, a, "non-unit with no strongly nil-clean form"};
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_snc_ring(const RingPtr& R) {
  for (Index a = 0; a < R->size(); ++a) {
    if (!snc_decompose(*R, a)) {
      return {false, a, "element with no strongly nil-clean form"};
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_swc_ring(const RingPtr& R) {
  for (Index a = 0; a < R->size(); ++a) {
    if (!swc_decompose(*R, a)) {
      return {false, a, "element with no strongly weakly clean form"};
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_uu(const RingPtr& R) {
  for (Index u : unit_list(*R)) {
    if (!is_nilpotent(*R, R->sub(u, R->one()))) {
      return {false, u, "unit that is not unipotent"};
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_wuu(const RingPtr& R) {
  // literal set comparison U(R) = Nil(R) +- 1
  std::vector<Index> shifted;
  for (const auto& w : nilpotents(R)) {
    shifted.push_back(R->add(w.element, R->one()));
    shifted.push_back(R->sub(w.element, R->one()));
  }
  std::sort(shifted.begin(), shifted.end());
  shifted.erase(std::unique(shifted.begin(), shifted.end()), shifted.end());
  const auto& us = unit_list(*R);
  if (shifted == us) return {true, std::nullopt, ""};
  for (Index u : us) {
    if (!std::binary_search(shifted.begin(), shifted.end(), u)) {
      return {false, u, "unit not of the form n +- 1 with n nilpotent"};
    }
  }
  for (Index s : shifted) {
    if (!std::binary_search(us.begin(), us.end(), s)) {
      return {false, s, "n +- 1 that is not a unit"};
    }
  }
  return {false, std::nullopt, "set mismatch"};  // unreachable
}

PredicateResult compute_local(const RingPtr& R) {
  std::vector<Index> nonunits;
  for (Index a = 0; a < R->size(); ++a) {
    if (!is_unit(*R, a)) nonunits.push_back(a);
  }
  bool closed = true;
  Index cex = 0;
  for (std::size_t i = 0; i < nonunits.size() && closed; ++i) {
    for (std::size_t j = i; j < nonunits.size(); ++j) {
      if (is_unit(*R, R->add(nonunits[i], nonunits[j]))) {
        closed = false;
        cex = nonunits[i];
        break;
      }
    }
  }
  // cross-check against the ideal characterization (empty non-unit set
  // only in the zero ring, which is local)
  bool ideal_route =
      nonunits.empty() || is_ideal(*R, ElementSet{R, nonunits});
  if (closed != ideal_route) {
    throw internal_check_error(R->label() +
                               ": local-ring characterizations disagree");
  }
  if (closed) return {true, std::nullopt, ""};
  return {false, cex, "non-units are not closed under addition"};
}

PredicateResult compute_trivial_idempotents(const RingPtr& R) {
  std::vector<Index> expected{R->zero(), R->one()};
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()),
                 expected.end());
  const auto& ids = idempotent_list(*R);
  if (ids == expected) return {true, std::nullopt, ""};
  for (Index e : ids) {
    if (e != R->zero() && e != R->one()) {
      return {false, e, "nontrivial idempotent"};
    }
  }
  return {false, std::nullopt, "idempotent set mismatch"};
}

PredicateResult compute_abelian(const RingPtr& R) {
  for (Index e : idempotent_list(*R)) {
    for (Index r = 0; r < R->size(); ++r) {
      if (R->mul(e, r) != R->mul(r, e)) {
        return {false, e, "idempotent that is not central"};
      }
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_dedekind_finite(const RingPtr& R) {
  for (Index a = 0; a < R->size(); ++a) {
    for (Index b = 0; b < R->size(); ++b) {
      if (R->mul(a, b) == R->one() && R->mul(b, a) != R->one()) {
        return {false, a, "one-sided inverse"};
      }
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_strongly_pi_regular(const RingPtr& R) {
  // Walk a, a^2, ... to the first repeated power a^i = a^j (i < j);
  // then a^i = a^(i+1) * a^(j-i-1), which is verified explicitly.
  for (Index a = 0; a < R->size(); ++a) {
    std::unordered_map<Index, std::uint32_t> seen;
    Index x = a;
    std::uint32_t k = 1;
    while (true) {
      auto it = seen.find(x);
      if (it != seen.end()) {
        std::uint32_t i = it->second, j = k;
        Index witness = R->pow(a, j - i - 1);  // a^0 = 1
        if (R->mul(R->pow(a, i + 1), witness) != R->pow(a, i)) {
          throw internal_check_error(R->label() +
                                     ": pi-regularity witness failed");
        }
        break;
      }
      seen.emplace(x, k);
      x = R->mul(x, a);
      ++k;
    }
  }
  return {true, std::nullopt, ""};
}

PredicateResult compute_2_primal(const RingPtr& R) {
  ElementSet rad = prime_radical(R);
  ElementSet nil = nilpotent_set(R);
  if (rad.members == nil.members) return {true, std::nullopt, ""};
  for (Index x : nil.members) {
    if (!rad.contains(x)) {
      return {false, x, "nilpotent element outside the prime radical"};
    }
  }
  return {false, std::nullopt, "prime radical exceeds the nilpotent set"};
}

PredicateResult compute_commutative(const RingPtr& R) {
  for (Index a = 0; a < R->size(); ++a) {
    for (Index b = a + 1; b < R->size(); ++b) {
      if (R->mul(a, b) != R->mul(b, a)) {
        return {false, a, "non-commuting pair"};
      }
    }
  }
  return {true, std::nullopt, ""};
}

}  // namespace

PredicateResult is_gswnc(const RingPtr& R) {
  return cached(R, "gswnc", compute_gswnc);
}
PredicateResult is_swnc_ring(const RingPtr& R) {
  return cached(R, "swnc", compute_swnc_ring);
}
PredicateResult is_gsnc(const RingPtr& R) {
  return cached(R, "gsnc", compute_gsnc);
}
PredicateResult is_snc_ring(const RingPtr& R) {
  return cached(R, "snc", compute_snc_ring);
}
PredicateResult is_strongly_weakly_clean(const RingPtr& R) {
  return cached(R, "strongly_weakly_clean", compute_swc_ring);
}
PredicateResult is_uu(const RingPtr& R) { return cached(R, "uu", compute_uu); }
PredicateResult is_wuu(const RingPtr& R) {
  return cached(R, "wuu", compute_wuu);
}
PredicateResult is_local(const RingPtr& R) {
  return cached(R, "local", compute_local);
}
PredicateResult has_only_trivial_idempotents(const RingPtr& R) {
  return cached(R, "trivial_idempotents", compute_trivial_idempotents);
}
PredicateResult is_abelian(const RingPtr& R) {
  return cached(R, "abelian", compute_abelian);
}
PredicateResult is_dedekind_finite(const RingPtr& R) {
  return cached(R, "dedekind_finite", compute_dedekind_finite);
}
PredicateResult is_strongly_pi_regular(const RingPtr& R) {
  return cached(R, "strongly_pi_regular", compute_strongly_pi_regular);
}
PredicateResult is_2_primal(const RingPtr& R) {
  return cached(R, "two_primal", compute_2_primal);
}
PredicateResult is_commutative(const RingPtr& R) {
  return cached(R, "commutative", compute_commutative);
}

bool is_division_ring(const RingPtr& R) {
  return R->size() >= 2 && unit_list(*R).size() == R->size() - 1;
}

const PredicateResult* ClassificationReport::find(
    const std::string& name) const {
  for (const auto& [n, r] : predicates) {
    if (n == name) return &r;
  }
  return nullptr;
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names{
      "gswnc",
      "swnc",
      "gsnc",
      "snc",
      "strongly_weakly_clean",
      "uu",
      "wuu",
      "local",
      "trivial_idempotents",
      "abelian",
      "dedekind_finite",
      "strongly_pi_regular",
      "two_primal",
      "commutative",
  };
  return names;
}

ClassificationReport classify(const RingPtr& R) {
  ClassificationReport report;
  report.ring_label = R->label();
  report.predicates.emplace_back("gswnc", is_gswnc(R));
  report.predicates.emplace_back("swnc", is_swnc_ring(R));
  report.predicates.emplace_back("gsnc", is_gsnc(R));
  report.predicates.emplace_back("snc", is_snc_ring(R));
  report.predicates.emplace_back("strongly_weakly_clean",
                                 is_strongly_weakly_clean(R));
  report.predicates.emplace_back("uu", is_uu(R));
  report.predicates.emplace_back("wuu", is_wuu(R));
  report.predicates.emplace_back("local", is_local(R));
  report.predicates.emplace_back("trivial_idempotents",
                                 has_only_trivial_idempotents(R));
  report.predicates.emplace_back("abelian", is_abelian(R));
  report.predicates.emplace_back("dedekind_finite", is_dedekind_finite(R));
  report.predicates.emplace_back("strongly_pi_regular",
                                 is_strongly_pi_regular(R));
  report.predicates.emplace_back("two_primal", is_2_primal(R));
  report.predicates.emplace_back("commutative", is_commutative(R));
  return report;
}

}  // namespace ringlab
