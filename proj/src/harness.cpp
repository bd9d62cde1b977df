#include "ringlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "ringlab/classify.hpp"
#include "ringlab/isomorphism.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

CheckStatus CheckResult::status() const {
  if (instances.empty()) return CheckStatus::Vacuous;
  for (const auto& i : instances) {
    if (!i.pass) return CheckStatus::Fail;
  }
  return CheckStatus::Pass;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Vacuous:
      return "VACUOUS";
  }
  return "?";
}

namespace {

std::string yn(bool b) { return b ? "true" : "false"; }

bool gswnc(const RingPtr& r) { return is_gswnc(r).verdict; }
bool swnc(const RingPtr& r) { return is_swnc_ring(r).verdict; }
bool gsnc(const RingPtr& r) { return is_gsnc(r).verdict; }
bool snc(const RingPtr& r) { return is_snc_ring(r).verdict; }

bool jacobson_is_nil(const RingPtr& R) {
  for (Index x : jacobson_radical(R).members) {
    if (!is_nilpotent(*R, x)) return false;
  }
  return true;
}

bool unit_two(const RingPtr& R) { return is_unit(*R, R->of_integer(2)); }

bool is_power_of(std::uint64_t m, std::uint64_t p) {
  if (m < p) return false;
  while (m % p == 0) m /= p;
  return m == 1;
}

// prime p when the group order is a p-power > 1, else 0
std::uint32_t group_prime(const FiniteGroup& G) {
  std::size_t m = G.size();
  if (m < 2) return 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (m % p == 0) return is_power_of(m, p) ? p : 0;
  }
  return 0;
}

// Branch list of the semi-local characterization. Targets are gated on
// size before the bounded bijection search runs.
struct BranchOutcome {
  bool any = false;
  std::string detail;
};

BranchOutcome semilocal_branches(const Catalog& cat, const RingPtr& R,
                                 const RingPtr& mod_j) {
  BranchOutcome out;
  bool jnil = jacobson_is_nil(R);
  if (is_local(R).verdict && jnil) {
    out.any = true;
    out.detail = "local with nil J";
    return out;
  }
  struct Target {
    const char* label;
    std::size_t size;
  };
  for (const Target& t :
       {Target{"M2(Z3)", 81}, Target{"M2(Z2)", 16}, Target{"Z3 x Z3", 9}}) {
    if (mod_j->size() != t.size || !jnil) continue;
    RingPtr target = cat.ring(t.label);
    IsoSearchResult iso = find_isomorphism(mod_j, target);
    if (iso.status == IsoSearchResult::Status::Isomorphic) {
      out.any = true;
      out.detail = std::string("R/J ~= ") + t.label + " with nil J (bijection found, " +
                   std::to_string(iso.nodes) + " nodes)";
      return out;
    }
    if (iso.status == IsoSearchResult::Status::BudgetExhausted) {
      out.detail += std::string("R/J vs ") + t.label + ": search budget exhausted; ";
    } else if (iso.status == IsoSearchResult::Status::NotIsomorphic &&
               fingerprint(mod_j) == fingerprint(cat.ring(t.label))) {
      out.detail += std::string("R/J vs ") + t.label +
                    ": fingerprint collision without isomorphism; ";
    }
  }
  if (swnc(R)) {
    out.any = true;
    out.detail += "strongly weakly nil-clean";
    return out;
  }
  if (out.detail.empty()) out.detail = "no branch";
  return out;
}

struct IffInstance {
  std::string label;
  bool lhs = false;
  bool rhs = false;
  std::string detail;
};

}  // namespace

void Harness::add(
    std::string id, std::string where, std::string anchor,
    std::string description,
    std::function<std::vector<InstanceResult>(const Catalog&)> fn) {
  entries_.push_back({std::move(id), std::move(where), std::move(anchor),
                      std::move(description), std::move(fn)});
}

Harness::Harness() {
  using IRs = std::vector<InstanceResult>;

  // Registers id.fwd (lhs -> rhs) and id.rev (rhs -> lhs) over the
  // same instance generator.
  auto add_iff = [this](const std::string& id, const std::string& where,
                        const std::string& anchor, const std::string& desc,
                        std::function<std::vector<IffInstance>(const Catalog&)>
                            gen) {
    auto direction = [gen](bool forward) {
      return [gen, forward](const Catalog& cat) {
        IRs out;
        for (const IffInstance& i : gen(cat)) {
          bool pass = forward ? (!i.lhs || i.rhs) : (!i.rhs || i.lhs);
          out.push_back({i.label, pass, i.detail});
        }
        return out;
      };
    };
    add(id + ".fwd", where, anchor, desc + " (forward)", direction(true));
    add(id + ".rev", where, anchor, desc + " (converse)", direction(false));
  };

  // ---- section 2 ----------------------------------------------------

  add("Lemma-2.2", "Lemma 2.2", "-a is strongly weakly clean",
      "every element with a strongly weakly nil-clean form gives a strongly "
      "weakly clean form for its negative",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          std::size_t checked = 0;
          bool ok = true;
          Index bad = 0;
          for (Index a = 0; a < R->size(); ++a) {
            if (!swnc_decompose(*R, a)) continue;
            ++checked;
            if (!swc_decompose(*R, R->neg(a))) {
              ok = false;
              bad = a;
              break;
            }
          }
          std::ostringstream d;
          if (ok) {
            d << checked << " elements checked";
          } else {
            d << "violation at " << label << "[" << bad << "]";
          }
          out.push_back({label, ok, d.str()});
        }
        return out;
      });

  add("Cor-2.3", "Corollary 2.3", "GSWNC implies strongly weakly clean",
      "every GSWNC catalog ring is strongly weakly clean",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R)) continue;
          bool rhs = is_strongly_weakly_clean(R).verdict;
          out.push_back({label, rhs, "strongly_weakly_clean=" + yn(rhs)});
        }
        return out;
      });

  add("Lemma-2.4", "Lemma 2.4", "factors of a GSWNC product are GSWNC",
      "a GSWNC finite direct product has GSWNC factors",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::Product) continue;
          RingPtr P = cat.ring(e.label);
          if (!gswnc(P)) continue;
          bool ok = true;
          std::string d = "gswnc(product)=true;";
          for (const auto& f : e.factors) {
            bool fg = gswnc(cat.ring(f));
            d += " gswnc(" + f + ")=" + yn(fg);
            ok = ok && fg;
          }
          out.push_back({e.label, ok, d});
        }
        return out;
      });

  add("Prop-2.5", "Proposition 2.5",
      "GSWNC product has strongly weakly nil-clean factors",
      "if R x S is GSWNC then R and S are strongly weakly nil-clean "
      "(checked per factor and on the first-factor split)",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::Product) continue;
          RingPtr P = cat.ring(e.label);
          if (!gswnc(P)) continue;
          bool ok = true;
          std::string d;
          for (const auto& f : e.factors) {
            bool fs = swnc(cat.ring(f));
            d += "swnc(" + f + ")=" + yn(fs) + "; ";
            ok = ok && fs;
          }
          if (e.factors.size() > 2) {
            std::vector<RingPtr> rest;
            for (std::size_t i = 1; i < e.factors.size(); ++i)
              rest.push_back(cat.ring(e.factors[i]));
            RingPtr S = direct_product(rest);
            bool ss = swnc(S);
            d += "swnc(rest " + S->label() + ")=" + yn(ss);
            ok = ok && ss;
          }
          out.push_back({e.label, ok, d});
        }
        return out;
      });

  add_iff(
      "Prop-2.6", "Proposition 2.6",
      "each factor strongly weakly nil-clean, at most one not strongly "
      "nil-clean",
      "a product of three rings is GSWNC exactly when every factor is "
      "strongly weakly nil-clean and at most one is not strongly nil-clean",
      [](const Catalog& cat) {
        std::vector<IffInstance> out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::Product || e.factors.size() != 3) continue;
          RingPtr P = cat.ring(e.label);
          bool lhs = gswnc(P);
          bool all_swnc = true;
          int not_snc = 0;
          for (const auto& f : e.factors) {
            RingPtr F = cat.ring(f);
            all_swnc = all_swnc && swnc(F);
            if (!snc(F)) ++not_snc;
          }
          bool rhs = all_swnc && not_snc <= 1;
          out.push_back({e.label, lhs, rhs,
                         "gswnc=" + yn(lhs) + ", all factors swnc=" +
                             yn(all_swnc) + ", factors not snc=" +
                             std::to_string(not_snc)});
        }
        return out;
      });

  add("Cor-2.8", "Corollaries 2.7 and 2.8",
      "R^n GSWNC iff GSNC iff R strongly nil-clean",
      "for the cube R^3: GSWNC, GSNC, strongly nil-clean (of the cube) and "
      "strongly nil-clean (of R) all coincide",
      [](const Catalog& cat) {
        IRs out;
        for (const char* base : {"Z2", "Z3"}) {
          RingPtr R = cat.ring(base);
          RingPtr L = direct_product({R, R, R});
          bool a = gswnc(L), b = gsnc(L), c = snc(L), d = snc(R);
          bool ok = (a == b) && (b == c) && (c == d);
          out.push_back({std::string(base) + "^3", ok,
                         "gswnc(L)=" + yn(a) + ", gsnc(L)=" + yn(b) +
                             ", snc(L)=" + yn(c) + ", snc(R)=" + yn(d)});
        }
        return out;
      });

  add("Prop-2.9", "Proposition 2.9",
      "T_n(R) GSWNC for some n >= 3 iff R strongly nil-clean",
      "bounded instance: the n = 3 equivalence, the n = 1,2,3 upward "
      "direction, and the n = 2 example T2(Z3)",
      [](const Catalog& cat) {
        IRs out;
        for (const char* base : {"Z2", "Z3"}) {
          RingPtr R = cat.ring(base);
          RingPtr T3 = cat.ring("T3(" + std::string(base) + ")");
          bool lhs = gswnc(T3), rhs = snc(R);
          out.push_back({"T3(" + std::string(base) + ")", lhs == rhs,
                         "gswnc(T3)=" + yn(lhs) + ", snc(R)=" + yn(rhs)});
        }
        {
          RingPtr R = cat.ring("Z2");
          bool ok = true;
          std::string d = "snc(Z2)=true;";
          for (unsigned n = 1; n <= 3; ++n) {
            RingPtr T = n == 2 ? cat.ring("T2(Z2)")
                               : (n == 3 ? cat.ring("T3(Z2)")
                                         : upper_triangular(R, 1));
            bool s = swnc(T);
            d += " swnc(T" + std::to_string(n) + ")=" + yn(s);
            ok = ok && s;
          }
          out.push_back({"Z2 upward n=1..3", ok, d});
        }
        {
          bool a = gswnc(cat.ring("T2(Z3)"));
          bool b = snc(cat.ring("Z3"));
          out.push_back({"T2(Z3) example", a && !b,
                         "gswnc(T2(Z3))=" + yn(a) + ", snc(Z3)=" + yn(b)});
        }
        return out;
      });

  add("Lemma-2.10", "Lemma 2.10", "J(R) is nil",
      "the Jacobson radical of a GSWNC ring consists of nilpotents",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R)) continue;
          bool ok = true;
          Index bad = 0;
          for (Index x : jacobson_radical(R).members) {
            if (!is_nilpotent(*R, x)) {
              ok = false;
              bad = x;
              break;
            }
          }
          out.push_back({label, ok,
                         ok ? "J(R) subset of Nil(R)"
                            : "non-nilpotent radical element [" +
                                  std::to_string(bad) + "]"});
        }
        return out;
      });

  add("Prop-2.11", "Proposition 2.11", "a +- a^2 in Nil(R)",
      "per-element agreement of the a +- a^2 criterion with the "
      "decomposition search, on every catalog ring",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          try {
            PredicateResult g = is_gswnc(R);  // cross-checks internally
            out.push_back(
                {label, true, "two-path agreement, gswnc=" + yn(g.verdict)});
          } catch (const internal_check_error& e) {
            out.push_back({label, false, e.what()});
          }
        }
        return out;
      });

  add("Cor-2.12", "Corollary 2.12", "strongly pi-regular",
      "every GSWNC catalog ring is strongly pi-regular",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R)) continue;
          bool rhs = is_strongly_pi_regular(R).verdict;
          out.push_back({label, rhs, "strongly_pi_regular=" + yn(rhs)});
        }
        return out;
      });

  add("Prop-2.13i", "Proposition 2.13(i)", "R GSWNC iff R/I GSWNC",
      "for nil ideals I, the GSWNC verdict passes to and from the quotient",
      [](const Catalog& cat) {
        struct Pair {
          const char* ring;
          std::vector<Index> gens;
        };
        const std::vector<Pair> pairs{
            {"TE(Z2)", {1}},   {"TE(Z4)", {1}},      {"TE(Z3 x Z3)", {4}},
            {"Z4", {2}},       {"Z8", {2}},          {"Z9", {3}},
            {"Z12", {6}},      {"T2(Z2)", {2}},      {"S2(Z3)", {1}},
            {"S3(Z2)", {4, 1}},
            {"Tskew2(GF(2, 2), frobenius)", {1}},
            {"M2(Z4)", {130}},  // ideal generated by 2*I
            {"K(Z4, 0)", {16, 4}},
            {"GR(Z2, C2)", {3}},
            {"GR(Z4, C2)", {7}},
            {"Z10", {}},
        };
        IRs out;
        for (const auto& p : pairs) {
          RingPtr R = cat.ring(p.ring);
          ElementSet I = ideal_closure(R, p.gens);
          if (!is_nil_ideal(R, I)) {
            out.push_back({p.ring, false, "chosen ideal is not nil"});
            continue;
          }
          RingPtr Q = quotient(R, I, std::string(p.ring) + "/I");
          bool a = gswnc(R), b = gswnc(Q);
          out.push_back({std::string(p.ring) + " with |I|=" +
                             std::to_string(I.size()),
                         a == b,
                         "gswnc(R)=" + yn(a) + ", gswnc(R/I)=" + yn(b) +
                             ", |R/I|=" + std::to_string(Q->size())});
        }
        return out;
      });

  add_iff("Prop-2.13ii", "Proposition 2.13(ii)",
          "J(R) nil and R/J(R) GSWNC",
          "R is GSWNC exactly when J(R) is nil and R/J(R) is GSWNC",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              bool lhs = gswnc(R);
              bool jn = jacobson_is_nil(R);
              bool qg = gswnc(cat.mod_jacobson(label).ring);
              out.push_back({label, lhs, jn && qg,
                             "gswnc=" + yn(lhs) + ", J nil=" + yn(jn) +
                                 ", gswnc(R/J)=" + yn(qg)});
            }
            return out;
          });

  add("Lemma-2.14", "Lemma 2.14", "corner rings eRe stay GSWNC",
      "every corner at a nonzero idempotent of a GSWNC catalog ring is GSWNC",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R)) continue;
          bool ok = true;
          std::size_t corners = 0;
          std::string bad;
          for (Index e : idempotent_list(*R)) {
            if (e == R->zero()) continue;
            RingPtr C = corner_ring(R, e);
            ++corners;
            if (!gswnc(C)) {
              ok = false;
              bad = "corner at [" + std::to_string(e) + "] of size " +
                    std::to_string(C->size()) + " is not GSWNC";
              break;
            }
          }
          out.push_back({label, ok,
                         ok ? std::to_string(corners) + " corners checked"
                            : bad});
        }
        return out;
      });

  add_iff("Cor-2.17", "Corollary 2.17", "T(R, M) GSWNC iff R GSWNC",
          "the trivial extension preserves and reflects the GSWNC property",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& e : cat.entries()) {
              if (e.kind != EntryKind::TrivialExtensionKind) continue;
              bool lhs = gswnc(cat.ring(e.base));
              bool rhs = gswnc(cat.ring(e.label));
              out.push_back({e.label, lhs, rhs,
                             "gswnc(" + e.base + ")=" + yn(lhs) + ", gswnc(" +
                                 e.label + ")=" + yn(rhs)});
            }
            {
              RingPtr R = cat.ring("Z10");
              RingPtr T = trivial_extension(R);
              bool lhs = gswnc(R), rhs = gswnc(T);
              out.push_back({"TE(Z10)", lhs, rhs,
                             "gswnc(Z10)=" + yn(lhs) + ", gswnc(TE(Z10))=" +
                                 yn(rhs)});
            }
            return out;
          });

  add_iff("Cor-2.20", "Corollaries 2.20-2.22",
          "T_n(R, alpha) GSWNC iff R GSWNC",
          "the skew triangular ring (the realization of R[x, alpha]/(x^n)) "
          "preserves and reflects the GSWNC property",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& e : cat.entries()) {
              if (e.kind != EntryKind::SkewTriangular) continue;
              bool lhs = gswnc(cat.ring(e.base));
              bool rhs = gswnc(cat.ring(e.label));
              out.push_back({e.label, lhs, rhs,
                             "gswnc(" + e.base + ")=" + yn(lhs) + ", gswnc(" +
                                 e.label + ")=" + yn(rhs)});
            }
            return out;
          });

  add_iff("Cor-2.57", "Corollary 2.57", "S_n(R) GSWNC iff R GSWNC",
          "equal-diagonal triangular rings preserve and reflect the GSWNC "
          "property",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& e : cat.entries()) {
              if (e.kind != EntryKind::EqualDiagTriangular) continue;
              bool lhs = gswnc(cat.ring(e.base));
              bool rhs = gswnc(cat.ring(e.label));
              out.push_back({e.label, lhs, rhs,
                             "gswnc(" + e.base + ")=" + yn(lhs) + ", gswnc(" +
                                 e.label + ")=" + yn(rhs)});
            }
            return out;
          });

  add("Example-2.24", "Example 2.24", "R = U(R) u Id(R) u Nil(R)",
      "M2(Z2): units, idempotents and nilpotents cover the ring; GSWNC but "
      "not strongly weakly nil-clean",
      [](const Catalog& cat) {
        RingPtr R = cat.ring("M2(Z2)");
        std::vector<std::uint8_t> covered(R->size(), 0);
        for (Index u : unit_list(*R)) covered[u] = 1;
        for (Index e : idempotent_list(*R)) covered[e] = 1;
        for (const auto& w : nilpotents(R)) covered[w.element] = 1;
        bool cover = std::all_of(covered.begin(), covered.end(),
                                 [](std::uint8_t c) { return c != 0; });
        bool g = gswnc(R), s = swnc(R);
        return IRs{{"M2(Z2)", cover && g && !s,
                    "cover=" + yn(cover) + ", gswnc=" + yn(g) + ", swnc=" +
                        yn(s)}};
      });

  add("Thm-2.25", "Theorem 2.25", "M_n(R) is not GSWNC for n >= 3",
      "M3(Z2) is not GSWNC; the pinned witness [[1,1,0],[1,0,0],[0,0,0]] "
      "fails both A + A^2 and A - A^2 nilpotency",
      [](const Catalog& cat) {
        RingPtr R = cat.ring("M3(Z2)");
        Index A = encode_components(2, {1, 1, 0, 1, 0, 0, 0, 0, 0});
        Index A2 = R->mul(A, A);
        bool nonunit = !is_unit(*R, A);
        bool plus_nil = is_nilpotent(*R, R->add(A, A2));
        bool minus_nil = is_nilpotent(*R, R->sub(A, A2));
        PredicateResult g = is_gswnc(R);
        bool ok = nonunit && !plus_nil && !minus_nil && !g.verdict &&
                  g.counterexample.has_value();
        std::ostringstream d;
        d << "A=M3(Z2)[" << A << "], nonunit=" << yn(nonunit)
          << ", (A+A^2) nil=" << yn(plus_nil) << ", (A-A^2) nil="
          << yn(minus_nil) << ", gswnc=" << yn(g.verdict)
          << ", scan counterexample=M3(Z2)["
          << (g.counterexample ? std::to_string(*g.counterexample) : "-")
          << "]";
        return IRs{{"M3(Z2)", ok, d.str()}};
      });

  add("Cor-2.35", "Corollary 2.35", "no corner is M_n(S) for n > 2",
      "corners of GSWNC rings are GSWNC, so none can be a full matrix ring "
      "of size 3 or more (those fail GSWNC); corner sizes matching |M3(Z2)| "
      "are compared against it explicitly",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R)) continue;
          bool ok = true;
          std::size_t corners = 0, size_hits = 0;
          for (Index e : idempotent_list(*R)) {
            if (e == R->zero()) continue;
            RingPtr C = corner_ring(R, e);
            ++corners;
            bool cg = gswnc(C);
            if (!cg) {
              ok = false;
              break;
            }
            if (C->size() == 512) {
              ++size_hits;
              // GSWNC corner vs the non-GSWNC M3(Z2) already differ
              if (gswnc(cat.ring("M3(Z2)"))) ok = false;
            }
          }
          out.push_back({label, ok,
                         std::to_string(corners) + " corners, " +
                             std::to_string(size_hits) +
                             " with |M3(Z2)| elements"});
        }
        return out;
      });

  add("Cor-2.36", "Corollary 2.36", "Dedekind-finite",
      "every GSWNC catalog ring is Dedekind-finite (checked exhaustively)",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R)) continue;
          bool rhs = is_dedekind_finite(R).verdict;
          out.push_back({label, rhs, "dedekind_finite=" + yn(rhs)});
        }
        return out;
      });

  add("Lemma-2.26", "Lemma 2.26",
      "M2(R) GSWNC implies R strongly weakly nil-clean",
      "bases of GSWNC 2x2 matrix rings are strongly weakly nil-clean",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::Matrix || e.n != 2) continue;
          if (!gswnc(cat.ring(e.label))) continue;
          bool rhs = swnc(cat.ring(e.base));
          out.push_back({e.label, rhs, "swnc(" + e.base + ")=" + yn(rhs)});
        }
        return out;
      });

  add("Lemma-2.27", "Lemma 2.27", "local ring with nil J(R)",
      "every local catalog ring with nil radical is GSWNC",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!is_local(R).verdict || !jacobson_is_nil(R)) continue;
          bool rhs = gswnc(R);
          out.push_back({label, rhs, "gswnc=" + yn(rhs)});
        }
        return out;
      });

  add_iff("Cor-2.50", "Corollary 2.50",
          "only trivial idempotents: GSWNC iff local with nil J",
          "over rings whose only idempotents are 0 and 1, GSWNC coincides "
          "with local + nil radical",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              if (!has_only_trivial_idempotents(R).verdict) continue;
              bool lhs = gswnc(R);
              bool rhs = is_local(R).verdict && jacobson_is_nil(R);
              out.push_back({label, lhs, rhs,
                             "gswnc=" + yn(lhs) + ", local+nilJ=" + yn(rhs)});
            }
            return out;
          });

  add("Lemma-2.55", "Lemma 2.55", "2 in Nil(R) or 6 in Nil(R)",
      "in a GSWNC ring where 2 is not a unit, 2 or 6 is nilpotent",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R) || unit_two(R)) continue;
          bool two_nil = is_nilpotent(*R, R->of_integer(2));
          bool six_nil = is_nilpotent(*R, R->of_integer(6));
          out.push_back({label, two_nil || six_nil,
                         "2 nil=" + yn(two_nil) + ", 6 nil=" + yn(six_nil)});
        }
        return out;
      });

  add_iff("Lemma-2.29", "Lemma 2.29", "2 in J(R): GSWNC iff GSNC",
          "when 2 lies in the radical the two classes coincide",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              if (!jacobson_radical(R).contains(R->of_integer(2))) continue;
              bool lhs = gswnc(R), rhs = gsnc(R);
              out.push_back({label, lhs, rhs,
                             "gswnc=" + yn(lhs) + ", gsnc=" + yn(rhs)});
            }
            return out;
          });

  add_iff("Lemma-2.56", "Lemma 2.56",
          "GSWNC iff GSNC or strongly weakly nil-clean",
          "when 2 is not a unit, GSWNC splits into the GSNC and strongly "
          "weakly nil-clean cases",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              if (unit_two(R)) continue;
              bool lhs = gswnc(R);
              bool rhs = gsnc(R) || swnc(R);
              out.push_back({label, lhs, rhs,
                             "gswnc=" + yn(lhs) + ", gsnc or swnc=" + yn(rhs)});
            }
            return out;
          });

  add_iff("Lemma-2.30", "Lemma 2.30",
          "strongly weakly nil-clean iff WUU and GSWNC",
          "the strongly weakly nil-clean rings are exactly the WUU GSWNC "
          "rings",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              bool lhs = swnc(R);
              bool rhs = is_wuu(R).verdict && gswnc(R);
              out.push_back({label, lhs, rhs,
                             "swnc=" + yn(lhs) + ", wuu and gswnc=" + yn(rhs)});
            }
            return out;
          });

  add_iff("Lemma-2.31", "Lemma 2.31",
          "strongly nil-clean iff UU and GSWNC",
          "the strongly nil-clean rings are exactly the UU GSWNC rings",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              bool lhs = snc(R);
              bool rhs = is_uu(R).verdict && gswnc(R);
              out.push_back({label, lhs, rhs,
                             "snc=" + yn(lhs) + ", uu and gswnc=" + yn(rhs)});
            }
            return out;
          });

  add("Thm-2.38", "Theorem 2.38",
      "M2(R) GSWNC for 2-primal local strongly weakly nil-clean R",
      "2x2 matrix rings over 2-primal local strongly weakly nil-clean bases "
      "are GSWNC",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::Matrix || e.n != 2) continue;
          RingPtr base = cat.ring(e.base);
          if (!is_2_primal(base).verdict || !is_local(base).verdict ||
              !swnc(base))
            continue;
          bool rhs = gswnc(cat.ring(e.label));
          out.push_back({e.label, rhs, "gswnc(" + e.label + ")=" + yn(rhs)});
        }
        return out;
      });

  add_iff("Thm-2.36", "Theorem 2.36 (semi-local characterization)",
          "local with nil J, or R/J one of M2(Z2), M2(Z3), Z3 x Z3, or "
          "strongly weakly nil-clean",
          "every finite ring is semi-local; GSWNC holds exactly when one of "
          "the five branches does",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              bool lhs = gswnc(R);
              BranchOutcome b =
                  semilocal_branches(cat, R, cat.mod_jacobson(label).ring);
              out.push_back({label, lhs, b.any,
                             "gswnc=" + yn(lhs) + "; branch: " + b.detail});
            }
            return out;
          });

  add_iff("Cor-2.39", "Corollary 2.39",
          "semi-simple: division ring, M2(Z2), M2(Z3), Z3 x Z3, or strongly "
          "weakly nil-clean",
          "over catalog rings with zero radical, GSWNC matches the "
          "semi-simple branch list",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              if (jacobson_radical(R).size() != 1) continue;
              bool lhs = gswnc(R);
              std::string detail;
              bool rhs = false;
              if (is_division_ring(R)) {
                rhs = true;
                detail = "division ring";
              } else {
                for (const char* t : {"M2(Z3)", "M2(Z2)", "Z3 x Z3"}) {
                  RingPtr target = cat.ring(t);
                  if (R->size() != target->size()) continue;
                  IsoSearchResult iso = find_isomorphism(R, target);
                  if (iso.status == IsoSearchResult::Status::Isomorphic) {
                    rhs = true;
                    detail = std::string("isomorphic to ") + t;
                    break;
                  }
                }
                if (!rhs && swnc(R)) {
                  rhs = true;
                  detail = "strongly weakly nil-clean";
                }
              }
              if (detail.empty()) detail = "no branch";
              out.push_back({label, lhs, rhs,
                             "gswnc=" + yn(lhs) + "; " + detail});
            }
            return out;
          });

  add_iff("Cor-2.40", "Corollary 2.40",
          "Artinian rings: same branch list as the semi-local theorem",
          "every finite ring is Artinian; the characterization re-checked "
          "per catalog ring",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.ring_labels()) {
              RingPtr R = cat.ring(label);
              bool lhs = gswnc(R);
              BranchOutcome b =
                  semilocal_branches(cat, R, cat.mod_jacobson(label).ring);
              out.push_back({label, lhs, b.any,
                             "gswnc=" + yn(lhs) + "; branch: " + b.detail});
            }
            return out;
          });

  add("Lemma-2.49", "Lemma 2.49",
      "2 a unit and all unit squares 1 force commutativity",
      "a GSWNC ring with 2 invertible and u^2 = 1 for all units is "
      "commutative",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.ring_labels()) {
          RingPtr R = cat.ring(label);
          if (!gswnc(R) || !unit_two(R)) continue;
          bool squares = true;
          for (Index u : unit_list(*R)) {
            if (R->mul(u, u) != R->one()) {
              squares = false;
              break;
            }
          }
          if (!squares) continue;
          bool rhs = is_commutative(R).verdict;
          out.push_back({label, rhs, "commutative=" + yn(rhs)});
        }
        return out;
      });

  add("Cor-2.43.fwd", "Corollary 2.43",
      "K_s(R) GSWNC implies R strongly weakly nil-clean",
      "for nilpotent central s, a GSWNC generalized 2x2 matrix ring has a "
      "strongly weakly nil-clean base",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::FormalKs) continue;
          RingPtr base = cat.ring(e.base);
          if (!is_nilpotent(*base, e.twist)) continue;
          if (!gswnc(cat.ring(e.label))) continue;
          bool rhs = swnc(base);
          out.push_back({e.label, rhs, "swnc(" + e.base + ")=" + yn(rhs)});
        }
        return out;
      });

  add("Cor-2.43.rev", "Corollary 2.43",
      "converse provided R is strongly nil-clean",
      "for nilpotent central s over a strongly nil-clean base, K_s(R) is "
      "GSWNC",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::FormalKs) continue;
          RingPtr base = cat.ring(e.base);
          if (!is_nilpotent(*base, e.twist) || !snc(base)) continue;
          bool rhs = gswnc(cat.ring(e.label));
          out.push_back({e.label, rhs, "gswnc(" + e.label + ")=" + yn(rhs)});
        }
        return out;
      });

  add("Cor-2.44.id", "Corollary 2.44 (proof identities)",
      "M_1(R;s) = R and M_2(R;s) = K_{s^2}(R)",
      "the formal matrix ring collapses to R at n = 1 and to the twisted "
      "2x2 ring at n = 2, as operation tables",
      [](const Catalog& cat) {
        IRs out;
        RingPtr Z4 = cat.ring("Z4");
        {
          RingPtr M1 = formal_matrix_ns(Z4, 1, 2);
          out.push_back({"MF1(Z4, 2) vs Z4", tables_identical(*M1, *Z4),
                         "table equality under the identity index map"});
        }
        {
          RingPtr M2s = cat.ring("MF2(Z4, 2)");
          RingPtr K = cat.ring("K(Z4, 0)");  // s^2 = 0 in Z4
          out.push_back({"MF2(Z4, 2) vs K(Z4, 0)",
                         tables_identical(*M2s, *K),
                         "s^2 = 0; table equality under the identity map"});
        }
        {
          RingPtr M2one = formal_matrix_ns(cat.ring("Z2"), 2, 1);
          out.push_back({"MF2(Z2, 1) vs M2(Z2)",
                         tables_identical(*M2one, *cat.ring("M2(Z2)")),
                         "s = 1 recovers the full matrix ring"});
        }
        return out;
      });

  add("Cor-2.44.fwd", "Corollary 2.44",
      "M_n(R;s) GSWNC implies R strongly weakly nil-clean",
      "for nilpotent central s, a GSWNC formal matrix ring has a strongly "
      "weakly nil-clean base",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::FormalNs) continue;
          RingPtr base = cat.ring(e.base);
          if (!is_nilpotent(*base, e.twist)) continue;
          if (!gswnc(cat.ring(e.label))) continue;
          bool rhs = swnc(base);
          out.push_back({e.label, rhs, "swnc(" + e.base + ")=" + yn(rhs)});
        }
        return out;
      });

  add("Cor-2.44.rev", "Corollary 2.44",
      "converse provided R is strongly nil-clean",
      "for nilpotent central s over a strongly nil-clean base, M_n(R;s) is "
      "GSWNC",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& e : cat.entries()) {
          if (e.kind != EntryKind::FormalNs) continue;
          RingPtr base = cat.ring(e.base);
          if (!is_nilpotent(*base, e.twist) || !snc(base)) continue;
          bool rhs = gswnc(cat.ring(e.label));
          out.push_back({e.label, rhs, "gswnc(" + e.label + ")=" + yn(rhs)});
        }
        return out;
      });

  add("Cor-2.45", "Corollary 2.45", "trivial Morita context",
      "K_0(R) realizes the trivial Morita context: it is isomorphic to the "
      "trivial extension T(R x R, R + R) by an explicit bijection, and the "
      "GSWNC transfer holds",
      [](const Catalog& cat) {
        IRs out;
        RingPtr K0 = cat.ring("K(Z4, 0)");
        RingPtr R = cat.ring("Z4");
        RingPtr RR = direct_product({R, R});
        RingPtr T = trivial_extension(RR);
        const std::size_t q = R->size();
        // (a, x, y, b) -> ((a, b), (x, y))
        auto phi = [&](Index v) {
          std::vector<Index> c = decode_components(q, 4, v);
          Index r = static_cast<Index>(c[0] * q + c[3]);
          Index m = static_cast<Index>(c[1] * q + c[2]);
          return static_cast<Index>(r * RR->size() + m);
        };
        bool iso = T->size() == K0->size() && phi(K0->one()) == T->one();
        for (Index a = 0; a < K0->size() && iso; ++a) {
          for (Index b = 0; b < K0->size(); ++b) {
            if (phi(K0->add(a, b)) != T->add(phi(a), phi(b)) ||
                phi(K0->mul(a, b)) != T->mul(phi(a), phi(b))) {
              iso = false;
              break;
            }
          }
        }
        out.push_back({"K(Z4, 0) ~= T(Z4 x Z4, M + N)", iso,
                       "explicit bijection checked on all pairs"});
        bool fwd = !gswnc(K0) || (swnc(R) && swnc(R));
        out.push_back({"K(Z4, 0) transfer", fwd,
                       "gswnc(K0)=" + yn(gswnc(K0)) + ", swnc(Z4)=" +
                           yn(swnc(R))});
        bool rev = !(snc(R) && swnc(R)) || gswnc(K0);
        out.push_back({"K(Z4, 0) converse", rev,
                       "snc(Z4)=" + yn(snc(R)) + ", gswnc(K0)=" +
                           yn(gswnc(K0))});
        return out;
      });

  // ---- section 3 ----------------------------------------------------

  add("Lemma-3.1", "Lemma 3.1", "RG GSWNC implies R GSWNC",
      "coefficient rings of GSWNC group rings are GSWNC",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.group_ring_labels()) {
          const GroupRing& RG = cat.group_ring(label);
          if (!gswnc(RG.ring)) continue;
          bool rhs = gswnc(RG.coeff);
          out.push_back({label, rhs,
                         "gswnc(" + RG.coeff->label() + ")=" + yn(rhs)});
        }
        return out;
      });

  add("Lemma-3.2", "Lemma 3.2", "p nilpotent, G a p-group: RG GSWNC",
      "group rings of p-groups over GSWNC rings with p nilpotent are GSWNC; "
      "the augmentation ideal is verified nil",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.group_ring_labels()) {
          const GroupRing& RG = cat.group_ring(label);
          std::uint32_t p = group_prime(*RG.group);
          if (p == 0) continue;
          if (!gswnc(RG.coeff)) continue;
          if (!is_nilpotent(*RG.coeff, RG.coeff->of_integer(p))) continue;
          if (!is_p_group(*RG.group, p)) continue;
          bool g = gswnc(RG.ring);
          bool delta_nil = is_nil_ideal(RG.ring, augmentation_ideal(RG));
          out.push_back({label, g && delta_nil,
                         "p=" + std::to_string(p) + ", gswnc(RG)=" + yn(g) +
                             ", Delta nil=" + yn(delta_nil)});
        }
        return out;
      });

  add_iff("Lemma-3.5", "Lemma 3.5",
          "epimorphism with Ker(f) meeting Id(R) in 0",
          "instantiated with the trivial-extension projection T(R, R) -> R: "
          "GSWNC transfers exactly when the kernel is nil",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& e : cat.entries()) {
              if (e.kind != EntryKind::TrivialExtensionKind) continue;
              RingPtr T = cat.ring(e.label);
              RingPtr R = cat.ring(e.base);
              // (0, 1_R) generates the kernel 0 x M; its index in T(R, R)
              // is the index of 1_R
              ElementSet ker = ideal_closure(T, {R->one()});
              bool hyp = true;
              for (Index x : ker.members) {
                if (x != T->zero() && T->mul(x, x) == x) {
                  hyp = false;  // idempotent inside the kernel
                  break;
                }
              }
              if (!hyp) continue;
              bool lhs = gswnc(T);
              bool rhs = gswnc(R) && is_nil_ideal(T, ker);
              out.push_back({e.label + " -> " + e.base, lhs, rhs,
                             "gswnc(T)=" + yn(lhs) +
                                 ", gswnc(R) and Ker nil=" + yn(rhs)});
            }
            return out;
          });

  add_iff("Cor-3.6", "Corollary 3.6",
          "Delta(RG) meets Id(RG) in 0: RG GSWNC iff R GSWNC and Delta nil",
          "for pairs whose augmentation ideal contains no nonzero "
          "idempotent, GSWNC transfers exactly when Delta is nil",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.group_ring_labels()) {
              const GroupRing& RG = cat.group_ring(label);
              ElementSet delta = augmentation_ideal(RG);
              bool hyp = true;
              for (Index x : delta.members) {
                if (x != RG.ring->zero() && RG.ring->mul(x, x) == x) {
                  hyp = false;
                  break;
                }
              }
              if (!hyp) continue;
              bool lhs = gswnc(RG.ring);
              bool rhs =
                  gswnc(RG.coeff) && is_nil_ideal(RG.ring, delta);
              out.push_back({label, lhs, rhs,
                             "gswnc(RG)=" + yn(lhs) +
                                 ", gswnc(R) and Delta nil=" + yn(rhs)});
            }
            return out;
          });

  add_iff("Lemma-3.8", "Lemma 3.8",
          "p in J(R), G a locally finite p-group",
          "for p in the radical and G a p-group, RG is GSWNC exactly when R "
          "is GSWNC and Delta is nil",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.group_ring_labels()) {
              const GroupRing& RG = cat.group_ring(label);
              std::uint32_t p = group_prime(*RG.group);
              if (p == 0) continue;
              if (!jacobson_radical(RG.coeff)
                       .contains(RG.coeff->of_integer(p)))
                continue;
              bool lhs = gswnc(RG.ring);
              bool rhs = gswnc(RG.coeff) &&
                         is_nil_ideal(RG.ring, augmentation_ideal(RG));
              out.push_back({label, lhs, rhs,
                             "p=" + std::to_string(p) + ", gswnc(RG)=" +
                                 yn(lhs) + ", rhs=" + yn(rhs)});
            }
            return out;
          });

  add("Lemma-RGJ", "Lemma after 3.8", "RG/J(RG) is GSWNC",
      "for GSWNC coefficients with Delta(RG) inside J(RG), the quotient of "
      "RG by its radical is GSWNC",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.group_ring_labels()) {
          const GroupRing& RG = cat.group_ring(label);
          if (!gswnc(RG.coeff)) continue;
          ElementSet delta = augmentation_ideal(RG);
          ElementSet J = jacobson_radical(RG.ring);
          bool subset = std::includes(J.members.begin(), J.members.end(),
                                      delta.members.begin(),
                                      delta.members.end());
          if (!subset) continue;
          bool rhs = gswnc(cat.mod_jacobson(label).ring);
          out.push_back({label, rhs, "gswnc(RG/J)=" + yn(rhs)});
        }
        return out;
      });

  add("RG-mod-Delta", "Section 3", "RG/Delta(RG) = R",
      "the quotient of each catalog group ring by its augmentation ideal "
      "reproduces the coefficient ring under the scalar section",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.group_ring_labels()) {
          const GroupRing& RG = cat.group_ring(label);
          try {
            ElementSet delta = augmentation_ideal(RG);  // validates the iso
            std::size_t expect = 1;
            for (std::size_t i = 1; i < RG.group->size(); ++i)
              expect *= RG.coeff->size();
            bool size_ok = delta.size() == expect;
            out.push_back({label, size_ok,
                           "|Delta|=" + std::to_string(delta.size()) +
                               ", section iso verified"});
          } catch (const internal_check_error& err) {
            out.push_back({label, false, err.what()});
          }
        }
        return out;
      });

  add("Thm-3.3", "Theorem 3.3", "G is a 2-group and 2 in Nil(R)",
      "under the stated hypothesis that 2 is not a unit, a GSWNC group ring "
      "forces a 2-group and nilpotent 2",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.group_ring_labels()) {
          const GroupRing& RG = cat.group_ring(label);
          if (unit_two(RG.coeff)) continue;
          if (!gswnc(RG.ring)) continue;
          bool two_group = is_p_group(*RG.group, 2);
          bool two_nil = is_nilpotent(*RG.coeff, RG.coeff->of_integer(2));
          out.push_back({label, two_group && two_nil,
                         "G 2-group=" + yn(two_group) + ", 2 nil=" +
                             yn(two_nil)});
        }
        return out;
      });

  add_iff("Example-3.4", "Example 3.4",
          "Z_m G GSWNC iff m = 2^k and G a 2-group",
          "for modular coefficient rings with 2 not a unit and G "
          "nontrivial, GSWNC holds exactly for 2-power m and 2-groups",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& e : cat.entries()) {
              if (e.kind != EntryKind::GroupRingKind) continue;
              if (e.base.empty() || e.base[0] != 'Z') continue;
              std::uint64_t m = std::stoull(e.base.substr(1));
              const GroupRing& RG = cat.group_ring(e.label);
              if (RG.group->size() < 2) continue;
              if (unit_two(RG.coeff)) continue;
              bool lhs = gswnc(RG.ring);
              bool rhs = is_power_of(m, 2) && is_p_group(*RG.group, 2);
              out.push_back({e.label, lhs, rhs,
                             "gswnc=" + yn(lhs) + ", m=2^k=" +
                                 yn(is_power_of(m, 2)) + ", G 2-group=" +
                                 yn(is_p_group(*RG.group, 2))});
            }
            return out;
          });

  add("Lemma-3.9", "Lemma 3.9", "Z(G) is a 2-group",
      "for GSNC group rings with 2 not a unit, the group center is a "
      "2-group",
      [](const Catalog& cat) {
        IRs out;
        for (const auto& label : cat.group_ring_labels()) {
          const GroupRing& RG = cat.group_ring(label);
          if (unit_two(RG.coeff)) continue;
          if (!gsnc(RG.ring)) continue;
          bool ok = true;
          for (GIndex z : group_center(*RG.group)) {
            std::uint32_t ord = element_order(*RG.group, z);
            if (!is_power_of(std::max<std::uint32_t>(ord, 1), 2) && ord != 1) {
              ok = false;
              break;
            }
          }
          out.push_back({label, ok,
                         "|Z(G)|=" +
                             std::to_string(group_center(*RG.group).size())});
        }
        return out;
      });

  add_iff("Lemma-3.11", "Lemma 3.11",
          "RG GSNC iff R GSNC and G a 2-group",
          "for nilpotent G with 2 not a unit in R, GSNC transfers both ways",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.group_ring_labels()) {
              const GroupRing& RG = cat.group_ring(label);
              if (unit_two(RG.coeff)) continue;
              if (!is_nilpotent_group(*RG.group)) continue;
              bool lhs = gsnc(RG.ring);
              bool rhs = gsnc(RG.coeff) && is_p_group(*RG.group, 2);
              out.push_back({label, lhs, rhs,
                             "gsnc(RG)=" + yn(lhs) + ", gsnc(R) and G "
                                                     "2-group=" +
                                 yn(rhs)});
            }
            return out;
          });

  add_iff("Thm-3.12", "Theorem 3.12",
          "RG GSWNC iff R GSNC and G a 2-group",
          "for nilpotent G with 2 not a unit in R, GSWNC of the group ring "
          "matches GSNC coefficients over a 2-group",
          [](const Catalog& cat) {
            std::vector<IffInstance> out;
            for (const auto& label : cat.group_ring_labels()) {
              const GroupRing& RG = cat.group_ring(label);
              if (unit_two(RG.coeff)) continue;
              if (!is_nilpotent_group(*RG.group)) continue;
              bool lhs = gswnc(RG.ring);
              bool rhs = gsnc(RG.coeff) && is_p_group(*RG.group, 2);
              out.push_back({label, lhs, rhs,
                             "gswnc(RG)=" + yn(lhs) + ", gsnc(R) and G "
                                                      "2-group=" +
                                 yn(rhs)});
            }
            return out;
          });
}

std::vector<std::string> Harness::check_ids() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

bool Harness::has_check(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return true;
  }
  return false;
}

CheckResult Harness::run_entry(const Entry& e, const Catalog& cat) const {
  CheckResult result;
  result.id = e.id;
  result.where = e.where;
  result.anchor = e.anchor;
  result.description = e.description;
  auto start = std::chrono::steady_clock::now();
  result.instances = e.fn(cat);
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

CheckResult Harness::run(const std::string& id, const Catalog& cat) const {
  for (const auto& e : entries_) {
    if (e.id == id) return run_entry(e, cat);
  }
  throw ring_error("unknown check id: " + id);
}

std::vector<CheckResult> Harness::run_all(const Catalog& cat) const {
  std::vector<CheckResult> out;
  for (const auto& e : entries_) out.push_back(run_entry(e, cat));
  return out;
}

std::vector<CheckResult> Harness::run_selected(
    const std::vector<std::string>& ids, const Catalog& cat) const {
  std::vector<CheckResult> out;
  std::vector<std::uint8_t> taken(entries_.size(), 0);
  for (const auto& sel : ids) {
    bool matched = false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& id = entries_[i].id;
      bool hit = id == sel || (id.size() > sel.size() &&
                               id.compare(0, sel.size(), sel) == 0 &&
                               id[sel.size()] == '.');
      if (hit) {
        matched = true;
        if (!taken[i]) {
          taken[i] = 1;
          out.push_back(run_entry(entries_[i], cat));
        }
      }
    }
    if (!matched) throw ring_error("unknown check id: " + sel);
  }
  return out;
}

std::string render_report_table(const std::vector<CheckResult>& results) {
  std::size_t pass = 0, fail = 0, vacuous = 0;
  std::ostringstream os;
  os << "check                         status   instances  time\n";
  os << "---------------------------------------------------------\n";
  for (const auto& r : results) {
    CheckStatus s = r.status();
    if (s == CheckStatus::Pass) ++pass;
    if (s == CheckStatus::Fail) ++fail;
    if (s == CheckStatus::Vacuous) ++vacuous;
    os << r.id;
    for (std::size_t i = r.id.size(); i < 30; ++i) os << ' ';
    std::string st = to_string(s);
    os << st;
    for (std::size_t i = st.size(); i < 9; ++i) os << ' ';
    std::string in = std::to_string(r.instances.size());
    os << in;
    for (std::size_t i = in.size(); i < 11; ++i) os << ' ';
    os << static_cast<long>(r.wall_ms + 0.5) << " ms\n";
    for (const auto& inst : r.instances) {
      if (!inst.pass) {
        os << "    FAIL " << inst.label << ": " << inst.detail << "\n";
      }
    }
  }
  os << "---------------------------------------------------------\n";
  os << "pass " << pass << ", fail " << fail << ", vacuous " << vacuous
     << "\n";
  return os.str();
}

std::string render_report_json(const std::vector<CheckResult>& results,
                               bool include_timing) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "verification_report";
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::size_t pass = 0, fail = 0, vacuous = 0;
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["where"] = r.where;
    c["anchor"] = r.anchor;
    c["description"] = r.description;
    c["status"] = to_string(r.status());
    nlohmann::ordered_json insts = nlohmann::ordered_json::array();
    for (const auto& i : r.instances) {
      nlohmann::ordered_json inst;
      inst["label"] = i.label;
      inst["verdict"] = i.pass ? "PASS" : "FAIL";
      inst["detail"] = i.detail;
      insts.push_back(std::move(inst));
    }
    c["instances"] = std::move(insts);
    if (include_timing) c["wall_ms"] = r.wall_ms;
    checks.push_back(std::move(c));
    CheckStatus s = r.status();
    if (s == CheckStatus::Pass) ++pass;
    if (s == CheckStatus::Fail) ++fail;
    if (s == CheckStatus::Vacuous) ++vacuous;
  }
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"pass", pass}, {"fail", fail}, {"vacuous", vacuous}};
  return doc.dump(2) + "\n";
}

}  // namespace ringlab
