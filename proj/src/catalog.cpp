#include "ringlab/catalog.hpp"

#include <algorithm>

#include "ringlab/subsets.hpp"

namespace ringlab {

void Catalog::push(CatalogEntry entry) { entries_.push_back(std::move(entry)); }

const CatalogEntry* Catalog::info(const std::string& label) const {
  for (const auto& e : entries_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

std::vector<std::string> Catalog::ring_labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.label);
  return out;
}

std::vector<std::string> Catalog::group_ring_labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.kind == EntryKind::GroupRingKind) out.push_back(e.label);
  }
  return out;
}

GroupPtr Catalog::group(const std::string& name) const {
  {
    std::scoped_lock guard(lock_);
    auto it = groups_.find(name);
    if (it != groups_.end()) return it->second;
  }
  GroupPtr G;
  if (name == "C2 x C2") {
    G = make_group_product(make_cyclic(2), make_cyclic(2));
  } else if (name == "D4") {
    G = make_dihedral(4);
  } else if (name == "Q8") {
    G = make_quaternion8();
  } else if (name == "S3") {
    G = make_symmetric3();
  } else if (name.size() > 1 && name[0] == 'C') {
    G = make_cyclic(static_cast<unsigned>(std::stoul(name.substr(1))));
  } else {
    throw ring_error("unknown group: " + name);
  }
  std::scoped_lock guard(lock_);
  auto [it, _] = groups_.emplace(name, std::move(G));
  return it->second;
}

RingPtr Catalog::build(const CatalogEntry& e) const {
  switch (e.kind) {
    case EntryKind::Zmod:
      return make_zmod(std::stoul(e.label.substr(1)));
    case EntryKind::GaloisFieldKind: {
      // label "GF(p, k)"
      auto comma = e.label.find(',');
      std::uint32_t p = std::stoul(e.label.substr(3, comma - 3));
      std::uint32_t k = std::stoul(e.label.substr(comma + 1));
      return make_gf(p, k).ring;
    }
    case EntryKind::Product: {
      std::vector<RingPtr> factors;
      for (const auto& f : e.factors) factors.push_back(ring(f));
      return direct_product(factors);
    }
    case EntryKind::Matrix:
      return matrix_ring(ring(e.base), e.n);
    case EntryKind::UpperTriangular:
      return upper_triangular(ring(e.base), e.n);
    case EntryKind::EqualDiagTriangular:
      return equal_diag_triangular(ring(e.base), e.n);
    case EntryKind::SkewTriangular: {
      if (e.endo == "frobenius") {
        const CatalogEntry* bi = info(e.base);
        if (!bi || bi->kind != EntryKind::GaloisFieldKind) {
          throw ring_error(e.label + ": frobenius needs a Galois field base");
        }
        auto comma = e.base.find(',');
        std::uint32_t p = std::stoul(e.base.substr(3, comma - 3));
        std::uint32_t k = std::stoul(e.base.substr(comma + 1));
        GaloisField gf = make_gf(p, k);
        return skew_triangular(gf.ring, gf.frobenius, e.n);
      }
      RingPtr base = ring(e.base);
      return skew_triangular(base, identity_endomorphism(base), e.n);
    }
    case EntryKind::FormalKs:
      return formal_matrix_ks(ring(e.base), e.twist);
    case EntryKind::FormalNs:
      return formal_matrix_ns(ring(e.base), e.n, e.twist);
    case EntryKind::TrivialExtensionKind:
      return trivial_extension(ring(e.base));
    case EntryKind::GroupRingKind:
      return group_ring(e.label).ring;
  }
  throw ring_error("unhandled catalog entry kind");
}

RingPtr Catalog::ring(const std::string& label) const {
  {
    std::scoped_lock guard(lock_);
    auto it = rings_.find(label);
    if (it != rings_.end()) return it->second;
  }
  const CatalogEntry* e = info(label);
  if (!e) throw ring_error("no catalog entry named " + label);
  RingPtr R = build(*e);
  std::scoped_lock guard(lock_);
  auto [it, _] = rings_.emplace(label, std::move(R));
  return it->second;
}

const GroupRing& Catalog::group_ring(const std::string& label) const {
  {
    std::scoped_lock guard(lock_);
    auto it = group_rings_.find(label);
    if (it != group_rings_.end()) return it->second;
  }
  const CatalogEntry* e = info(label);
  if (!e || e->kind != EntryKind::GroupRingKind) {
    throw ring_error("no group-ring catalog entry named " + label);
  }
  GroupRing gr = make_group_ring(ring(e->base), group(e->group));
  std::scoped_lock guard(lock_);
  auto [it, _] = group_rings_.emplace(label, std::move(gr));
  return it->second;
}

const QuotientRing& Catalog::mod_jacobson(const std::string& label) const {
  {
    std::scoped_lock guard(lock_);
    auto it = mod_j_.find(label);
    if (it != mod_j_.end()) return it->second;
  }
  RingPtr R = ring(label);
  QuotientRing Q = make_quotient(R, jacobson_radical(R), label + "/J");
  std::scoped_lock guard(lock_);
  auto [it, _] = mod_j_.emplace(label, std::move(Q));
  return it->second;
}

Catalog Catalog::make_default() {
  Catalog cat;
  auto zmod = [&](unsigned n) {
    cat.push({"Z" + std::to_string(n), EntryKind::Zmod, {}, "", 0, 0, "", ""});
  };
  for (unsigned n = 1; n <= 12; ++n) zmod(n);
  zmod(16);
  zmod(27);

  cat.push({"GF(2, 2)", EntryKind::GaloisFieldKind, {}, "", 0, 0, "", ""});
  cat.push({"GF(2, 3)", EntryKind::GaloisFieldKind, {}, "", 0, 0, "", ""});
  cat.push({"GF(3, 2)", EntryKind::GaloisFieldKind, {}, "", 0, 0, "", ""});

  cat.push({"Z2 x Z2", EntryKind::Product, {"Z2", "Z2"}, "", 0, 0, "", ""});
  cat.push({"Z2 x Z3", EntryKind::Product, {"Z2", "Z3"}, "", 0, 0, "", ""});
  cat.push({"Z3 x Z3", EntryKind::Product, {"Z3", "Z3"}, "", 0, 0, "", ""});
  cat.push({"Z2 x Z2 x Z3",
            EntryKind::Product,
            {"Z2", "Z2", "Z3"},
            "",
            0,
            0,
            "",
            ""});
  cat.push({"Z2 x Z3 x Z3",
            EntryKind::Product,
            {"Z2", "Z3", "Z3"},
            "",
            0,
            0,
            "",
            ""});

  cat.push({"M2(Z2)", EntryKind::Matrix, {}, "Z2", 2, 0, "", ""});
  cat.push({"M2(Z3)", EntryKind::Matrix, {}, "Z3", 2, 0, "", ""});
  cat.push({"M2(Z4)", EntryKind::Matrix, {}, "Z4", 2, 0, "", ""});
  cat.push({"M2(Z8)", EntryKind::Matrix, {}, "Z8", 2, 0, "", ""});
  cat.push({"M3(Z2)", EntryKind::Matrix, {}, "Z2", 3, 0, "", ""});

  cat.push({"T2(Z2)", EntryKind::UpperTriangular, {}, "Z2", 2, 0, "", ""});
  cat.push({"T2(Z3)", EntryKind::UpperTriangular, {}, "Z3", 2, 0, "", ""});
  cat.push({"T3(Z2)", EntryKind::UpperTriangular, {}, "Z2", 3, 0, "", ""});
  cat.push({"T3(Z3)", EntryKind::UpperTriangular, {}, "Z3", 3, 0, "", ""});

  cat.push({"S2(Z3)", EntryKind::EqualDiagTriangular, {}, "Z3", 2, 0, "", ""});
  cat.push({"S2(Z4)", EntryKind::EqualDiagTriangular, {}, "Z4", 2, 0, "", ""});
  cat.push({"S3(Z2)", EntryKind::EqualDiagTriangular, {}, "Z2", 3, 0, "", ""});

  cat.push({"Tskew2(GF(2, 2), frobenius)", EntryKind::SkewTriangular, {},
            "GF(2, 2)", 2, 0, "frobenius", ""});
  cat.push({"Tskew2(GF(2, 2), identity)", EntryKind::SkewTriangular, {},
            "GF(2, 2)", 2, 0, "identity", ""});
  cat.push({"Tskew2(Z4, identity)", EntryKind::SkewTriangular, {}, "Z4", 2, 0,
            "identity", ""});

  cat.push({"K(Z4, 2)", EntryKind::FormalKs, {}, "Z4", 0, 2, "", ""});
  cat.push({"K(Z8, 2)", EntryKind::FormalKs, {}, "Z8", 0, 2, "", ""});
  cat.push({"K(Z4, 0)", EntryKind::FormalKs, {}, "Z4", 0, 0, "", ""});

  cat.push({"MF2(Z4, 2)", EntryKind::FormalNs, {}, "Z4", 2, 2, "", ""});

  cat.push({"TE(Z2)", EntryKind::TrivialExtensionKind, {}, "Z2", 0, 0, "", ""});
  cat.push({"TE(Z4)", EntryKind::TrivialExtensionKind, {}, "Z4", 0, 0, "", ""});
  cat.push({"TE(Z3 x Z3)", EntryKind::TrivialExtensionKind, {}, "Z3 x Z3", 0,
            0, "", ""});

  auto gr = [&](const std::string& base, const std::string& grp) {
    cat.push({"GR(" + base + ", " + grp + ")", EntryKind::GroupRingKind, {},
              base, 0, 0, "", grp});
  };
  gr("Z2", "C2");
  gr("Z4", "C2");
  gr("Z2", "C2 x C2");
  gr("Z2", "C4");
  gr("Z3", "C3");
  gr("Z4", "C4");
  gr("Z2", "C3");
  gr("Z6", "C2");
  gr("Z6", "C3");
  gr("Z2", "D4");
  gr("Z2", "Q8");
  gr("Z2", "S3");

  return cat;
}

}  // namespace ringlab
