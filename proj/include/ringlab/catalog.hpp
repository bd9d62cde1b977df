#pragma once

/**
 * @file catalog.hpp
 * @brief The curated collection of rings and group rings the
 *        verification harness runs over. Entries are built lazily and
 *        cached; labels are canonical ring expressions.
 */

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/group_ring.hpp"
#include "ringlab/groups.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class EntryKind {
  Zmod,
  GaloisFieldKind,
  Product,
  Matrix,
  UpperTriangular,
  EqualDiagTriangular,
  SkewTriangular,
  FormalKs,
  FormalNs,
  TrivialExtensionKind,
  GroupRingKind,
};

struct CatalogEntry {
  std::string label;
  EntryKind kind;
  std::vector<std::string> factors;  // Product
  std::string base;                  // operand ring label
  unsigned n = 0;                    // Matrix / triangular / FormalNs
  Index twist = 0;                   // FormalKs / FormalNs
  std::string endo;                  // SkewTriangular
  std::string group;                 // GroupRingKind
};

class Catalog {
 public:
  /// The shipped catalog.
  static Catalog make_default();

  /// An empty catalog; add entries with push.
  Catalog() = default;
  void push(CatalogEntry entry);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* info(const std::string& label) const;

  std::vector<std::string> ring_labels() const;
  std::vector<std::string> group_ring_labels() const;

  RingPtr ring(const std::string& label) const;
  const GroupRing& group_ring(const std::string& label) const;
  GroupPtr group(const std::string& name) const;

  /// Cached quotient by the Jacobson radical.
  const QuotientRing& mod_jacobson(const std::string& label) const;

 private:
  RingPtr build(const CatalogEntry& e) const;

  std::vector<CatalogEntry> entries_;
  mutable std::mutex lock_;
  mutable std::map<std::string, RingPtr> rings_;
  mutable std::map<std::string, GroupRing> group_rings_;
  mutable std::map<std::string, GroupPtr> groups_;
  mutable std::map<std::string, QuotientRing> mod_j_;
};

}  // namespace ringlab
