#pragma once

/**
 * @file harness.hpp
 * @brief Registry of executable checks over the catalog, one per
 *        statement, with a machine-readable report.
 *
 * Biconditional statements are split into .fwd and .rev entries so a
 * converse with its own side conditions gets its own hypothesis
 * filter. A check with no applicable instance reports VACUOUS, never
 * PASS. Reports are deterministic; the canonical JSON form carries no
 * timing.
 */

#include <functional>
#include <string>
#include <vector>

#include "ringlab/catalog.hpp"

namespace ringlab {

struct InstanceResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

enum class CheckStatus { Pass, Fail, Vacuous };

struct CheckResult {
  std::string id;
  std::string where;        // statement location, e.g. "Proposition 2.11"
  std::string anchor;       // short formula or phrase identifying it
  std::string description;
  std::vector<InstanceResult> instances;
  double wall_ms = 0.0;

  CheckStatus status() const;
};

std::string to_string(CheckStatus s);

class Harness {
 public:
  Harness();

  std::vector<std::string> check_ids() const;
  bool has_check(const std::string& id) const;

  CheckResult run(const std::string& id, const Catalog& cat) const;
  std::vector<CheckResult> run_all(const Catalog& cat) const;

  /// Runs every check whose id equals or starts with one of the given
  /// prefixes (so "Cor-2.17" selects both directions). Throws
  /// ring_error for a selector matching nothing.
  std::vector<CheckResult> run_selected(const std::vector<std::string>& ids,
                                        const Catalog& cat) const;

 private:
  struct Entry {
    std::string id, where, anchor, description;
    std::function<std::vector<InstanceResult>(const Catalog&)> fn;
  };
  void add(std::string id, std::string where, std::string anchor,
           std::string description,
           std::function<std::vector<InstanceResult>(const Catalog&)> fn);
  CheckResult run_entry(const Entry& e, const Catalog& cat) const;

  std::vector<Entry> entries_;
};

std::string render_report_table(const std::vector<CheckResult>& results);

/// Canonical machine report; byte-stable across runs (no timing unless
/// include_timing is set).
std::string render_report_json(const std::vector<CheckResult>& results,
                               bool include_timing = false);

}  // namespace ringlab
