#pragma once

/**
 * @file cli.hpp
 * @brief Command-line entry point, callable in-process for tests.
 *
 * Verbs: classify, decompose, subsets, verify, catalog.
 * Exit codes: 0 success, 1 at least one verification FAIL,
 * 2 input errors (parse failure, element cap, bad flags).
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ringlab
