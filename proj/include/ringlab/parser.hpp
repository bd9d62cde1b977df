#pragma once

/**
 * @file parser.hpp
 * @brief The ring expression language of the CLI.
 *
 * Grammar (constructor names case-insensitive, 'x' is the infix
 * product):
 *
 *   expr    := primary ('x' primary)*
 *   primary := Z<n> | GF(p, k) | M<n>(expr) | T<n>(expr) | S<n>(expr)
 *            | Tskew<n>(expr, endo) | K(expr, s) | MF<n>(expr [,;] s)
 *            | TE(expr) | GR(expr, group) | Q(expr, g1, g2, ...)
 *            | '(' expr ')'
 *   group   := gatom ('x' gatom)* with gatom := C<n> | D<n> | Q8 | S3
 *   endo    := identity | frobenius
 *
 * print() emits the canonical form (single spaces around the product
 * 'x', comma-space separators); parse(print(e)) reproduces e.
 */

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + message),
        position(position) {}
  std::size_t position;
};

struct RingExpression;
using ExprPtr = std::shared_ptr<const RingExpression>;

struct RingExpression {
  enum class Kind {
    Zmod,
    GaloisFieldExpr,
    Product,
    Matrix,
    UpperTriangular,
    EqualDiagTriangular,
    SkewTriangular,
    FormalKs,
    FormalNs,
    TrivialExt,
    GroupRingExpr,
    Quotient,
  };
  Kind kind;
  std::vector<ExprPtr> children;
  std::uint64_t a = 0;  // modulus / p / dimension n
  std::uint64_t b = 0;  // k / s literal
  std::string endo;     // skew endomorphism name
  std::vector<std::string> group_atoms;
  std::vector<std::uint64_t> gens;  // quotient ideal generators

  bool operator==(const RingExpression& other) const;
};

ExprPtr parse(const std::string& text);
std::string print(const RingExpression& e);

/// Builds the ring. May throw ring_error / size_cap_error.
RingPtr evaluate(const RingExpression& e);

}  // namespace ringlab
