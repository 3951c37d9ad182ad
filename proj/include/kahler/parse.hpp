#pragma once

#include <string>
#include <vector>

#include "kahler/poly.hpp"

namespace kahler {

/// Parse the polynomial grammar, e.g. "3/2*x^2*y - y + 1".  Multiplication
/// may be explicit or by juxtaposition ("2x"); '/' is only allowed between
/// integer literals; '^' takes a nonnegative integer exponent.  Unknown
/// variables and malformed input raise ParseError with a 1-based position.
Poly parse_poly(const std::string& text, const ContextPtr& ctx);

/// Result of parsing an `algebra NAME { vars: ...; relations: ...; }` block.
struct ParsedAlgebra {
  std::string name;
  ContextPtr ctx;
  std::vector<Poly> relations;
};

/// Parse an algebra declaration.  The monomial order and field come from the
/// session, not the file.  The relations clause may be absent or empty.
ParsedAlgebra parse_algebra_decl(const std::string& text, MonomialOrder order,
                                 const Field& field);

/// Result of parsing a `module NAME over ALG { rank: r; relations: ...; }`
/// block.  Rows are tuples of polynomials over `ctx`, each of length rank.
struct ParsedModule {
  std::string name;
  std::string over;
  std::size_t rank = 0;
  std::vector<std::vector<Poly>> rows;
};

ParsedModule parse_module_decl(const std::string& text, const ContextPtr& ctx);

/// Parse a row "(p1, p2, ...)" of polynomials over ctx; used by the CLI for
/// --images style arguments.  A bare polynomial (no parentheses) is accepted
/// as a 1-tuple.
std::vector<Poly> parse_poly_tuple(const std::string& text,
                                   const ContextPtr& ctx);

}  // namespace kahler
