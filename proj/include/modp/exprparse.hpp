#pragma once

#include <string>

#include "modp/hecke.hpp"
#include "modp/presalg.hpp"

namespace modp::exprparse {

/// Result of evaluating a module expression: the shared Hecke context and
/// the direct sum of the parsed atoms.
struct ParsedModules {
    hecke::HeckeCtx ctx;
    presalg::AlgebraModule mod;
    std::string canonical;
};

/// Grammar (whitespace-insensitive):
///   expr   := term { '+' term }
///   term   := 'M' '(' int ',' int ',' eta ')'
///           | 'E' '(' int ',' int ';' int ')'
///           | 'I' '(' ( '1' | 'Sp' ) ')'
///   eta    := '1' | 'mu-1' | 'w' [ '^' int ] [ '*' 'mu-1' ]
/// All atoms must share the central character. Parse failures raise
/// ParseError naming the offending token and its position.
ParsedModules parse_module_expr(const FieldPtr& F, const std::string& expr);

/// eta token alone, e.g. "w^2*mu-1".
hecke::SmoothChar parse_eta(const FieldPtr& F, const std::string& token);

} // namespace modp::exprparse
