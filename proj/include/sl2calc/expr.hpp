#pragma once

#include <string>

#include "sl2calc/sl2type.hpp"

namespace sl2calc {

/// Parses "Sp10", "O8", "SO7", "GL5". Group names embed the defining-space
/// size, so Sp and O take even sizes and SO odd ones. Whitespace-insensitive.
/// Throws Errc::parse_error with a position in the message.
GroupKind parse_group(const std::string& text);

/// Parses a full type expression GROUP "[" INT ("," INT)* "]", e.g.
/// "Sp10[7,2,2]". Parts may come in any order (the partition canonicalizes).
/// Structural problems raise Errc::parse_error; a well-formed expression
/// naming an invalid type propagates WrongTotal/BadParity from validation.
SL2Type parse_type_expr(const std::string& text);

/// Canonical rendering; parse_type_expr(render_type_expr(t)) == t.
std::string render_type_expr(const SL2Type& t);

}  // namespace sl2calc
