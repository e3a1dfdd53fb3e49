#pragma once

#include <string_view>

#include "grt/lie.hpp"

namespace grt {

/// Parses a Lie expression:
///
///   expr     := term (('+' | '-') term)*
///   term     := (rational '*')? atom
///   atom     := IDENT | '[' expr ',' expr ']' | '(' expr ')'
///   rational := '-'? digits ('/' digits)?
///
/// The literal "0" denotes the zero element, so canonical output always
/// parses back. Throws ParseError (with byte offset) or
/// Error(UnknownGenerator).
LieElement parse_lie(std::string_view text, const AlphabetPtr& alphabet);

}  // namespace grt
