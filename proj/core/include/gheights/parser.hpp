// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_PARSER_HPP
#define GHEIGHTS_PARSER_HPP

#include <string_view>

#include "gheights/polynomial.hpp"

namespace gh {

// Parses the expression grammar
//
//   expr     := ["-"] term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" uint)?
//   base     := rational | identifier | "(" expr ")"
//   rational := ["-"] uint ("/" uint)?
//
// over the given ring.  Multiplication is always explicit; "2x" is a
// syntax error.  Identifiers must name ring variables.  The leading
// minus binds to the whole first term, so "-x^2" is -(x^2); a minus
// directly attached to a number literal is part of the literal, so
// "(-3)^2" is 9.  Throws SyntaxError (with byte offset) on malformed
// input and UnknownVariableError for identifiers outside the ring.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

} // namespace gh

#endif
