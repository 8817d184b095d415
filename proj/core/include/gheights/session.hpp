// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef GHEIGHTS_SESSION_HPP
#define GHEIGHTS_SESSION_HPP

#include <map>
#include <string>

#include "gheights/free_module.hpp"
#include "gheights/ideal.hpp"
#include "gheights/matrix.hpp"
#include "gheights/module_tools.hpp"
#include "gheights/polynomial.hpp"
#include "gheights/report.hpp"

namespace gh {

// All named objects of one parsed session file.  Lookups throw
// SessionError naming the missing object.
struct SessionDocument {
    RingPtr ring;
    std::map<std::string, Polynomial> polys;
    std::map<std::string, PolyMatrix> matrices;
    std::map<std::string, FreeModuleElement> vectors;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, PrimeWitness> primes;
    std::map<std::string, EquidimCertificate> certificates;

    const Polynomial& poly(const std::string& name) const;
    const PolyMatrix& matrix(const std::string& name) const;
    const FreeModuleElement& vector(const std::string& name) const;
    const Ideal& ideal(const std::string& name) const;
    const PrimeWitness& prime(const std::string& name) const;
    const EquidimCertificate& certificate(const std::string& name) const;
};

// Parses the session text format:
//
//   - UTF-8; full-line comments start with '#'; blank lines ignored.
//   - Sections open with "[type NAME]"; keys are "key = value" lines.
//   - "[ring]" must be the first section and appear exactly once.
//     Keys: vars (comma-separated names, required), field ("Q" or
//     "Fp <p>", default Q), order ("grevlex" or "lex", default grevlex).
//   - "[poly NAME]": expr = <expression>.
//   - "[matrix NAME]": one "row = e1; e2; ..." line per row; optional
//     "rows ="/"cols =" keys, required for a zero-row or zero-column
//     shape and otherwise checked against the row lines.
//   - "[vector NAME]": entries = e1; e2; ...
//   - "[ideal NAME]": zero or more "gen =" lines (none = zero ideal).
//   - "[prime NAME]": "gen =" lines plus asserted = true|false
//     (default false) and label = <text> (default NAME).
//   - "[certificate NAME]": kind = user_asserted (the only kind a
//     session may supply; verified kinds are computed, not declared),
//     note = <text> optional.
//
// Section names are globally unique.  Unknown section types or keys,
// duplicate single-valued keys, and malformed values are SessionErrors
// carrying the section and line.  Expression errors are wrapped the
// same way.
SessionDocument parse_session_text(const std::string& text);

// Reads the file and delegates to parse_session_text; errors are
// prefixed with the path.
SessionDocument parse_session_file(const std::string& path);

} // namespace gh

#endif
