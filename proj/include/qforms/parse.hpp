#pragma once

// Text and JSON serialization for forms, points, lines and zero configurations.
//
// Grammar (round-trips bit-exactly with TernaryForm::str):
//   form  := term (('+'|'-') term)*          leading '-' allowed
//   term  := [coef]['*'] x^a ['*'] y^b ['*'] z^c   any factor may be absent
//   coef  := integer | integer '/' integer
// Whitespace is insignificant.  Exponent 1 and coefficient 1 may be omitted.

#include "qforms/form.hpp"

#include <stdexcept>
#include <string>

namespace qf {

/// Parse failure; `offset` is the byte position in the input.
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

TernaryForm parse_form(const std::string& text);

/// Parse "(a:b:c)" or "a,b,c" (rational entries) as a projective point.
ProjPoint parse_point(const std::string& text);
/// Same syntax; entries are the coefficients of the vanishing linear form.
ProjLine parse_line(const std::string& text);

std::string form_to_json(const TernaryForm& f);
TernaryForm form_from_json(const std::string& json_text);

}  // namespace qf
