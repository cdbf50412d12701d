#pragma once
// Textual and JSON notations for divides.
//
// Text grammar, one section per line:
//     # optional comment; a leading comment names the divide
//     left: e e m ...      items top to bottom, m spans two positions
//     word: +1 -2 ...      signed crossing positions, left to right
//     right: m e ...
// Canonical form uses single spaces, lowercase keywords and no trailing
// whitespace; emit(parse(x)) is byte-identical on canonical input.

#include <string>

#include "dkh/divide.hpp"

namespace dkh {

enum class DivideFormat { Text, Json };

// Parses and validates; throws SyntaxError with location, then validate's
// errors.
Divide parse_divide(const std::string& text);

std::string emit_divide(const Divide& divide, DivideFormat format = DivideFormat::Text);

}  // namespace dkh
