#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace diored {

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
std::string rational_to_string(const mpq_class& value);

// Accepts the canonical form with optional leading '-'. ParseError on junk.
mpq_class rational_from_string(std::string_view text);

bool is_integer(const mpq_class& value);

}  // namespace diored
