#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rainbow {

/// Exact rational with canonical sign and reduced form after every operation.
using Rational = mpq_class;

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);

/// Accepts "num/den" or a plain integer. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

} // namespace rainbow
