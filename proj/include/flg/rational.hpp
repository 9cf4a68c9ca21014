// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace flg {

// Exact costs and weights. 64-bit terms are plenty at desk scale.
using Rational = boost::rational<std::int64_t>;

// Accepts "p", "p/q" and "-p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

}  // namespace flg
