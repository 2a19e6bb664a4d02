#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace mgo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "n" for integers, "n/d" otherwise. Denominator is always positive.
std::string rational_to_string(const Rational& r);

// Accepts "n" or "n/d" with optional leading sign. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Scales a nonzero vector so entries are coprime integers and the first
// nonzero entry is positive. Zero vectors are returned unchanged.
void normalize_integer_vector(std::vector<Rational>& v);

}  // namespace mgo
