#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetalab {

using Rational = boost::multiprecision::cpp_rational;

// Exact even-index Bernoulli numbers B_2, B_4, ..., B_{2M}.  M <= 60.
std::vector<Rational> bernoulli_numbers(int M);

// Same values rendered "p/q" (for table dumps and tests).
std::vector<std::string> bernoulli_strings(int M);

// B_{2j} / (2j)! for j = 1..M as doubles; slice of an immutable table that is
// initialized once at first use.
const double* bernoulli_over_factorial(int M);

} // namespace zetalab
