#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kneser {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

BigInt factorial(int n);

/// "p/q" (or "p" for integers).
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// Rank over Q; the input is copied and reduced.
int rank(RationalMatrix m);
/// Basis of the right kernel {x : m x = 0}, in reduced form (one vector per free column).
std::vector<RationalVector> kernel(RationalMatrix m, std::size_t columns);
/// Solves m x = b; nullopt if inconsistent. Free variables are set to zero.
std::optional<RationalVector> solve(RationalMatrix m, RationalVector b);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity_matrix(std::size_t n);

}  // namespace kneser
