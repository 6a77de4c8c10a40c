#ifndef SYMORB_NUMERIC_HPP
#define SYMORB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "symorb/errors.hpp"

namespace symorb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rational>;
using IntVec = std::vector<Int>;

// Parses "a" or "a/b" with optional sign. Floating-point literals are
// rejected so exactness survives the CLI boundary.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& r);

Vec parse_rational_vector(const std::string& comma_separated);

Int factorial(unsigned n);

bool is_prime(unsigned n);

// Largest prime p <= n; requires n >= 2.
unsigned largest_prime_leq(unsigned n);

unsigned mul_order_mod(unsigned k, unsigned p);

// Smallest generator of (Z/p)^*.
unsigned primitive_root(unsigned p);

} // namespace symorb

#endif
