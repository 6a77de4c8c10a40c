#ifndef SYMORB_CONSTRUCTIONS_HPP
#define SYMORB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <utility>

#include "symorb/geometry.hpp"

namespace symorb {

// The hyperplane with normal (c_n, ..., c_n, -sum_{i<n} c_i); it contains
// every orbit point whose last coordinate equals c_n, hence at least (n-1)!
// of them.
Hyperplane fixed_last_hyperplane(const Vec& v);

// For v = (1..n), the hyperplane with normal
// (-sum_{i=2}^{n-1} i, same, 1+n, ..., 1+n): it contains exactly the orbit
// points whose first two coordinates sum to 1+n.
std::pair<Vec, Hyperplane> pair_sum_hyperplane(unsigned n);

// Number of orbit points of v whose first two coordinates sum to s,
// computed combinatorially as (#ordered pairs with v_i + v_j = s) * (n-2)!
// and cross-checked by enumeration when n <= 6.
Int count_pair_sum(const Vec& v, const Rational& s);

} // namespace symorb

#endif
