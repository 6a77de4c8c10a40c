#include "symorb/constructions.hpp"

#include <algorithm>

#include "symorb/perm.hpp"

namespace symorb {

Hyperplane fixed_last_hyperplane(const Vec& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    if (n < 2) throw InvalidInstance("need n >= 2");
    Vec sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotDistinct("entries are not distinct");
    Vec normal(n, v[n - 1]);
    Rational head = 0;
    for (unsigned i = 0; i + 1 < n; ++i) head += v[i];
    normal[n - 1] = -head;
    return make_hyperplane(normal); // throws ZeroNormal if degenerate
}

std::pair<Vec, Hyperplane> pair_sum_hyperplane(unsigned n) {
    if (n < 3) throw InvalidInstance("pair-sum construction needs n >= 3");
    Vec v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = Rational(i + 1);
    Rational s = 0;
    for (unsigned i = 2; i <= n - 1; ++i) s += i;
    Vec normal(n, Rational(1 + n));
    normal[0] = -s;
    normal[1] = -s;
    return {std::move(v), make_hyperplane(normal)};
}

Int count_pair_sum(const Vec& v, const Rational& s) {
    const unsigned n = static_cast<unsigned>(v.size());
    Vec sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotDistinct("entries are not distinct");
    Int pairs = 0;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j && v[i] + v[j] == s) ++pairs;
    Int result = pairs * factorial(n - 2);
    if (n <= 6) {
        Int enumerated = 0;
        for (const auto& pt : orbit(v))
            if (pt[0] + pt[1] == s) ++enumerated;
        if (enumerated != result)
            throw Error("pair-sum count mismatch between formula and enumeration");
    }
    return result;
}

} // namespace symorb
