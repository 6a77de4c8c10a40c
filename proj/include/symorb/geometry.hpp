#ifndef SYMORB_GEOMETRY_HPP
#define SYMORB_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symorb/numeric.hpp"

namespace symorb {

// {x : normal . x = 0} with a canonical primitive integer normal:
// gcd of entries 1, first nonzero entry positive.
struct Hyperplane {
    unsigned n;
    IntVec normal;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.n == b.n && a.normal == b.normal;
    }
};

// Canonicalize a nonzero rational (or integer) normal vector.
IntVec canonical_normal(const Vec& w);
IntVec canonical_normal_int(const IntVec& w);

Hyperplane make_hyperplane(const Vec& normal);
Hyperplane make_hyperplane_int(const IntVec& normal);

// A linear subspace kept in reduced row-echelon form; RREF uniqueness makes
// the row matrix a canonical dedup key.
struct Subspace {
    unsigned n = 0;
    std::vector<Vec> rows; // RREF, pivot columns strictly increasing

    unsigned dim() const { return static_cast<unsigned>(rows.size()); }
    std::string key() const;
};

// Span of the given points; zero vectors among the inputs are ignored.
Subspace span_of(const std::vector<Vec>& points);

bool subspace_contains(const Subspace& s, const Vec& x);

// Span extended by one vector; nullopt if x is already in the span.
std::optional<Subspace> subspace_extended(const Subspace& s, const Vec& x);

// Normal of a dim n-1 subspace (the unique orthogonal line, canonicalized).
Hyperplane normal_of(const Subspace& s);

// Hyperplane spanned by the points; SpanTooSmall / SpanFull on bad rank.
Hyperplane hyperplane_from(const std::vector<Vec>& points);

std::uint64_t count_in_hyperplane(const Hyperplane& h, const std::vector<Vec>& pts);
std::uint64_t count_in_hyperplane_int(const Hyperplane& h, const std::vector<IntVec>& pts);

Int dot_int(const IntVec& a, const IntVec& b);

// k-th elementary symmetric polynomial at x, 1 <= k <= n.
Rational elem_sym(unsigned k, const Vec& x);

// Blocks of equal normal entries. m = minimal block size, M = index (into
// blocks) of the first block attaining m. Blocks ordered by first element.
struct NormalPartition {
    std::vector<std::vector<unsigned>> blocks; // 1-indexed coordinates
    IntVec values;                             // values[J] = entry on blocks[J]
    unsigned m = 0;
    unsigned M = 0;
};

NormalPartition normal_partition(const Hyperplane& h);

} // namespace symorb

#endif
