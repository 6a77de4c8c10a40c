#ifndef SYMORB_PERM_HPP
#define SYMORB_PERM_HPP

#include <string>
#include <vector>

#include "symorb/numeric.hpp"

namespace symorb {

// A bijection of {1..n}. The action on coordinate vectors follows the
// convention that the j-th coordinate of sigma(v) is v[sigma^{-1}(j)].
class Permutation {
public:
    explicit Permutation(std::vector<unsigned> image_one_indexed);

    static Permutation identity(unsigned n);
    // Cycle given as 1-indexed entries, e.g. {1,2,3} for (1 2 3).
    static Permutation from_cycle(unsigned n, const std::vector<unsigned>& cycle);
    static Permutation transposition(unsigned n, unsigned i, unsigned j);

    unsigned n() const { return static_cast<unsigned>(img_.size()); }
    unsigned apply(unsigned i) const { return img_[i - 1]; } // sigma(i)

    Permutation inverse() const;
    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

    // Multiset of cycle lengths, sorted descending.
    std::vector<unsigned> cycle_type() const;
    bool is_p_cycle() const;

    // Cycle notation, e.g. "(1 2)(3 4)"; identity prints as "()".
    std::string cycle_string() const;

    template <typename T>
    std::vector<T> act(const std::vector<T>& x) const {
        if (x.size() != img_.size()) throw DimensionMismatch("act: length mismatch");
        const Permutation inv = inverse();
        std::vector<T> out(x.size());
        for (unsigned j = 1; j <= n(); ++j) out[j - 1] = x[inv.apply(j) - 1];
        return out;
    }

private:
    std::vector<unsigned> img_; // img_[i-1] = sigma(i)
};

struct PermGroup {
    unsigned n;
    std::vector<Permutation> elements; // sorted
    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& g) const;
};

// Full coordinate-permutation orbit of v, sorted lexicographically.
// Entries must be pairwise distinct; n is capped at 8.
template <typename T>
std::vector<std::vector<T>> orbit(const std::vector<T>& v);

PermGroup subgroup_closure(const std::vector<Permutation>& gens, unsigned n);

// N_{S_p}(<pi>) for a p-cycle pi, built by explicit closure of {pi, tau}
// where tau conjugates pi to pi^k, k a generator of (Z/p)^*.
PermGroup normalizer_of_p_cycle(const Permutation& pi, unsigned p);

// Orbit sizes of multiplication-by-k on (Z/p) \ {0}, ascending.
std::vector<unsigned> rep_orbit_dims(unsigned p, unsigned k);

extern template std::vector<Vec> orbit<Rational>(const Vec&);
extern template std::vector<IntVec> orbit<Int>(const IntVec&);

} // namespace symorb

#endif
