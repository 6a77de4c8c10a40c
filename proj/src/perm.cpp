#include "symorb/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symorb {

Permutation::Permutation(std::vector<unsigned> image_one_indexed)
    : img_(std::move(image_one_indexed)) {
    std::vector<bool> seen(img_.size(), false);
    for (unsigned v : img_) {
        if (v < 1 || v > img_.size() || seen[v - 1])
            throw InvalidInstance("image is not a bijection of {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(unsigned n) {
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycle(unsigned n, const std::vector<unsigned>& cycle) {
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = i + 1;
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        unsigned from = cycle[t];
        unsigned to = cycle[(t + 1) % cycle.size()];
        if (from < 1 || from > n) throw IndexOutOfRange("cycle entry out of range");
        img[from - 1] = to;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(unsigned n, unsigned i, unsigned j) {
    return from_cycle(n, {i, j});
}

Permutation Permutation::inverse() const {
    std::vector<unsigned> img(img_.size());
    for (unsigned i = 1; i <= n(); ++i) img[img_[i - 1] - 1] = i;
    return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw DimensionMismatch("composing permutations of different degree");
    std::vector<unsigned> img(a.n());
    for (unsigned i = 1; i <= a.n(); ++i) img[i - 1] = a.apply(b.apply(i));
    return Permutation(std::move(img));
}

std::vector<unsigned> Permutation::cycle_type() const {
    std::vector<bool> seen(n(), false);
    std::vector<unsigned> type;
    for (unsigned i = 1; i <= n(); ++i) {
        if (seen[i - 1]) continue;
        unsigned len = 0, j = i;
        do {
            seen[j - 1] = true;
            j = apply(j);
            ++len;
        } while (j != i);
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

bool Permutation::is_p_cycle() const {
    auto t = cycle_type();
    return t.size() == 1 && t[0] == n();
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(n(), false);
    std::ostringstream os;
    bool any = false;
    for (unsigned i = 1; i <= n(); ++i) {
        if (seen[i - 1] || apply(i) == i) {
            seen[i - 1] = true;
            continue;
        }
        any = true;
        os << "(";
        unsigned j = i;
        bool first = true;
        do {
            if (!first) os << " ";
            first = false;
            os << j;
            seen[j - 1] = true;
            j = apply(j);
        } while (j != i);
        os << ")";
    }
    if (!any) return "()";
    return os.str();
}

bool PermGroup::contains(const Permutation& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

template <typename T>
std::vector<std::vector<T>> orbit(const std::vector<T>& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    if (n > 8) throw ExplicitLimitExceeded("orbit materialization is limited to n <= 8");
    std::vector<T> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) throw NotDistinct("vector entries are not distinct");
    std::vector<std::vector<T>> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

template std::vector<Vec> orbit<Rational>(const Vec&);
template std::vector<IntVec> orbit<Int>(const IntVec&);

PermGroup subgroup_closure(const std::vector<Permutation>& gens, unsigned n) {
    for (const auto& g : gens)
        if (g.n() != n) throw DimensionMismatch("generator degree mismatch");
    std::set<Permutation> elems;
    std::vector<Permutation> frontier;
    elems.insert(Permutation::identity(n));
    frontier.push_back(Permutation::identity(n));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                Permutation gh = g * h;
                if (elems.insert(gh).second) next.push_back(std::move(gh));
            }
        frontier = std::move(next);
    }
    PermGroup G;
    G.n = n;
    G.elements.assign(elems.begin(), elems.end());
    return G;
}

PermGroup normalizer_of_p_cycle(const Permutation& pi, unsigned p) {
    if (!is_prime(p)) throw NotPrime("p must be prime");
    if (pi.n() != p || !pi.is_p_cycle()) throw NotPCycle("expected a p-cycle in S_p");
    // Walk the cycle: s[t+1] = pi(s[t]). tau(s[t]) = s[k t mod p] conjugates
    // pi to pi^k.
    std::vector<unsigned> s(p);
    s[0] = 1;
    for (unsigned t = 1; t < p; ++t) s[t] = pi.apply(s[t - 1]);
    const unsigned k = primitive_root(p);
    std::vector<unsigned> img(p);
    for (unsigned t = 0; t < p; ++t)
        img[s[t] - 1] = s[(static_cast<unsigned long long>(k) * t) % p];
    Permutation tau{std::move(img)};
    PermGroup G = subgroup_closure({pi, tau}, p);
    if (G.order() != static_cast<std::size_t>(p) * (p - 1))
        throw Error("normalizer closure has unexpected order");
    return G;
}

std::vector<unsigned> rep_orbit_dims(unsigned p, unsigned k) {
    if (!is_prime(p)) throw NotPrime("p must be prime");
    k %= p;
    if (k == 0) throw NotUnit("k must be a unit mod p");
    std::vector<bool> seen(p, false);
    std::vector<unsigned> dims;
    for (unsigned r = 1; r < p; ++r) {
        if (seen[r]) continue;
        unsigned len = 0, x = r;
        do {
            seen[x] = true;
            x = (x * k) % p;
            ++len;
        } while (x != r);
        dims.push_back(len);
    }
    std::sort(dims.begin(), dims.end());
    return dims;
}

} // namespace symorb
