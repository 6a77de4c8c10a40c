#include "symorb/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symorb {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

IntVec canonical_normal_int(const IntVec& w) {
    Int g = 0;
    for (const auto& x : w) g = gcd_int(g, x);
    if (g == 0) throw ZeroNormal("zero normal vector");
    IntVec out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] / g;
    for (const auto& x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

IntVec canonical_normal(const Vec& w) {
    Int l = 1;
    for (const auto& x : w) {
        Int d = denominator(x);
        l = l / gcd_int(l, d) * d;
    }
    IntVec iw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        Rational scaled = w[i] * l;
        iw[i] = numerator(scaled);
    }
    return canonical_normal_int(iw);
}

Hyperplane make_hyperplane(const Vec& normal) {
    return Hyperplane{static_cast<unsigned>(normal.size()), canonical_normal(normal)};
}

Hyperplane make_hyperplane_int(const IntVec& normal) {
    return Hyperplane{static_cast<unsigned>(normal.size()), canonical_normal_int(normal)};
}

std::string Subspace::key() const {
    std::ostringstream os;
    for (const auto& row : rows) {
        for (const auto& x : row) os << rational_str(x) << ",";
        os << ";";
    }
    return os.str();
}

namespace {

int pivot_col(const Vec& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return static_cast<int>(j);
    return -1;
}

// Reduce x against RREF rows (in place); returns true if a nonzero
// remainder is left.
bool reduce_row(const Subspace& s, Vec& x) {
    for (const auto& row : s.rows) {
        int pc = pivot_col(row);
        if (x[pc] == 0) continue;
        Rational f = x[pc]; // row pivot is 1
        for (unsigned j = pc; j < s.n; ++j) x[j] -= f * row[j];
    }
    return pivot_col(x) >= 0;
}

void insert_row(Subspace& s, Vec x) {
    int pc = pivot_col(x);
    Rational inv = x[pc];
    for (auto& v : x) v /= inv;
    // eliminate the new pivot from existing rows, then insert in pivot order
    for (auto& row : s.rows) {
        if (row[pc] == 0) continue;
        Rational f = row[pc];
        for (unsigned j = pc; j < s.n; ++j) row[j] -= f * x[j];
    }
    auto it = std::upper_bound(s.rows.begin(), s.rows.end(), x,
                               [](const Vec& a, const Vec& b) {
                                   return pivot_col(a) < pivot_col(b);
                               });
    s.rows.insert(it, std::move(x));
}

} // namespace

Subspace span_of(const std::vector<Vec>& points) {
    Subspace s;
    if (points.empty()) return s;
    s.n = static_cast<unsigned>(points[0].size());
    for (const auto& pt : points) {
        if (pt.size() != s.n) throw DimensionMismatch("span_of: length mismatch");
        Vec x = pt;
        if (reduce_row(s, x)) insert_row(s, std::move(x));
    }
    return s;
}

bool subspace_contains(const Subspace& s, const Vec& x) {
    if (x.size() != s.n) throw DimensionMismatch("subspace_contains: length mismatch");
    Vec y = x;
    return !reduce_row(s, y);
}

std::optional<Subspace> subspace_extended(const Subspace& s, const Vec& x) {
    if (x.size() != s.n) throw DimensionMismatch("subspace_extended: length mismatch");
    Vec y = x;
    if (!reduce_row(s, y)) return std::nullopt;
    Subspace t = s;
    insert_row(t, std::move(y));
    return t;
}

Hyperplane normal_of(const Subspace& s) {
    if (s.dim() + 1 != s.n) throw SpanTooSmall("normal_of requires dim n-1");
    std::vector<bool> is_pivot(s.n, false);
    for (const auto& row : s.rows) is_pivot[pivot_col(row)] = true;
    unsigned free_col = 0;
    for (unsigned j = 0; j < s.n; ++j)
        if (!is_pivot[j]) free_col = j;
    Vec a(s.n, Rational(0));
    a[free_col] = 1;
    for (const auto& row : s.rows) a[pivot_col(row)] = -row[free_col];
    return make_hyperplane(a);
}

Hyperplane hyperplane_from(const std::vector<Vec>& points) {
    Subspace s = span_of(points);
    if (s.dim() == s.n) throw SpanFull("points span the whole space");
    if (s.dim() + 1 < s.n) throw SpanTooSmall("points span less than dim n-1");
    return normal_of(s);
}

std::uint64_t count_in_hyperplane(const Hyperplane& h, const std::vector<Vec>& pts) {
    std::uint64_t c = 0;
    for (const auto& x : pts) {
        if (x.size() != h.n) throw DimensionMismatch("count_in_hyperplane: length mismatch");
        Rational d = 0;
        for (unsigned j = 0; j < h.n; ++j) d += Rational(h.normal[j]) * x[j];
        if (d == 0) ++c;
    }
    return c;
}

Int dot_int(const IntVec& a, const IntVec& b) {
    Int d = 0;
    for (std::size_t j = 0; j < a.size(); ++j) d += a[j] * b[j];
    return d;
}

std::uint64_t count_in_hyperplane_int(const Hyperplane& h, const std::vector<IntVec>& pts) {
    std::uint64_t c = 0;
    for (const auto& x : pts) {
        if (x.size() != h.n) throw DimensionMismatch("count_in_hyperplane: length mismatch");
        if (dot_int(h.normal, x) == 0) ++c;
    }
    return c;
}

Rational elem_sym(unsigned k, const Vec& x) {
    const unsigned n = static_cast<unsigned>(x.size());
    if (k < 1 || k > n) throw IndexOutOfRange("elem_sym index out of range");
    // e[j] after processing each coordinate
    Vec e(k + 1, Rational(0));
    e[0] = 1;
    for (const auto& xi : x)
        for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * xi;
    return e[k];
}

NormalPartition normal_partition(const Hyperplane& h) {
    NormalPartition np;
    std::map<std::string, unsigned> index_of; // value string -> block index
    for (unsigned j = 1; j <= h.n; ++j) {
        const Int& val = h.normal[j - 1];
        std::string key = val.str();
        auto it = index_of.find(key);
        if (it == index_of.end()) {
            index_of.emplace(key, static_cast<unsigned>(np.blocks.size()));
            np.blocks.push_back({j});
            np.values.push_back(val);
        } else {
            np.blocks[it->second].push_back(j);
        }
    }
    np.m = static_cast<unsigned>(np.blocks[0].size());
    np.M = 0;
    for (unsigned J = 1; J < np.blocks.size(); ++J)
        if (np.blocks[J].size() < np.m) {
            np.m = static_cast<unsigned>(np.blocks[J].size());
            np.M = J;
        }
    return np;
}

} // namespace symorb
