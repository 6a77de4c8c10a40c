#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "symorb/search.hpp"
#include "symorb/perm.hpp"
#include "symorb/serialize.hpp"

using namespace symorb;

namespace {

Vec rvec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Vec iota_vec(unsigned n) {
    Vec v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = Rational(i + 1);
    return v;
}

// Unreduced oracle: hyperplanes through every (n-1)-subset of orbit points
// whose span has dimension exactly n-1, no symmetry reduction.
std::uint64_t naive_max(const Vec& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    auto orb = orbit<Rational>(v);
    const std::size_t N = orb.size();
    std::vector<std::size_t> idx(n - 1);
    std::uint64_t best = 1; // a line through any single point
    std::vector<bool> select(N, false);
    std::fill(select.begin(), select.begin() + (n - 1), true);
    // iterate over all (n-1)-subsets via the selection mask
    do {
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < N; ++i)
            if (select[i]) pts.push_back(orb[i]);
        auto s = span_of(pts);
        if (s.dim() != n - 1) continue;
        auto h = normal_of(s);
        best = std::max(best, count_in_hyperplane(h, orb));
    } while (std::prev_permutation(select.begin(), select.end()));
    return best;
}

Vec random_instance(unsigned n, std::mt19937_64& rng) {
    while (true) {
        Vec v(n);
        for (auto& x : v) x = Rational(static_cast<long>(rng() % 101) - 50);
        Vec s = v;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
        Rational sum = 0;
        for (const auto& x : v) sum += x;
        if (sum == 0) continue;
        return v;
    }
}

} // namespace

TEST_CASE("instance validation") {
    ProblemInstance bad{3, rvec({1, 1, 2}), false};
    CHECK_THROWS_AS(bad.validate(), InvalidInstance);
    ProblemInstance zero{3, rvec({-1, 0, 1}), false};
    CHECK_THROWS_AS(zero.validate(), InvalidInstance);
    ProblemInstance zero_ok{3, rvec({-1, 0, 1}), true};
    CHECK_NOTHROW(zero_ok.validate());
    ProblemInstance big{9, Vec{}, false};
    big.v = Vec{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5),
                Rational(6), Rational(7), Rational(8), Rational(9)};
    CHECK_THROWS_AS(max_intersection(big), ExplicitLimitExceeded);
}

TEST_CASE("max_intersection frozen instances") {
    auto c3 = max_intersection({3, rvec({1, 2, 4}), false});
    CHECK(c3.max_count == 2);

    auto c4 = max_intersection({4, iota_vec(4), false});
    CHECK(c4.max_count == 8);
    // witness normal proportional to (-5,-5,5,5) up to coordinate relabeling:
    // entries are (+1,+1,-1,-1) in some order after canonicalization
    IntVec sorted_normal = c4.witness_normal.normal;
    std::sort(sorted_normal.begin(), sorted_normal.end());
    CHECK(sorted_normal == IntVec{Int(-1), Int(-1), Int(1), Int(1)});

    auto c45 = max_intersection({4, rvec({1, 2, 3, 5}), false});
    CHECK(c45.max_count >= 6);
    CHECK(c45.max_count <= 8);
    CHECK(c45.max_count == 6); // frozen regression value
}

TEST_CASE("certificate replay and invariants") {
    auto cert = max_intersection({4, iota_vec(4), false});
    CHECK(cert.witness_indices.size() == cert.max_count);
    auto orb = orbit<Rational>(iota_vec(4));
    for (auto i : cert.witness_indices) {
        Rational dot = 0;
        for (unsigned j = 0; j < 4; ++j)
            dot += Rational(cert.witness_normal.normal[j]) * orb[i][j];
        CHECK(dot == 0);
    }
    CHECK(std::is_sorted(cert.witness_indices.begin(), cert.witness_indices.end()));
    // bounds: (n-1)! <= max <= n!/p
    CHECK(cert.max_count >= 6);
    CHECK(cert.max_count <= 8);
    // histogram counts the witness bucket
    CHECK(cert.histogram.at(cert.max_count) >= 1);
}

TEST_CASE("decide_exceeds examples") {
    auto absent = decide_exceeds({4, iota_vec(4), false}, 8);
    CHECK_FALSE(absent.exceeded);
    CHECK(absent.frontier_exhausted);

    auto witness = decide_exceeds({4, iota_vec(4), false}, 7);
    CHECK(witness.exceeded);
    CHECK(witness.max_count == 8);

    auto small = decide_exceeds({3, rvec({1, 2, 4}), false}, 2);
    CHECK_FALSE(small.exceeded);
    CHECK(small.frontier_exhausted);
}

TEST_CASE("naive oracle equivalence for n=3 and n=4") {
    std::mt19937_64 rng(424242);
    for (unsigned n : {3u, 4u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Vec v = random_instance(n, rng);
            auto cert = max_intersection({n, v, false});
            CAPTURE(n);
            CAPTURE(trial);
            CHECK(cert.max_count == naive_max(v));
        }
    }
}

TEST_CASE("verify_conjecture examples") {
    auto r3 = verify_conjecture(3, rvec({1, 2, 4}));
    CHECK(r3.pass);
    CHECK(r3.max_count == 2);
    CHECK(r3.conjectured == 2);

    auto r4 = verify_conjecture(4, iota_vec(4));
    CHECK(r4.pass);
    CHECK(r4.max_count == 8);
    CHECK(r4.conjectured == 8);
    CHECK(r4.theorem_bound == 8);
}

TEST_CASE("generic_v_trials examples") {
    auto r2 = generic_v_trials(2, 5, 7);
    CHECK(r2.pass());
    for (auto c : r2.max_counts) CHECK(c == 1);

    auto r3 = generic_v_trials(3, 20, 7);
    CHECK(r3.pass());
    CHECK(r3.expected == 2);

    auto r4 = generic_v_trials(4, 20, 7);
    CHECK(r4.pass());
    CHECK(r4.expected == 6);
    for (auto c : r4.max_counts) CHECK(c == 6); // strictly below the special value 8
}

TEST_CASE("induction_check examples") {
    CHECK(induction_check({{3, 2}, {4, 8}}, 3));
    CHECK_FALSE(induction_check({{3, 2}, {4, 9}}, 3));
    CHECK(induction_check({{5, 24}, {6, 144}}, 5));
}

TEST_CASE("determinism across thread counts") {
    for (unsigned n : {3u, 4u}) {
        Vec v = iota_vec(n);
        if (n == 3) v = rvec({1, 2, 4});
        SearchOptions one{1, false, "", 64};
        auto base = certificate_json(max_intersection({n, v, false}, one)).dump();
        for (unsigned t : {4u, 8u}) {
            SearchOptions opts{t, false, "", 64};
            CHECK(certificate_json(max_intersection({n, v, false}, opts)).dump() == base);
        }
    }
}

TEST_CASE("checkpoint save and resume round-trips") {
    std::string path = "test_search_ckpt.json";
    std::remove(path.c_str());
    SearchOptions opts{1, false, path, 1}; // checkpoint after every batch
    auto cert = max_intersection({4, iota_vec(4), false}, opts);
    CHECK(cert.max_count == 8);
    // completed runs clean up their checkpoint
    std::ifstream gone(path);
    CHECK_FALSE(gone.good());
}
