// Acceptance suite: one pass/fail line per criterion. Criterion 4 (the
// long-running n=6 decision run) is skipped unless SYMORB_ACCEPT_LONG=1.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "symorb/constructions.hpp"
#include "symorb/lemmas.hpp"
#include "symorb/perm.hpp"
#include "symorb/search.hpp"
#include "symorb/serialize.hpp"

using namespace symorb;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok) {
    std::cout << "criterion " << idx << " [" << (ok ? "PASS" : "FAIL") << "] " << what
              << std::endl;
    if (!ok) ++failures;
}

void report_skip(int idx, const std::string& what) {
    std::cout << "criterion " << idx << " [SKIP] " << what << std::endl;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Vec iota_vec(unsigned n) {
    Vec v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = Rational(i + 1);
    return v;
}

Vec random_instance(unsigned n, std::mt19937_64& rng) {
    for (;;) {
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

std::uint64_t naive_max(const Vec& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    auto orb = orbit<Rational>(v);
    const std::size_t N = orb.size();
    std::uint64_t best = 1;
    std::vector<bool> select(N, false);
    std::fill(select.begin(), select.begin() + (n - 1), true);
    do {
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < N; ++i)
            if (select[i]) pts.push_back(orb[i]);
        auto s = span_of(pts);
        if (s.dim() != n - 1) continue;
        best = std::max(best, count_in_hyperplane(normal_of(s), orb));
    } while (std::prev_permutation(select.begin(), select.end()));
    return best;
}

void criterion1() {
    auto t0 = Clock::now();
    bool ok = max_intersection({3, Vec{Rational(1), Rational(2), Rational(4)}, false})
                      .max_count == 2 &&
              seconds_since(t0) < 1.0;
    std::mt19937_64 rng(3001);
    double worst = 0;
    for (int t = 0; ok && t < 20; ++t) {
        Vec v = random_instance(3, rng);
        auto ti = Clock::now();
        ok = max_intersection({3, v, false}).max_count == 2;
        worst = std::max(worst, seconds_since(ti));
    }
    report(1, "n=3: v=(1,2,4) and 20 random v all give max 2 = 2! under 1 s each",
           ok && worst < 1.0);
}

void criterion2() {
    auto t0 = Clock::now();
    auto cert = max_intersection({4, iota_vec(4), false});
    double dt = seconds_since(t0);
    IntVec sorted_normal = cert.witness_normal.normal;
    std::sort(sorted_normal.begin(), sorted_normal.end());
    // proportional to (-5,-5,5,5) up to coordinate relabeling: the canonical
    // primitive normal has entries {-1,-1,1,1}
    bool pattern = sorted_normal == IntVec{Int(-1), Int(-1), Int(1), Int(1)};
    report(2, "n=4: max 8 = n(n-2)! with pair-sum witness normal, under 10 s",
           cert.max_count == 8 && pattern && dt < 10.0);
}

void criterion3() {
    auto t0 = Clock::now();
    auto cert = max_intersection({5, iota_vec(5), false});
    double dt = seconds_since(t0);
    report(3, "n=5: max 24 = 4!, under 10 min", cert.max_count == 24 && dt < 600.0);
}

void criterion4() {
    const char* flag = std::getenv("SYMORB_ACCEPT_LONG");
    if (flag == nullptr || std::string(flag) != "1") {
        report_skip(4, "n=6 decision run (set SYMORB_ACCEPT_LONG=1 to enable)");
        return;
    }
    SearchOptions opts;
    opts.long_running = true;
    opts.threads = 8;
    opts.checkpoint_path = "acceptance_n6.ckpt.json";
    auto cert = decide_exceeds({6, iota_vec(6), false}, 144, opts);
    auto [v6, h6] = pair_sum_hyperplane(6);
    bool attained = count_in_hyperplane(h6, orbit<Rational>(v6)) == 144;
    report(4, "n=6: no hyperplane exceeds 144 = 6!/5 and the pair-sum witness attains it",
           !cert.exceeded && cert.frontier_exhausted && attained);
}

void criterion5() {
    bool ok = true;
    for (unsigned n : {3u, 4u, 5u}) {
        auto rep = generic_v_trials(n, 20, 5005);
        ok = ok && rep.pass();
        if (n == 4)
            for (auto c : rep.max_counts) ok = ok && c == 6; // strictly below 8
    }
    report(5, "generic v trials: 20 random v per n in {3,4,5} all give (n-1)!", ok);
}

void criterion6() {
    bool ok = induction_check({{3, 2}, {4, 8}}, 3) &&
              induction_check({{5, 24}, {6, 144}}, 5);
    report(6, "induction step holds on {3:2,4:8} with k=3 and {5:24,6:144} with k=5", ok);
}

void criterion7() {
    std::mt19937_64 rng(7007);
    bool ok = true;
    for (unsigned n : {3u, 4u})
        for (int t = 0; ok && t < 10; ++t) {
            Vec v = random_instance(n, rng);
            ok = max_intersection({n, v, false}).max_count == naive_max(v);
        }
    report(7, "search agrees with the unreduced oracle on 10 random v for n=3 and n=4", ok);
}

void criterion8() {
    auto t0 = Clock::now();
    bool ok = true;
    for (unsigned p : {5u, 7u, 11u, 13u}) ok = ok && check_four_term_nonvanishing(p).pass();
    for (unsigned p : {5u, 7u}) ok = ok && check_poly1(p).pass();
    for (unsigned p : {5u, 7u, 11u, 13u}) ok = ok && check_poly2(p).pass();
    ok = ok && check_ijkl_dichotomy(7).pass();
    for (unsigned p : {11u, 13u}) ok = ok && check_ijkl_dichotomy(p, 10000, 8008).pass();
    for (unsigned p : {7u, 11u, 13u}) ok = ok && check_f_injective_sweep(p).pass();
    ok = ok && rep_orbit_dims(7, 2) == std::vector<unsigned>{3, 3};
    ok = ok && rep_orbit_dims(7, 3) == std::vector<unsigned>{6};
    ok = ok && rep_orbit_dims(7, 6) == std::vector<unsigned>{2, 2, 2};
    const std::pair<unsigned, unsigned> params[] = {{7, 2}, {11, 2}, {11, 3}, {13, 2}, {13, 3}};
    for (auto [p, m] : params) ok = ok && graph_degree_sweep(p, m, 500, 8008).pass();
    double dt = seconds_since(t0);
    report(8, "all lemma sweeps pass in under 60 s total", ok && dt < 60.0);
}

void criterion9() {
    bool ok = true;
    const std::pair<unsigned, Vec> instances[] = {
        {3, Vec{Rational(1), Rational(2), Rational(4)}},
        {4, iota_vec(4)},
        {5, iota_vec(5)},
    };
    for (const auto& [n, v] : instances) {
        SearchOptions one;
        one.threads = 1;
        auto base = certificate_json(max_intersection({n, v, false}, one)).dump();
        for (unsigned t : {4u, 8u}) {
            SearchOptions opts;
            opts.threads = t;
            ok = ok && certificate_json(max_intersection({n, v, false}, opts)).dump() == base;
        }
    }
    report(9, "byte-identical certificates at 1, 4, and 8 threads for n=3,4,5", ok);
}

Permutation random_perm(unsigned n, std::mt19937_64& rng) {
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

void criterion10() {
    std::mt19937_64 rng(10010);
    auto random_vec = [&](unsigned n) {
        Vec v(n);
        for (auto& x : v) x = Rational(static_cast<long>(rng() % 201) - 100);
        return v;
    };
    auto random_distinct = [&](unsigned n) {
        for (;;) {
            Vec v = random_vec(n);
            Vec s = v;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) == s.end()) return v;
        }
    };
    bool ok = true;

    // equivariance, >= 1000 cases
    for (unsigned n : {3u, 4u}) {
        auto orb = orbit<Rational>(random_distinct(n));
        for (int t = 0; ok && t < 500; ++t) {
            Vec w = random_vec(n);
            if (std::all_of(w.begin(), w.end(), [](const Rational& r) { return r == 0; }))
                continue;
            auto h = make_hyperplane(w);
            auto s = random_perm(n, rng);
            auto moved = s.act(std::vector<Int>(h.normal));
            ok = count_in_hyperplane(make_hyperplane_int(moved), orb) ==
                 count_in_hyperplane(h, orb);
        }
    }

    // e_k invariance, >= 1000 cases
    for (int t = 0; ok && t < 1000; ++t) {
        unsigned n = 2 + rng() % 5;
        Vec x = random_vec(n);
        auto s = random_perm(n, rng);
        unsigned k = 1 + rng() % n;
        ok = elem_sym(k, s.act(x)) == elem_sym(k, x);
    }

    // canonical-normal idempotence, >= 1000 cases
    for (int t = 0; ok && t < 1000; ++t) {
        unsigned n = 2 + rng() % 5;
        Vec w = random_vec(n);
        if (std::all_of(w.begin(), w.end(), [](const Rational& r) { return r == 0; }))
            continue;
        IntVec c = canonical_normal(w);
        Vec cr(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) cr[i] = Rational(c[i]);
        ok = canonical_normal(cr) == c;
    }

    // orbit size, >= 1000 cases
    std::uint64_t fact[6] = {1, 1, 2, 6, 24, 120};
    for (int t = 0; ok && t < 1000; ++t) {
        unsigned n = 2 + rng() % 4;
        ok = orbit<Rational>(random_distinct(n)).size() == fact[n];
    }

    report(10, "property suites (equivariance, e_k, canonical normal, orbit size) over "
               ">= 1000 cases each",
           ok);
}

} // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
        criterion10();
    } catch (const std::exception& e) {
        std::cerr << "acceptance aborted: " << e.what() << std::endl;
        return 1;
    }
    std::cout << (failures == 0 ? "ALL ACCEPTED" : "FAILURES PRESENT") << std::endl;
    return failures == 0 ? 0 : 1;
}
