#include <doctest.h>

#include <random>

#include "symorb/lemmas.hpp"

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

} // namespace

TEST_CASE("check_transposition examples") {
    Vec v = rvec({1, 2, 3});
    CHECK(check_transposition(v, make_hyperplane(rvec({1, 1, -1})), 1, 2));
    // v in H but tau v not: vacuously true
    CHECK(check_transposition(v, make_hyperplane(rvec({1, 2, -1})), 1, 2));
}

TEST_CASE("transposition sweep") {
    for (unsigned n : {4u, 5u}) {
        auto rep = transposition_sweep(n, 1000, 11);
        CHECK(rep.pass());
        CHECK(rep.cases_checked >= 1000);
    }
}

TEST_CASE("check_three_cycle_span examples") {
    auto pi5 = Permutation::from_cycle(5, {1, 2, 3, 4, 5});
    CHECK(check_three_cycle_span(iota_vec(5), {1, 3, 2}, pi5));

    // constant vector: all differences vanish, span dim 0, lemma hypothesis fails
    Vec constant(5, Rational(3));
    CHECK_FALSE(check_three_cycle_span(constant, {1, 3, 2}, pi5));

    CHECK_THROWS_AS(check_three_cycle_span(iota_vec(4), {1, 2, 3},
                                           Permutation::from_cycle(4, {1, 2, 3, 4})),
                    NotPrime);
    CHECK_THROWS_AS(
        check_three_cycle_span(iota_vec(5), {1, 2, 3}, Permutation::transposition(5, 1, 2)),
        NotPCycle);
}

TEST_CASE("three-cycle sweep") {
    for (unsigned p : {5u, 7u}) {
        auto rep = three_cycle_sweep(p, 200, 17);
        CHECK(rep.pass());
        CHECK(rep.cases_checked >= 200);
    }
}

TEST_CASE("four-term non-vanishing sweeps") {
    auto r5 = check_four_term_nonvanishing(5);
    CHECK(r5.pass());
    CHECK(r5.cases_checked == 120);

    auto r7 = check_four_term_nonvanishing(7);
    CHECK(r7.pass());
    CHECK(r7.cases_checked == 840);

    CHECK(check_four_term_nonvanishing(3).not_applicable);
}

TEST_CASE("poly1 equivalence sweeps") {
    for (unsigned p : {5u, 7u}) {
        auto rep = check_poly1(p);
        CHECK(rep.pass());
        CHECK(rep.cases_checked > 0);
    }
}

TEST_CASE("poly2 non-vanishing sweeps") {
    for (unsigned p : {5u, 7u, 11u, 13u}) {
        auto rep = check_poly2(p);
        CHECK(rep.pass());
        CHECK(rep.cases_checked > 0);
    }
}

TEST_CASE("ijkl dichotomy") {
    auto exact = check_ijkl_dichotomy(7);
    CHECK(exact.pass());
    CHECK(exact.cases_checked == 840);

    for (unsigned p : {11u, 13u}) {
        auto sampled = check_ijkl_dichotomy(p, 10000, 5);
        CHECK(sampled.pass());
        CHECK(sampled.cases_checked >= 10000);
    }
}

TEST_CASE("f injectivity") {
    auto r = check_f_injective(7, 1, 2);
    CHECK(r.pass());
    CHECK(r.cases_checked == 15); // C(6,2) pairs

    auto r11 = check_f_injective(11, 0, 5);
    CHECK(r11.pass());
    CHECK(r11.cases_checked == 45);

    CHECK_THROWS_AS(check_f_injective(7, 3, 3), InvalidResidues);

    for (unsigned p : {7u, 11u, 13u}) {
        auto sweep = check_f_injective_sweep(p);
        CHECK(sweep.pass());
        CHECK(sweep.cases_checked == static_cast<std::uint64_t>(p) * (p - 1));
    }
}

TEST_CASE("graph degree lemma examples") {
    // K6 with p=7, m=2: kappa = 8, hypothesis 15 > 12
    LemmaGraph k6{7, 2, 6, {}};
    for (unsigned a = 0; a < 6; ++a)
        for (unsigned b = a + 1; b < 6; ++b) k6.edges.emplace_back(a, b);
    CHECK(check_graph_degree_lemma(k6));

    LemmaGraph thin{7, 2, 6, {}};
    for (unsigned a = 0; a < 6; ++a)
        for (unsigned b = a + 1; b < 6 && thin.edges.size() < 12; ++b)
            thin.edges.emplace_back(a, b);
    CHECK_THROWS_AS(check_graph_degree_lemma(thin), HypothesisNotMet);
}

TEST_CASE("graph degree sweeps") {
    const std::pair<unsigned, unsigned> params[] = {{7, 2}, {11, 2}, {11, 3}, {13, 2}, {13, 3}};
    for (auto [p, m] : params) {
        auto rep = graph_degree_sweep(p, m, 100, 42);
        CAPTURE(p);
        CAPTURE(m);
        CHECK(rep.pass());
        CHECK(rep.cases_checked == 100);
    }
}

TEST_CASE("rep dims report") {
    auto r = check_rep_dims(7);
    CHECK(r.pass());
    CHECK(r.cases_checked == 6);
}

TEST_CASE("odot examples") {
    CHECK(odot(2, 3, 1) == -2);
    CHECK(odot(2, 1, 1) == 0);
    CHECK(odot(3, 5, 1) == -2);
    CHECK_THROWS_AS(odot(1, 5, 1), DivisionByZero);
}
