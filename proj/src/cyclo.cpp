#include "symorb/cyclo.hpp"

namespace symorb {

namespace {
unsigned reduce_exp(long e, unsigned p) {
    long r = e % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<unsigned>(r);
}
} // namespace

SignedExponentSum::SignedExponentSum(unsigned p_,
                                     std::vector<std::pair<Int, long>> raw_terms)
    : p(p_) {
    if (!is_prime(p) || p < 3) throw NotPrime("p must be a prime >= 3");
    for (auto& [c, e] : raw_terms) {
        if (c == 0) continue;
        terms.emplace_back(std::move(c), reduce_exp(e, p));
    }
}

CycloElem::CycloElem(unsigned p, IntVec coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != p_) throw DimensionMismatch("coefficient vector must have length p");
    canonicalize();
}

void CycloElem::canonicalize() {
    const Int last = coeffs_[p_ - 1];
    if (last != 0)
        for (auto& c : coeffs_) c -= last;
}

CycloElem CycloElem::zero(unsigned p) { return CycloElem(p, IntVec(p, 0)); }

CycloElem CycloElem::zeta_pow(unsigned p, long e) {
    IntVec c(p, 0);
    c[reduce_exp(e, p)] = 1;
    return CycloElem(p, std::move(c));
}

bool CycloElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    if (a.p_ != b.p_) throw DimensionMismatch("mixed cyclotomic moduli");
    IntVec c(a.p_);
    for (unsigned i = 0; i < a.p_; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return CycloElem(a.p_, std::move(c));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    if (a.p_ != b.p_) throw DimensionMismatch("mixed cyclotomic moduli");
    IntVec c(a.p_);
    for (unsigned i = 0; i < a.p_; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return CycloElem(a.p_, std::move(c));
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    if (a.p_ != b.p_) throw DimensionMismatch("mixed cyclotomic moduli");
    IntVec c(a.p_, 0);
    for (unsigned i = 0; i < a.p_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < a.p_; ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[(i + j) % a.p_] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycloElem(a.p_, std::move(c));
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

CycloElem CycloElem::shifted(long e) const {
    IntVec c(p_, 0);
    unsigned s = reduce_exp(e, p_);
    for (unsigned i = 0; i < p_; ++i) c[(i + s) % p_] = coeffs_[i];
    return CycloElem(p_, std::move(c));
}

CycloElem cyclo_reduce(const SignedExponentSum& s) {
    IntVec c(s.p, 0);
    for (const auto& [coef, e] : s.terms) c[e] += coef;
    return CycloElem(s.p, std::move(c));
}

bool is_vanishing_sum(const SignedExponentSum& s) {
    IntVec acc(s.p, 0);
    for (const auto& [coef, e] : s.terms) acc[e] += coef;
    for (unsigned i = 1; i < s.p; ++i)
        if (acc[i] != acc[0]) return false;
    return true;
}

bool cross_equal(const CycloElem& n1, const CycloElem& d1,
                 const CycloElem& n2, const CycloElem& d2) {
    if (d1.is_zero() || d2.is_zero()) throw ZeroDenominator("cross_equal with zero denominator");
    return n1 * d2 == n2 * d1;
}

} // namespace symorb
