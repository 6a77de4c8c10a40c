#ifndef SYMORB_CYCLO_HPP
#define SYMORB_CYCLO_HPP

#include <utility>
#include <vector>

#include "symorb/numeric.hpp"

namespace symorb {

// A sparse integer combination of p-th roots of unity: sum c_i * zeta^{e_i}.
// Exponents are reduced mod p at construction; zero coefficients are dropped.
struct SignedExponentSum {
    unsigned p;
    std::vector<std::pair<Int, unsigned>> terms; // (coefficient, exponent in 0..p-1)

    SignedExponentSum(unsigned p_, std::vector<std::pair<Int, long>> raw_terms);
};

// An element of Z[zeta_p] stored as all p residue-class coefficients,
// canonicalized by forcing coeffs[p-1] = 0 via 1 + zeta + ... + zeta^{p-1} = 0.
// Equality is coefficient-wise on the canonical form.
class CycloElem {
public:
    CycloElem(unsigned p, IntVec coeffs); // canonicalizes

    static CycloElem zero(unsigned p);
    static CycloElem zeta_pow(unsigned p, long e);

    unsigned p() const { return p_; }
    const IntVec& coeffs() const { return coeffs_; }

    bool is_zero() const;

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    // Multiplication by zeta: cyclic exponent shift.
    CycloElem shifted(long e) const;

private:
    unsigned p_;
    IntVec coeffs_;
    void canonicalize();
};

CycloElem cyclo_reduce(const SignedExponentSum& s);

// True iff the sum is exactly zero in Z[zeta_p]: the residue-class
// accumulated coefficient vector is constant (multiple of Phi_p).
bool is_vanishing_sum(const SignedExponentSum& s);

// n1/d1 == n2/d2 tested by cross multiplication; no division in Z[zeta_p].
bool cross_equal(const CycloElem& n1, const CycloElem& d1,
                 const CycloElem& n2, const CycloElem& d2);

} // namespace symorb

#endif
