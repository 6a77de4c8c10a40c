#ifndef SYMORB_LEMMAS_HPP
#define SYMORB_LEMMAS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symorb/cyclo.hpp"
#include "symorb/geometry.hpp"
#include "symorb/perm.hpp"

namespace symorb {

struct LemmaReport {
    std::string name;
    std::map<std::string, std::string> params; // exact sweep spec, for replay
    std::uint64_t cases_checked = 0;
    std::vector<std::string> failures;
    bool not_applicable = false;

    bool pass() const { return !not_applicable && failures.empty(); }
    std::string status() const {
        return not_applicable ? "NotApplicable" : (failures.empty() ? "PASS" : "FAIL");
    }
};

// Simple undirected graph on vertices 0..num_vertices-1 with the (p, m)
// parameters of the degree lemma attached.
struct LemmaGraph {
    unsigned p = 0;
    unsigned m = 0;
    unsigned num_vertices = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;
};

// If v and tau(v) both lie on H, the two swapped normal entries must agree.
// Returns the implication's truth value for the given data.
bool check_transposition(const Vec& v, const Hyperplane& h, unsigned i, unsigned j);

// The difference vectors sigma pi^{-m} v - pi^{-m} v (m = 0..p-1) span the
// full 2-dimensional space {w : w_i + w_j + w_k = 0, other coords 0}.
// Returns true iff the computed span has dimension exactly 2.
bool check_three_cycle_span(const Vec& v, const std::vector<unsigned>& three_cycle,
                            const Permutation& pi);

// Randomized harness: hyperplanes constructed through v, tau(v) and random
// completion points always have equal normal entries at the swapped slots.
LemmaReport transposition_sweep(unsigned n, unsigned trials, std::uint64_t seed);

// Randomized harness for the 3-cycle span computation, including the
// degenerate constant-vector probe.
LemmaReport three_cycle_sweep(unsigned p, unsigned trials, std::uint64_t seed);

// zeta^a - zeta^b + zeta^c - zeta^d != 0 for all ordered distinct 4-tuples.
LemmaReport check_four_term_nonvanishing(unsigned p);

// zeta^a - zeta^b - zeta^{1-b} + zeta^{1-a} vanishes iff a+b = 1 mod p,
// over all distinct a, b in {2..p-1}.
LemmaReport check_poly1(unsigned p);

// The 8-term sum arising from the 2-2-cycle lemma is never a vanishing sum,
// over all a in {2..p-1} with 2a != 1 mod p and m != 0, +-1 mod p.
LemmaReport check_poly2(unsigned p);

// (zeta^{j'}-zeta^{i'}, zeta^{l'}-zeta^{k'}) is parallel to its conjugate
// pair iff i'+j' = k'+l' mod p. Exhaustive when samples == 0, otherwise a
// seeded random sweep of that many distinct 4-tuples.
LemmaReport check_ijkl_dichotomy(unsigned p, std::uint64_t samples = 0,
                                 std::uint64_t seed = 0);

// f(j) = (zeta^{i'}-zeta^j)/(zeta^{k'}-zeta^{i'+j-k'}) takes pairwise
// distinct values on its p-1 domain points; tested by cross multiplication.
LemmaReport check_f_injective(unsigned p, unsigned i_res, unsigned k_res);

// All ordered (i', k') pairs for one prime.
LemmaReport check_f_injective_sweep(unsigned p);

// Some vertex C0 has sum_{D ~ C0} d(D) >= kappa + 2 d(C0) with
// kappa = (p-2m)^2 - 1, provided e > (p-2m+1)|Gamma|/2 (HypothesisNotMet
// otherwise).
bool check_graph_degree_lemma(const LemmaGraph& g);

// Randomized harness: Erdos-Renyi graphs, rejection sampled until `trials`
// hypothesis-satisfying graphs have been checked.
LemmaReport graph_degree_sweep(unsigned p, unsigned m, unsigned trials, std::uint64_t seed);

// Orbit-dimension structure for all units k mod p: entries equal, each the
// order of k, summing to p-1.
LemmaReport check_rep_dims(unsigned p);

// a_J (.) a_L = -(a_L - a_M)/(a_J - a_M)
Rational odot(const Rational& aJ, const Rational& aL, const Rational& aM);

} // namespace symorb

#endif
