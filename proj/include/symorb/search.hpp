#ifndef SYMORB_SEARCH_HPP
#define SYMORB_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symorb/geometry.hpp"
#include "symorb/numeric.hpp"

namespace symorb {

struct ProblemInstance {
    unsigned n = 0;
    Vec v;
    bool allow_zero_sum = false;

    void validate() const;
    bool zero_sum() const;
    // Stable content key for caching and checkpoint matching.
    std::string content_key() const;
};

struct SearchOptions {
    unsigned threads = 1;
    bool long_running = false;
    std::string checkpoint_path; // empty = no checkpointing
    unsigned checkpoint_every = 64; // parent batches between checkpoints
};

struct SearchStats {
    std::uint64_t subspaces_explored = 0; // distinct nodes, all depths
    std::uint64_t dedup_hits = 0;
    double wall_seconds = 0.0; // not part of the deterministic certificate
};

struct SearchCertificate {
    ProblemInstance instance;
    std::string mode; // "max" or "decide"
    std::optional<std::uint64_t> threshold; // decide mode only
    std::uint64_t max_count = 0;
    Hyperplane witness_normal;
    std::vector<std::uint64_t> witness_indices; // sorted orbit indices
    std::map<std::uint64_t, std::uint64_t> histogram; // count -> #hyperplanes
    bool exceeded = false;            // decide mode: witness found
    bool frontier_exhausted = false;  // decide mode: proof of absence
    SearchStats stats;
};

// Exact maximum of |H ∩ S_n v| over all hyperplanes H through the origin.
// Exhaustive BFS over subspaces spanned by orbit points through v,
// deduplicated by RREF key; refuses n >= 7 unless opts.long_running
// (and always refuses n > 8).
SearchCertificate max_intersection(const ProblemInstance& inst,
                                   const SearchOptions& opts = {});

// Decision form: either a witness hyperplane with count > threshold (early
// exit allowed) or proof that the full frontier holds no such hyperplane.
SearchCertificate decide_exceeds(const ProblemInstance& inst, std::uint64_t threshold,
                                 const SearchOptions& opts = {});

struct ConjectureReport {
    ProblemInstance instance;
    std::uint64_t max_count = 0;
    Int conjectured;     // (n-1)! odd, n(n-2)! even
    Int theorem_bound;   // n!/p
    Int lower_bound;     // (n-1)!, or the even-case value for v=(1..n)
    bool pass = false;
    SearchCertificate certificate;
};

ConjectureReport verify_conjecture(unsigned n, const Vec& v,
                                   const SearchOptions& opts = {});

struct GenericTrialsReport {
    unsigned n = 0;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    Int expected; // (n-1)!
    std::vector<Vec> sampled;
    std::vector<std::uint64_t> max_counts;
    std::vector<unsigned> failures; // trial indices where max != (n-1)!
    bool pass() const { return failures.empty(); }
};

// Prop-1.5-style randomized trials: integer entries uniform in [-50, 50],
// rejection sampled for distinctness and nonzero sum.
GenericTrialsReport generic_v_trials(unsigned n, unsigned trials, std::uint64_t seed,
                                     const SearchOptions& opts = {});

// True iff results[n] <= n!/k implies results[n+1] <= (n+1)!/k for every
// consecutive pair present.
bool induction_check(const std::map<unsigned, std::uint64_t>& results, unsigned k);

} // namespace symorb

#endif
