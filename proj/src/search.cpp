#include "symorb/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "symorb/perm.hpp"

namespace symorb {

using json = nlohmann::json;

void ProblemInstance::validate() const {
    if (n < 2 || v.size() != n) throw InvalidInstance("instance dimension mismatch");
    Vec sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) throw InvalidInstance("coordinates are not distinct");
    if (!allow_zero_sum && zero_sum())
        throw InvalidInstance("coordinates sum to zero (pass allow_zero_sum to permit)");
}

bool ProblemInstance::zero_sum() const {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s == 0;
}

std::string ProblemInstance::content_key() const {
    std::ostringstream os;
    os << "n=" << n << ";v=";
    for (const auto& x : v) os << rational_str(x) << ",";
    os << ";z=" << (allow_zero_sum ? 1 : 0);
    return os.str();
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool bit_test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void bit_set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    unsigned t = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    std::size_t chunk = (count + t - 1) / t;
    for (unsigned i = 0; i < t; ++i) {
        std::size_t lo = i * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

std::string normal_key(const IntVec& normal) {
    std::string k;
    for (const auto& x : normal) {
        k += x.str();
        k += ',';
    }
    return k;
}

struct Node {
    Subspace sub;
    Bits bits;
    std::uint64_t count = 0;
};

struct Candidate {
    std::size_t parent = 0;
    bool leaf = false;
    IntVec normal;  // leaf only, canonical
    Subspace sub;   // interior only
    std::string key;
};

class Engine {
public:
    Engine(const ProblemInstance& inst, const SearchOptions& opts, std::string mode,
           std::optional<std::uint64_t> threshold)
        : inst_(inst), opts_(opts), mode_(std::move(mode)), threshold_(threshold) {
        inst_.validate();
        n_ = inst_.n;
        if (n_ > 6) throw ExplicitLimitExceeded("exhaustive search is limited to n <= 6");
        if (n_ == 6 && !opts_.long_running)
            throw ExplicitLimitExceeded("n = 6 requires the long-running flag");

        // Scale v to a primitive integer vector; positive scaling preserves
        // incidence counts, lex order of the orbit, and canonical normals.
        Int l = 1;
        for (const auto& x : inst_.v) {
            Int d = denominator(x);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        IntVec iv(n_);
        for (unsigned i = 0; i < n_; ++i) iv[i] = numerator(Rational(inst_.v[i] * l));
        orbit_int_ = orbit(iv);
        orbit_rat_.reserve(orbit_int_.size());
        for (const auto& pt : orbit_int_) {
            Vec r(n_);
            for (unsigned j = 0; j < n_; ++j) r[j] = pt[j];
            orbit_rat_.push_back(std::move(r));
        }
        v_index_ = static_cast<std::size_t>(
            std::lower_bound(orbit_int_.begin(), orbit_int_.end(), iv) - orbit_int_.begin());
        words_ = (orbit_int_.size() + 63) / 64;
    }

    SearchCertificate run() {
        auto t0 = std::chrono::steady_clock::now();
        if (!try_resume()) init_root();
        if (!done_) bfs();
        SearchCertificate cert = finalize();
        cert.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!opts_.checkpoint_path.empty() && (cert.frontier_exhausted || cert.exceeded))
            std::remove(opts_.checkpoint_path.c_str());
        return cert;
    }

private:
    ProblemInstance inst_;
    SearchOptions opts_;
    std::string mode_;
    std::optional<std::uint64_t> threshold_;
    unsigned n_ = 0;
    std::vector<IntVec> orbit_int_;
    std::vector<Vec> orbit_rat_;
    std::size_t v_index_ = 0;
    std::size_t words_ = 0;

    std::vector<Node> level_;
    std::size_t next_parent_ = 0; // resume cursor within level_
    std::vector<Node> next_level_;
    std::unordered_set<std::string> interior_seen_;
    std::unordered_set<std::string> leaf_seen_;
    std::uint64_t best_count_ = 0;
    IntVec best_normal_;
    std::map<std::uint64_t, std::uint64_t> histogram_;
    SearchStats stats_;
    bool done_ = false;
    bool exceeded_ = false;
    bool exhausted_ = false;

    Node make_node(Subspace sub) const {
        Node nd;
        nd.bits.assign(words_, 0);
        for (std::size_t i = 0; i < orbit_rat_.size(); ++i)
            if (subspace_contains(sub, orbit_rat_[i])) {
                bit_set(nd.bits, i);
                ++nd.count;
            }
        nd.sub = std::move(sub);
        return nd;
    }

    void init_root() {
        Node root = make_node(span_of({orbit_rat_[v_index_]}));
        stats_.subspaces_explored = 1;
        if (root.sub.dim() == n_ - 1) {
            // n = 2: the root line is itself a hyperplane.
            Hyperplane h = normal_of(root.sub);
            record_leaf(root.count, h.normal);
            done_ = true;
            exhausted_ = true;
            return;
        }
        level_.clear();
        level_.push_back(std::move(root));
        next_parent_ = 0;
    }

    void record_leaf(std::uint64_t count, const IntVec& normal) {
        ++histogram_[count];
        if (count > best_count_ ||
            (count == best_count_ && (best_normal_.empty() || normal < best_normal_))) {
            best_count_ = count;
            best_normal_ = normal;
        }
        if (threshold_ && count > *threshold_) exceeded_ = true;
    }

    void bfs() {
        const std::size_t batch = 256;
        std::uint64_t batches_since_ckpt = 0;
        while (!level_.empty()) {
            while (next_parent_ < level_.size()) {
                std::size_t lo = next_parent_;
                std::size_t hi = std::min(level_.size(), lo + batch);
                process_batch(lo, hi);
                next_parent_ = hi;
                if (exceeded_ && mode_ == "decide") {
                    done_ = true;
                    return;
                }
                if (!opts_.checkpoint_path.empty() &&
                    ++batches_since_ckpt >= opts_.checkpoint_every) {
                    batches_since_ckpt = 0;
                    save_checkpoint();
                }
            }
            level_ = std::move(next_level_);
            next_level_.clear();
            interior_seen_.clear();
            next_parent_ = 0;
            if (!opts_.checkpoint_path.empty() && !level_.empty()) save_checkpoint();
        }
        exhausted_ = true;
        done_ = true;
    }

    // Expand parents [lo, hi): phase A builds candidates in parallel, phase B
    // deduplicates sequentially in deterministic order, phase C computes
    // counts in parallel, phase D aggregates sequentially.
    void process_batch(std::size_t lo, std::size_t hi) {
        const bool child_is_leaf = (level_[lo].sub.dim() + 1 == n_ - 1);
        std::vector<std::vector<Candidate>> cand(hi - lo);

        parallel_for(hi - lo, opts_.threads, [&](std::size_t a, std::size_t b) {
            for (std::size_t t = a; t < b; ++t) {
                const Node& parent = level_[lo + t];
                for (std::size_t j = 0; j < orbit_rat_.size(); ++j) {
                    if (bit_test(parent.bits, j)) continue;
                    auto ext = subspace_extended(parent.sub, orbit_rat_[j]);
                    if (!ext) continue; // cannot happen: bits == span membership
                    Candidate c;
                    c.parent = lo + t;
                    if (child_is_leaf) {
                        c.leaf = true;
                        c.normal = normal_of(*ext).normal;
                        c.key = normal_key(c.normal);
                    } else {
                        c.key = ext->key();
                        c.sub = std::move(*ext);
                    }
                    cand[t].push_back(std::move(c));
                }
            }
        });

        std::vector<Candidate> fresh;
        for (auto& list : cand)
            for (auto& c : list) {
                auto& seen = c.leaf ? leaf_seen_ : interior_seen_;
                if (!seen.insert(c.key).second) {
                    ++stats_.dedup_hits;
                    continue;
                }
                fresh.push_back(std::move(c));
            }
        stats_.subspaces_explored += fresh.size();

        std::vector<std::uint64_t> leaf_counts(fresh.size(), 0);
        std::vector<Node> interior_nodes(fresh.size());
        parallel_for(fresh.size(), opts_.threads, [&](std::size_t a, std::size_t b) {
            for (std::size_t t = a; t < b; ++t) {
                const Candidate& c = fresh[t];
                const Node& parent = level_[c.parent];
                if (c.leaf) {
                    std::uint64_t cnt = parent.count;
                    for (std::size_t j = 0; j < orbit_int_.size(); ++j)
                        if (!bit_test(parent.bits, j) && dot_int(c.normal, orbit_int_[j]) == 0)
                            ++cnt;
                    leaf_counts[t] = cnt;
                } else {
                    Node nd;
                    nd.bits = parent.bits;
                    nd.count = parent.count;
                    for (std::size_t j = 0; j < orbit_rat_.size(); ++j)
                        if (!bit_test(parent.bits, j) &&
                            subspace_contains(c.sub, orbit_rat_[j])) {
                            bit_set(nd.bits, j);
                            ++nd.count;
                        }
                    nd.sub = c.sub;
                    interior_nodes[t] = std::move(nd);
                }
            }
        });

        for (std::size_t t = 0; t < fresh.size(); ++t) {
            if (fresh[t].leaf) {
                record_leaf(leaf_counts[t], fresh[t].normal);
            } else {
                next_level_.push_back(std::move(interior_nodes[t]));
            }
        }
    }

    SearchCertificate finalize() {
        SearchCertificate cert;
        cert.instance = inst_;
        cert.mode = mode_;
        cert.threshold = threshold_;
        cert.max_count = best_count_;
        cert.histogram = histogram_;
        cert.exceeded = exceeded_;
        cert.frontier_exhausted = exhausted_;
        cert.stats = stats_;
        cert.witness_normal = Hyperplane{n_, best_normal_};
        for (std::size_t j = 0; j < orbit_int_.size(); ++j)
            if (dot_int(best_normal_, orbit_int_[j]) == 0)
                cert.witness_indices.push_back(j);
        if (cert.witness_indices.size() != cert.max_count && mode_ == "max")
            throw Error("certificate replay mismatch: witness does not reproduce max_count");

        if (!inst_.zero_sum()) {
            const unsigned p = largest_prime_leq(n_);
            const Int limit = factorial(n_) / p;
            if (Int(best_count_) > limit) {
                std::ostringstream os;
                os << "BOUND VIOLATION: found |H ∩ S_nv| = " << best_count_
                   << " > n!/p = " << limit << " for n = " << n_ << ", p = " << p
                   << ", witness normal " << normal_key(best_normal_)
                   << " — either the search or the bound is wrong; refusing to certify";
                throw BoundViolation(os.str());
            }
        }
        return cert;
    }

    // --- checkpointing -----------------------------------------------------

    std::string state_key() const {
        std::string k = inst_.content_key() + ";mode=" + mode_;
        if (threshold_) k += ";thr=" + std::to_string(*threshold_);
        return k;
    }

    static json rows_to_json(const Subspace& s) {
        json rows = json::array();
        for (const auto& row : s.rows) {
            json r = json::array();
            for (const auto& x : row) r.push_back(rational_str(x));
            rows.push_back(std::move(r));
        }
        return rows;
    }

    Subspace rows_from_json(const json& rows) const {
        Subspace s;
        s.n = n_;
        for (const auto& r : rows) {
            Vec row;
            for (const auto& x : r) row.push_back(parse_rational(x.get<std::string>()));
            s.rows.push_back(std::move(row));
        }
        return s;
    }

    void save_checkpoint() const {
        json j;
        j["state_key"] = state_key();
        j["next_parent"] = next_parent_;
        json parents = json::array();
        for (const auto& nd : level_) parents.push_back(rows_to_json(nd.sub));
        j["level"] = std::move(parents);
        json nxt = json::array();
        for (const auto& nd : next_level_) nxt.push_back(rows_to_json(nd.sub));
        j["next_level"] = std::move(nxt);
        j["leaf_seen"] = json(leaf_seen_);
        j["best_count"] = best_count_;
        json bn = json::array();
        for (const auto& x : best_normal_) bn.push_back(x.str());
        j["best_normal"] = std::move(bn);
        json hist = json::object();
        for (const auto& [k, v] : histogram_) hist[std::to_string(k)] = v;
        j["histogram"] = std::move(hist);
        j["subspaces_explored"] = stats_.subspaces_explored;
        j["dedup_hits"] = stats_.dedup_hits;
        std::string tmp = opts_.checkpoint_path + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        std::rename(tmp.c_str(), opts_.checkpoint_path.c_str());
    }

    bool try_resume() {
        if (opts_.checkpoint_path.empty()) return false;
        std::ifstream in(opts_.checkpoint_path);
        if (!in) return false;
        json j;
        try {
            in >> j;
        } catch (...) {
            return false;
        }
        if (j.value("state_key", "") != state_key()) return false;
        level_.clear();
        for (const auto& rows : j["level"]) level_.push_back(make_node(rows_from_json(rows)));
        next_level_.clear();
        interior_seen_.clear();
        for (const auto& rows : j["next_level"]) {
            Node nd = make_node(rows_from_json(rows));
            interior_seen_.insert(nd.sub.key());
            next_level_.push_back(std::move(nd));
        }
        leaf_seen_.clear();
        for (const auto& k : j["leaf_seen"]) leaf_seen_.insert(k.get<std::string>());
        next_parent_ = j["next_parent"].get<std::size_t>();
        best_count_ = j["best_count"].get<std::uint64_t>();
        best_normal_.clear();
        for (const auto& x : j["best_normal"]) best_normal_.push_back(Int(x.get<std::string>()));
        histogram_.clear();
        for (auto it = j["histogram"].begin(); it != j["histogram"].end(); ++it)
            histogram_[std::stoull(it.key())] = it.value().get<std::uint64_t>();
        stats_.subspaces_explored = j["subspaces_explored"].get<std::uint64_t>();
        stats_.dedup_hits = j["dedup_hits"].get<std::uint64_t>();
        return true;
    }
};

} // namespace

SearchCertificate max_intersection(const ProblemInstance& inst, const SearchOptions& opts) {
    Engine e(inst, opts, "max", std::nullopt);
    return e.run();
}

SearchCertificate decide_exceeds(const ProblemInstance& inst, std::uint64_t threshold,
                                 const SearchOptions& opts) {
    Engine e(inst, opts, "decide", threshold);
    return e.run();
}

ConjectureReport verify_conjecture(unsigned n, const Vec& v, const SearchOptions& opts) {
    if (n < 3 || n > 6) throw ExplicitLimitExceeded("conjecture verification covers n in 3..6");
    ProblemInstance inst{n, v, false};
    ConjectureReport rep;
    rep.certificate = max_intersection(inst, opts);
    rep.instance = inst;
    rep.max_count = rep.certificate.max_count;
    rep.conjectured = (n % 2 == 1) ? factorial(n - 1) : Int(n) * factorial(n - 2);
    rep.theorem_bound = factorial(n) / largest_prime_leq(n);
    rep.lower_bound = factorial(n - 1);
    bool v_is_iota = true;
    for (unsigned i = 0; i < n; ++i)
        if (v[i] != Rational(i + 1)) v_is_iota = false;
    if (v_is_iota && n % 2 == 0) rep.lower_bound = Int(n) * factorial(n - 2);
    rep.pass = Int(rep.max_count) <= rep.conjectured && Int(rep.max_count) >= rep.lower_bound;
    return rep;
}

GenericTrialsReport generic_v_trials(unsigned n, unsigned trials, std::uint64_t seed,
                                     const SearchOptions& opts) {
    if (n < 2 || n > 5) throw ExplicitLimitExceeded("generic trials cover n in 2..5");
    GenericTrialsReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    rep.expected = factorial(n - 1);
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return static_cast<long>(rng() % 101) - 50; };
    for (unsigned t = 0; t < trials; ++t) {
        Vec v;
        for (;;) {
            v.clear();
            for (unsigned i = 0; i < n; ++i) v.push_back(Rational(draw()));
            Vec s = v;
            std::sort(s.begin(), s.end());
            bool distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
            Rational sum = 0;
            for (const auto& x : v) sum += x;
            if (distinct && sum != 0) break;
        }
        ProblemInstance inst{n, v, false};
        SearchCertificate cert = max_intersection(inst, opts);
        rep.sampled.push_back(v);
        rep.max_counts.push_back(cert.max_count);
        if (Int(cert.max_count) != rep.expected) rep.failures.push_back(t);
    }
    return rep;
}

bool induction_check(const std::map<unsigned, std::uint64_t>& results, unsigned k) {
    for (const auto& [n, maxn] : results) {
        auto it = results.find(n + 1);
        if (it == results.end()) continue;
        if (Int(maxn) * k <= factorial(n) && Int(it->second) * k > factorial(n + 1))
            return false;
    }
    return true;
}

} // namespace symorb
