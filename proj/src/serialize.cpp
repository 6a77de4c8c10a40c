#include "symorb/serialize.hpp"

#include <cstdio>

namespace symorb {

using json = nlohmann::json;

json rational_vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_str(x));
    return a;
}

json int_vec_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

static json instance_json(const ProblemInstance& inst) {
    return json{{"n", inst.n},
                {"v", rational_vec_json(inst.v)},
                {"allow_zero_sum", inst.allow_zero_sum}};
}

json certificate_json(const SearchCertificate& cert) {
    json j;
    j["instance"] = instance_json(cert.instance);
    j["mode"] = cert.mode;
    if (cert.threshold) j["threshold"] = *cert.threshold;
    j["max_count"] = cert.max_count;
    j["witness_normal"] = int_vec_json(cert.witness_normal.normal);
    j["witness_indices"] = cert.witness_indices;
    json hist = json::object();
    for (const auto& [k, v] : cert.histogram) hist[std::to_string(k)] = v;
    j["histogram"] = std::move(hist);
    if (cert.mode == "decide") {
        j["exceeded"] = cert.exceeded;
        j["frontier_exhausted"] = cert.frontier_exhausted;
    }
    j["stats"] = json{{"subspaces_explored", cert.stats.subspaces_explored},
                      {"dedup_hits", cert.stats.dedup_hits}};
    return j;
}

json conjecture_json(const ConjectureReport& rep) {
    json j;
    j["instance"] = instance_json(rep.instance);
    j["max_count"] = rep.max_count;
    j["conjectured"] = rep.conjectured.str();
    j["theorem_bound"] = rep.theorem_bound.str();
    j["lower_bound"] = rep.lower_bound.str();
    j["pass"] = rep.pass;
    j["certificate"] = certificate_json(rep.certificate);
    return j;
}

json lemma_json(const LemmaReport& rep) {
    json j;
    j["lemma"] = rep.name;
    j["params"] = rep.params;
    j["cases_checked"] = rep.cases_checked;
    j["failures"] = rep.failures;
    j["status"] = rep.status();
    return j;
}

json trials_json(const GenericTrialsReport& rep) {
    json j;
    j["n"] = rep.n;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["expected"] = rep.expected.str();
    json samples = json::array();
    for (std::size_t i = 0; i < rep.sampled.size(); ++i)
        samples.push_back(json{{"v", rational_vec_json(rep.sampled[i])},
                               {"max_count", rep.max_counts[i]}});
    j["samples"] = std::move(samples);
    j["failures"] = rep.failures;
    j["pass"] = rep.pass();
    return j;
}

std::string content_hash(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace symorb
