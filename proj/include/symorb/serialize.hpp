#ifndef SYMORB_SERIALIZE_HPP
#define SYMORB_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "symorb/lemmas.hpp"
#include "symorb/search.hpp"

namespace symorb {

// Deterministic JSON views; anything timing-dependent (wall time) lives in a
// separate envelope so certificates are byte-comparable across runs.
nlohmann::json certificate_json(const SearchCertificate& cert);
nlohmann::json conjecture_json(const ConjectureReport& rep);
nlohmann::json lemma_json(const LemmaReport& rep);
nlohmann::json trials_json(const GenericTrialsReport& rep);

nlohmann::json rational_vec_json(const Vec& v);
nlohmann::json int_vec_json(const IntVec& v);

// Stable 64-bit content hash (FNV-1a) used for cache file names.
std::string content_hash(const std::string& s);

} // namespace symorb

#endif
