#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "jumploci/hodge.hpp"
#include "jumploci/torus.hpp"
#include "jumploci/twisted.hpp"

namespace jumploci {

using Json = nlohmann::json;

// Machine-readable result of one CLI query. The certificate kind is "exact"
// only when every arithmetic step ran over Rat or Cyclotomic.
struct Report {
    std::string command;
    std::string certificate;  // exact | numeric | heuristic
    Json payload;
    double seconds = 0;

    Json to_json() const;
};

Json json_rat(const Rat& q);
Json json_rats(const std::vector<Rat>& v);
Json json_intmat(const IntMat& m);
Json json_subtorus(const TranslatedSubtorus& t);
Json json_hodge_numbers(const HodgeNumbers& n);

// File cache keyed by a content hash of the canonicalized inputs.
struct Cache {
    std::string dir;  // empty disables caching

    std::optional<Json> load(const std::string& key) const;
    void store(const std::string& key, const Json& payload) const;
};

// FNV-1a hash of kind plus the compact canonical serialization.
std::string cache_key(const std::string& kind, const Json& canonical);

}  // namespace jumploci
