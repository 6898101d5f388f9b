#include "jumploci/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace jumploci {

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["certificate"] = certificate;
    j["payload"] = payload;
    j["seconds"] = seconds;
    return j;
}

Json json_rat(const Rat& q) { return rat_str(q); }

Json json_rats(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& q : v) a.push_back(json_rat(q));
    return a;
}

Json json_intmat(const IntMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
        rows.push_back(std::move(r));
    }
    return rows;
}

Json json_subtorus(const TranslatedSubtorus& t) {
    Json j;
    j["n"] = t.torus.n;
    j["rank"] = t.torus.rank();
    j["lattice"] = json_intmat(t.torus.lattice);
    if (t.torsion)
        j["translate"] = json_rats(t.translate);
    else
        j["translate"] = "numeric";
    return j;
}

Json json_hodge_numbers(const HodgeNumbers& n) {
    return Json{{"h10", n.h10}, {"h01", n.h01}, {"h11", n.h11}};
}

std::string cache_key(const std::string& kind, const Json& canonical) {
    std::string data = kind + "\x1f" + canonical.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::optional<Json> Cache::load(const std::string& key) const {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(std::filesystem::path(dir) / (key + ".json"));
    if (!in) return std::nullopt;
    try {
        return Json::parse(in);
    } catch (const Json::parse_error&) {
        return std::nullopt;  // corrupt entries are treated as misses
    }
}

void Cache::store(const std::string& key, const Json& payload) const {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    auto final_path = std::filesystem::path(dir) / (key + ".json");
    auto tmp_path = std::filesystem::path(dir) / (key + ".tmp");
    {
        std::ofstream out(tmp_path);
        if (!out) return;
        out << payload.dump(2);
    }
    std::filesystem::rename(tmp_path, final_path, ec);
}

}  // namespace jumploci
