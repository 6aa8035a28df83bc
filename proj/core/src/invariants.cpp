#include "fano3/invariants.hpp"

#include <sstream>

#include <json.hpp>

#include "fano3/classify.hpp"

namespace fano3 {

Rat degree(const FanoPolytope& p) { return anticanonical_volume(p); }

int picard_rank(const FanoPolytope& p) {
    if (!p.simplicial())
        throw UnsupportedError("picard_rank: polytope has a non-triangular facet");
    return static_cast<int>(p.vertices().size()) - 3;
}

ClassificationEntry make_entry(const FanoPolytope& p, int k) {
    if (std::string why = validate_failure(p, k); !why.empty())
        throw DomainError("make_entry: polytope does not validate for k=" + std::to_string(k) +
                          ": " + why);
    ClassificationEntry e;
    e.k = k;
    e.polytope = p;
    e.polytope.set_k(k);
    e.degree = degree(p);
    e.picard_rank = picard_rank(p);
    return e;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    if (r.get_den() == 1)
        os << r.get_num();
    else
        os << r.get_num() << "/" << r.get_den();
    return os.str();
}

namespace {

nlohmann::json entry_json(const ClassificationEntry& e) {
    nlohmann::json j;
    j["id"] = e.id;
    j["k"] = e.k;
    auto& arr = j["vertices"] = nlohmann::json::array();
    for (const auto& v : e.polytope.vertices())
        arr.push_back({v.x.get_si(), v.y.get_si(), v.z.get_si()});
    j["degree"] = {{"num", e.degree.get_num().get_si()}, {"den", e.degree.get_den().get_si()}};
    j["picard_rank"] = e.picard_rank;
    j["grdb_id"] = e.grdb_id ? nlohmann::json(*e.grdb_id) : nlohmann::json(nullptr);
    j["model"] = e.model ? nlohmann::json(*e.model) : nlohmann::json(nullptr);
    return j;
}

}  // namespace

std::string entry_to_json(const ClassificationEntry& e) { return entry_json(e).dump(); }

ClassificationEntry entry_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ClassificationEntry e;
    e.id = j.at("id").get<std::string>();
    e.k = j.at("k").get<int>();
    std::vector<LatticePoint> pts;
    for (const auto& row : j.at("vertices"))
        pts.push_back({static_cast<long>(row[0].get<long long>()),
                       static_cast<long>(row[1].get<long long>()),
                       static_cast<long>(row[2].get<long long>())});
    e.polytope = convex_hull(pts, e.k);
    e.degree = Rat(Int(j.at("degree").at("num").get<long>()),
                   Int(j.at("degree").at("den").get<long>()));
    e.degree.canonicalize();
    e.picard_rank = j.at("picard_rank").get<int>();
    if (!j.at("grdb_id").is_null()) e.grdb_id = j.at("grdb_id").get<long>();
    if (!j.at("model").is_null()) e.model = j.at("model").get<std::string>();
    return e;
}

std::string entry_to_csv(const ClassificationEntry& e) {
    std::ostringstream os;
    os << e.id << "," << e.k << "," << rat_str(e.degree) << "," << e.picard_rank << ",";
    if (e.grdb_id) os << *e.grdb_id;
    return os.str();
}

}  // namespace fano3
