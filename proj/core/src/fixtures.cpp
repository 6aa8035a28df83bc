#include "fano3/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#ifndef FANO3_DATA_DIR
#define FANO3_DATA_DIR "."
#endif

namespace fano3 {

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("FANO3_FIXTURES"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(FANO3_DATA_DIR);
}

namespace {

// Coordinates of table 4 are linear in k: either a JSON integer or a string
// such as "-k", "k+1", "-2k+3".
Int eval_coordinate(const nlohmann::json& j, int k) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (!j.is_string()) throw DomainError("fixture: coordinate is neither int nor string");
    std::string s = j.get<std::string>();
    // [sign][coeff]k[+|-const]
    size_t kpos = s.find('k');
    if (kpos == std::string::npos) throw DomainError("fixture: bad symbolic coordinate " + s);
    std::string head = s.substr(0, kpos);
    std::string tail = s.substr(kpos + 1);
    long coeff;
    if (head.empty() || head == "+")
        coeff = 1;
    else if (head == "-")
        coeff = -1;
    else
        coeff = std::stol(head);
    long cst = tail.empty() ? 0 : std::stol(tail);
    return Int(coeff) * k + cst;
}

Rat eval_degree(const nlohmann::json& j, int k) {
    if (j.contains("num_poly")) {
        auto poly = [&](const nlohmann::json& coeffs) {
            Int acc = 0, kp = 1;
            for (const auto& c : coeffs) {
                acc += Int(c.get<long>()) * kp;
                kp *= k;
            }
            return acc;
        };
        Rat r(poly(j.at("num_poly")), poly(j.at("den_poly")));
        r.canonicalize();
        return r;
    }
    Rat r(Int(j.at("num").get<long>()), Int(j.at("den").get<long>()));
    r.canonicalize();
    return r;
}

}  // namespace

FixtureTable load_table(int table_id, int k, const std::optional<std::filesystem::path>& dir) {
    if (table_id < 1 || table_id > 4) throw DomainError("load_table: table_id must be 1..4");
    if (table_id == 4 && k < 2) throw DomainError("load_table: table 4 requires k >= 2");
    std::filesystem::path path =
        (dir ? *dir : fixture_dir()) / ("table" + std::to_string(table_id) + ".json");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw std::runtime_error("corrupt fixture file " + path.string() + ": " + ex.what());
    }
    FixtureTable t;
    t.table_id = table_id;
    t.k = table_id == 4 ? k : j.value("k", 1);
    for (const auto& row : j.at("rows")) {
        FixtureRow r;
        r.id = row.at("id").get<std::string>();
        if (table_id == 4) r.id += "@" + std::to_string(k);
        for (const auto& v : row.at("vertices")) {
            if (v.size() != 3) throw DomainError("fixture: vertex is not a 3-vector");
            r.vertices.push_back(
                {eval_coordinate(v[0], t.k), eval_coordinate(v[1], t.k), eval_coordinate(v[2], t.k)});
        }
        r.printed_degree = eval_degree(row.at("degree"), t.k);
        r.printed_rank = row.at("picard_rank").get<int>();
        if (row.contains("grdb_id") && !row.at("grdb_id").is_null())
            r.grdb_id = row.at("grdb_id").get<long>();
        if (row.contains("model") && !row.at("model").is_null())
            r.model = row.at("model").get<std::string>();
        if (row.contains("note")) r.note = row.at("note").get<std::string>();
        t.rows.push_back(std::move(r));
    }
    // ids unique within the table
    std::map<std::string, int> seen;
    for (const auto& r : t.rows)
        if (++seen[r.id] > 1) throw DomainError("fixture: duplicate row id " + r.id);
    return t;
}

FixtureTable table_for_k(int k, const std::optional<std::filesystem::path>& dir) {
    if (k < 1) throw DomainError("table_for_k: k must be positive");
    if (k <= 3) return load_table(k, 0, dir);
    return load_table(4, k, dir);
}

std::vector<ClassificationEntry> entries_from_table(const FixtureTable& t) {
    std::vector<ClassificationEntry> out;
    for (const auto& r : t.rows) {
        FanoPolytope p = convex_hull(r.vertices, t.k);
        ClassificationEntry e = make_entry(p, t.k);
        e.id = r.id;
        e.grdb_id = r.grdb_id;
        e.model = r.model;
        out.push_back(std::move(e));
    }
    return out;
}

void attach_fixture_metadata(std::vector<ClassificationEntry>& entries, const FixtureTable& t) {
    std::map<IntMatrix, const FixtureRow*> by_nf;
    for (const auto& r : t.rows) by_nf.emplace(normal_form(r.vertices), &r);
    int unmatched = 0;
    for (auto& e : entries) {
        auto it = by_nf.find(normal_form(e.polytope));
        if (it != by_nf.end()) {
            e.id = it->second->id;
            e.grdb_id = it->second->grdb_id;
            e.model = it->second->model;
        } else {
            e.id = std::to_string(e.k) + ".?" + std::to_string(++unmatched);
        }
    }
}

std::vector<RowReport> verify_table(const FixtureTable& t) {
    std::vector<RowReport> out;
    for (const auto& r : t.rows) {
        RowReport rep;
        rep.id = r.id;
        FanoPolytope p = convex_hull(r.vertices, t.k);
        rep.computed_degree = degree(p);
        rep.printed_degree = r.printed_degree;
        rep.computed_rank = picard_rank(p);
        rep.printed_rank = r.printed_rank;
        rep.degree_ok = rep.computed_degree == rep.printed_degree;
        rep.rank_ok = rep.computed_rank == rep.printed_rank;
        bool is_k2_row = t.table_id == 4 && r.id.rfind("k.2", 0) == 0;
        if (is_k2_row && !rep.degree_ok) rep.printed_formula_disputed = true;
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace fano3
