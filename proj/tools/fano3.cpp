// Command-line front end: classification, candidate sets, cascades, fixture
// verification, and polytope utilities.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano3/candidates.hpp"
#include "fano3/cascade.hpp"
#include "fano3/classify.hpp"
#include "fano3/fixtures.hpp"

namespace {

using namespace fano3;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

nlohmann::json points_json(const std::vector<LatticePoint>& pts) {
    auto arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back({p.x.get_si(), p.y.get_si(), p.z.get_si()});
    return arr;
}

std::vector<ClassificationEntry> classified_entries(int k, const SearchOptions& opts) {
    CandidateSet cand = generate_candidates(k);
    SearchResult res = search(k, cand, opts);
    std::vector<ClassificationEntry> entries;
    for (const auto& p : res.polytopes) entries.push_back(make_entry(p, k));
    attach_fixture_metadata(entries, table_for_k(k));
    return entries;
}

int cmd_classify(int k, bool exhaustive, int threads, const std::string& format,
                 const std::string& out) {
    SearchOptions opts;
    opts.exhaustive = exhaustive;
    opts.threads = threads;
    auto entries = classified_entries(k, opts);
    std::ostringstream os;
    if (format == "csv") {
        os << "id,k,degree,picard_rank,grdb_id\n";
        for (const auto& e : entries) os << entry_to_csv(e) << "\n";
    } else {
        auto arr = nlohmann::json::array();
        for (const auto& e : entries) arr.push_back(nlohmann::json::parse(entry_to_json(e)));
        os << arr.dump(1) << "\n";
    }
    write_output(os.str(), out);
    return kExitOk;
}

int cmd_candidates(int k, bool closed_form, bool relaxed, bool literal,
                   std::optional<std::vector<int>> box, int rounds,
                   std::optional<long> cap, const std::string& out) {
    nlohmann::json j;
    j["k"] = k;
    if (closed_form) {
        ClosedFormOptions opts;
        opts.fix_typos = !literal;
        opts.relax_parity = relaxed;
        CandidateSet cs = closed_form_U(k, opts);
        j["source"] = "closed-form";
        auto subsets = nlohmann::json::array();
        for (const auto& sub : cs.subsets) subsets.push_back(points_json(sub));
        j["subsets"] = subsets;
        j["points"] = points_json(cs.points);
    } else {
        SearchConfig cfg;
        if (box) {
            cfg.box_x = (*box)[0];
            cfg.box_y = (*box)[1];
            cfg.box_z = (*box)[2];
        }
        cfg.doubling_rounds = rounds;
        if (cap) cfg.volume_cap = Int(*cap);
        CandidateSet cs = generate_candidates(k, cfg);
        j["source"] = "search";
        j["stability_certified"] = cs.stability_certified;
        j["points"] = points_json(cs.points);
        if (k >= 4) {
            CandidateSet printed = closed_form_U(k);
            DifferenceReport diff = compare_candidate_sets(cs.points, printed.points);
            j["survivors_not_in_closed_form"] = points_json(diff.only_in_first);
            j["closed_form_not_surviving"] = points_json(diff.only_in_second);
        }
    }
    write_output(j.dump(1) + "\n", out);
    return kExitOk;
}

int cmd_cascade(int k, const std::string& dot_out, const std::string& json_out) {
    auto entries = entries_from_table(table_for_k(k));
    attach_fixture_metadata(entries, table_for_k(k));
    CascadeGraph g = build_cascade(entries);
    if (!dot_out.empty()) write_output(to_dot(g), dot_out);
    if (!json_out.empty() || dot_out.empty()) {
        nlohmann::json j;
        auto nodes = nlohmann::json::array();
        for (const auto& n : g.nodes) nodes.push_back(nlohmann::json::parse(entry_to_json(n)));
        auto edges = nlohmann::json::array();
        for (const auto& e : g.edges)
            edges.push_back({{"from", e.from_id},
                             {"to", e.to_id},
                             {"color", e.color == EdgeColor::Blue ? "blue" : "red"},
                             {"added_vertex",
                              {e.added_vertex.x.get_si(), e.added_vertex.y.get_si(),
                               e.added_vertex.z.get_si()}}});
        j["nodes"] = nodes;
        j["edges"] = edges;
        write_output(j.dump(1) + "\n", json_out);
    }
    return kExitOk;
}

int cmd_invariants(const std::string& input, const std::string& out) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file: " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    FanoPolytope p = polytope_from_json(buf.str());
    ClassificationEntry e = make_entry(p, p.k());
    std::vector<ClassificationEntry> one{e};
    attach_fixture_metadata(one, table_for_k(p.k()));
    write_output(entry_to_json(one.front()) + "\n", out);
    return kExitOk;
}

int cmd_normal_form(const std::string& input, const std::string& out) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file: " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    FanoPolytope p = polytope_from_json(buf.str());
    IntMatrix nf = normal_form(p);
    nlohmann::json j;
    j["k"] = p.k();
    auto rows = nlohmann::json::array();
    for (int r = 0; r < nf.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < nf.cols(); ++c) row.push_back(nf.at(r, c).get_si());
        rows.push_back(row);
    }
    j["normal_form"] = rows;
    write_output(j.dump(1) + "\n", out);
    return kExitOk;
}

int cmd_verify_tables(const std::vector<int>& tables, int kmin, int kmax) {
    bool all_ok = true;
    for (int t : tables) {
        std::vector<std::pair<int, FixtureTable>> instances;
        if (t == 4) {
            for (int k = kmin; k <= kmax; ++k) instances.emplace_back(k, load_table(4, k));
        } else {
            instances.emplace_back(0, load_table(t));
        }
        for (auto& [k, table] : instances) {
            for (const auto& rep : verify_table(table)) {
                if (rep.pass()) {
                    std::cout << "ok   table " << t << " row " << rep.id << ": degree "
                              << rat_str(rep.computed_degree) << ", rank " << rep.computed_rank;
                    if (rep.printed_formula_disputed)
                        std::cout << "  [DISPUTED printed formula gives "
                                  << rat_str(rep.printed_degree)
                                  << "; the exact dual volume is authoritative]";
                    std::cout << "\n";
                } else {
                    all_ok = false;
                    std::cout << "FAIL table " << t << " row " << rep.id << ": degree computed "
                              << rat_str(rep.computed_degree) << " printed "
                              << rat_str(rep.printed_degree) << ", rank computed "
                              << rep.computed_rank << " printed " << rep.printed_rank << "\n";
                }
            }
        }
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification toolkit for toric Fano 3-folds with one 1/k(1,1,1) point"};
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand("classify", "Run the classification search for one k");
    int cl_k = 0;
    bool cl_exhaustive = false;
    int cl_threads = 0;
    std::string cl_format = "json", cl_out = "-";
    classify->add_option("--k", cl_k, "Singularity index (>= 2)")->required();
    classify->add_flag("--exhaustive", cl_exhaustive, "Disable intermediate pruning");
    classify->add_option("--threads", cl_threads, "Worker threads (0 = all cores)");
    classify->add_option("--format", cl_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    classify->add_option("--out", cl_out, "Output file (- for stdout)");

    // candidates
    auto* cands = app.add_subcommand("candidates", "Candidate vertex sets");
    int ca_k = 0;
    bool ca_closed = false, ca_search = false, ca_relaxed = false, ca_literal = false;
    std::vector<int> ca_box;
    int ca_rounds = 1;
    long ca_cap = -1;
    std::string ca_out = "-";
    cands->add_option("--k", ca_k, "Singularity index")->required();
    cands->add_flag("--closed-form", ca_closed, "Emit the closed-form sets U1..U10 (k >= 4)");
    cands->add_flag("--search", ca_search, "Emit the elimination-algorithm survivors");
    cands->add_flag("--relaxed", ca_relaxed, "Closed form with step-2 runs relaxed to step 1");
    cands->add_flag("--literal", ca_literal, "Closed form without misprint corrections");
    cands->add_option("--box", ca_box, "Half-widths X Y Z of the scan box")->expected(3);
    cands->add_option("--rounds", ca_rounds, "Box-doubling stability rounds");
    cands->add_option("--cap", ca_cap, "Volume guard cap (default min(4k, 2k+8))");
    cands->add_option("--out", ca_out, "Output file (- for stdout)");

    // cascade
    auto* casc = app.add_subcommand("cascade", "Blow-up cascade graph for one k");
    int cc_k = 0;
    std::string cc_dot, cc_json;
    casc->add_option("--k", cc_k, "Singularity index (1 = smooth table)")->required();
    casc->add_option("--dot", cc_dot, "Write DOT graph here (- for stdout)");
    casc->add_option("--json", cc_json, "Write JSON graph here (- for stdout)");

    // invariants
    auto* inv = app.add_subcommand("invariants", "Invariants of a polytope JSON file");
    std::string in_input, in_out = "-";
    inv->add_option("--input", in_input, "Polytope JSON file")->required();
    inv->add_option("--out", in_out, "Output file (- for stdout)");

    // normal-form
    auto* nf = app.add_subcommand("normal-form", "GL(3,Z) normal form of a polytope JSON file");
    std::string nf_input, nf_out = "-";
    nf->add_option("--input", nf_input, "Polytope JSON file")->required();
    nf->add_option("--out", nf_out, "Output file (- for stdout)");

    // verify-tables
    auto* ver = app.add_subcommand("verify-tables", "Recompute and check the bundled tables");
    std::vector<int> ver_tables{1, 2, 3, 4};
    std::vector<int> ver_range{4, 12};
    ver->add_option("--tables", ver_tables, "Tables to verify (subset of 1 2 3 4)");
    ver->add_option("--k-range", ver_range, "k range for table 4: MIN MAX")->expected(2);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            if (cl_k == 1) {
                std::cerr << "classify: k = 1 (the smooth case) is fixture-only; "
                             "use `fano3 verify-tables --tables 1` instead\n";
                return kExitUsage;
            }
            if (cl_k < 2) {
                std::cerr << "classify: k must be >= 2\n";
                return kExitUsage;
            }
            return cmd_classify(cl_k, cl_exhaustive, cl_threads, cl_format, cl_out);
        }
        if (cands->parsed()) {
            if (ca_closed == ca_search) {
                std::cerr << "candidates: pass exactly one of --closed-form / --search\n";
                return kExitUsage;
            }
            if (ca_closed && ca_k < 4) {
                std::cerr << "candidates: the closed form is only defined for k >= 4\n";
                return kExitUsage;
            }
            if (ca_search && ca_k < 2) {
                std::cerr << "candidates: search requires k >= 2\n";
                return kExitUsage;
            }
            return cmd_candidates(ca_k, ca_closed, ca_relaxed, ca_literal,
                                  ca_box.empty() ? std::nullopt : std::make_optional(ca_box),
                                  ca_rounds, ca_cap >= 0 ? std::make_optional(ca_cap) : std::nullopt,
                                  ca_out);
        }
        if (casc->parsed()) {
            if (cc_k < 1) {
                std::cerr << "cascade: k must be >= 1\n";
                return kExitUsage;
            }
            return cmd_cascade(cc_k, cc_dot, cc_json);
        }
        if (inv->parsed()) return cmd_invariants(in_input, in_out);
        if (nf->parsed()) return cmd_normal_form(nf_input, nf_out);
        if (ver->parsed()) {
            for (int t : ver_tables)
                if (t < 1 || t > 4) {
                    std::cerr << "verify-tables: table ids must be 1..4\n";
                    return kExitUsage;
                }
            if (ver_range[0] < 2 || ver_range[1] < ver_range[0]) {
                std::cerr << "verify-tables: bad k range\n";
                return kExitUsage;
            }
            return cmd_verify_tables(ver_tables, ver_range[0], ver_range[1]);
        }
    } catch (const DomainError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
