#include "fano3/cascade.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fano3/classify.hpp"
#include "fano3/cones.hpp"

namespace fano3 {

namespace {

bool facet_smooth(const FanoPolytope& p, const Facet& f) {
    if (f.vertex_indices.size() != 3) return false;
    Int d = det3(p.vertices()[f.vertex_indices[0]], p.vertices()[f.vertex_indices[1]],
                 p.vertices()[f.vertex_indices[2]]);
    return d == 1 || d == -1;
}

std::vector<Blowup> keep_valid(const FanoPolytope& p, int k,
                               const std::vector<LatticePoint>& added) {
    std::vector<Blowup> out;
    for (const auto& w : added) {
        std::vector<LatticePoint> pts(p.vertices());
        pts.push_back(w);
        FanoPolytope q;
        try {
            q = convex_hull(pts, k);
        } catch (const DomainError&) {
            continue;  // vertex-count cap
        }
        if (q.vertices().size() != p.vertices().size() + 1) continue;
        if (!validate(q, k)) continue;
        out.push_back({q, w});
    }
    return out;
}

}  // namespace

std::vector<Blowup> point_blowups(const FanoPolytope& p, int k) {
    std::vector<LatticePoint> added;
    for (const auto& f : p.facets()) {
        if (!facet_smooth(p, f)) continue;
        LatticePoint w = p.vertices()[f.vertex_indices[0]] + p.vertices()[f.vertex_indices[1]] +
                         p.vertices()[f.vertex_indices[2]];
        added.push_back(w);
    }
    return keep_valid(p, k, added);
}

std::vector<Blowup> line_blowups(const FanoPolytope& p, int k) {
    // Edges: vertex pairs shared by exactly two facets; both adjacent facet
    // cones must be smooth.
    std::map<std::pair<int, int>, std::vector<const Facet*>> edge_facets;
    for (const auto& f : p.facets()) {
        const auto& vi = f.vertex_indices;
        for (size_t a = 0; a < vi.size(); ++a)
            for (size_t b = a + 1; b < vi.size(); ++b)
                edge_facets[{vi[a], vi[b]}].push_back(&f);
    }
    std::vector<LatticePoint> added;
    for (const auto& [edge, fs] : edge_facets) {
        if (fs.size() != 2) continue;  // vertex pair on one facet only: not an edge
        if (!facet_smooth(p, *fs[0]) || !facet_smooth(p, *fs[1])) continue;
        added.push_back(p.vertices()[edge.first] + p.vertices()[edge.second]);
    }
    return keep_valid(p, k, added);
}

CascadeGraph build_cascade(const std::vector<ClassificationEntry>& entries) {
    CascadeGraph g;
    g.nodes = entries;
    if (entries.empty()) return g;
    const int k = entries.front().k;
    for (const auto& e : entries)
        if (e.k != k) throw DomainError("build_cascade: entries mix different k");

    std::map<IntMatrix, const ClassificationEntry*> by_nf;
    for (const auto& e : entries) by_nf.emplace(normal_form(e.polytope), &e);

    // Several centers can realize the same blow-up relation; the graph keeps
    // one edge per (from, to, color), with the lexicographically least added
    // vertex as representative.
    std::map<std::tuple<std::string, std::string, EdgeColor>, LatticePoint> collapsed;
    for (const auto& e : entries) {
        auto record = [&](const std::vector<Blowup>& blows, EdgeColor color) {
            for (const auto& b : blows) {
                auto it = by_nf.find(normal_form(b.polytope));
                if (it == by_nf.end()) continue;
                const ClassificationEntry& up = *it->second;  // the blow-up
                if (up.polytope.vertices().size() != e.polytope.vertices().size() + 1)
                    throw InvariantViolation("build_cascade: vertex count mismatch on edge " +
                                             up.id + " -> " + e.id);
                if (!(up.degree < e.degree))
                    throw InvariantViolation("build_cascade: degree does not drop on edge " +
                                             up.id + " -> " + e.id);
                auto key = std::make_tuple(up.id, e.id, color);
                auto [pos, inserted] = collapsed.emplace(key, b.added_vertex);
                if (!inserted && b.added_vertex < pos->second) pos->second = b.added_vertex;
            }
        };
        record(point_blowups(e.polytope, k), EdgeColor::Blue);
        record(line_blowups(e.polytope, k), EdgeColor::Red);
    }
    for (const auto& [key, added] : collapsed)
        g.edges.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), added});
    std::sort(g.edges.begin(), g.edges.end(), [](const CascadeEdge& a, const CascadeEdge& b) {
        if (a.from_id != b.from_id) return a.from_id < b.from_id;
        if (a.to_id != b.to_id) return a.to_id < b.to_id;
        return a.added_vertex < b.added_vertex;
    });
    return g;
}

std::string to_dot(const CascadeGraph& g) {
    std::ostringstream os;
    os << "digraph cascade {\n";
    os << "  rankdir=BT;\n";
    std::map<int, std::vector<std::string>> by_rank;
    for (const auto& n : g.nodes) by_rank[n.picard_rank].push_back(n.id);
    for (auto& [rank, ids] : by_rank) {
        std::sort(ids.begin(), ids.end());
        os << "  { rank=same;";
        for (const auto& id : ids) os << " \"" << id << "\";";
        os << " }\n";
    }
    for (const auto& e : g.edges)
        os << "  \"" << e.from_id << "\" -> \"" << e.to_id << "\" [color="
           << (e.color == EdgeColor::Blue ? "blue" : "red") << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace fano3
