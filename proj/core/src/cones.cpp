#include "fano3/cones.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace fano3 {

SimplicialCone::SimplicialCone(LatticePoint a, LatticePoint b, LatticePoint c)
    : generators{std::move(a), std::move(b), std::move(c)} {
    for (const auto& g : generators)
        if (!is_primitive(g)) throw DomainError("SimplicialCone: non-primitive generator");
    if (det3(generators[0], generators[1], generators[2]) == 0)
        throw DomainError("SimplicialCone: dependent generators");
}

std::string ConeType::str() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::Smooth: os << "smooth"; break;
        case Tag::QuotientOneOverK: os << "1/" << index << "(1,1,1)"; break;
        case Tag::Other: os << "other(index " << index << ")"; break;
    }
    return os.str();
}

Int cone_index(const SimplicialCone& c) {
    return abs(det3(c.generators[0], c.generators[1], c.generators[2]));
}

IntMatrix cone_canonical_form(const SimplicialCone& c) {
    std::array<int, 3> idx{0, 1, 2};
    IntMatrix best(1, 1);
    bool first = true;
    do {
        IntMatrix m = IntMatrix::from_columns(
            {c.generators[idx[0]], c.generators[idx[1]], c.generators[idx[2]]});
        IntMatrix h = hermite_normal_form(m);
        if (first || h < best) {
            best = h;
            first = false;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

SimplicialCone reference_cone(int k) {
    if (k < 1) throw DomainError("reference_cone: k must be positive");
    return SimplicialCone({1, 0, 0}, {0, 1, 0}, {-1, -1, -k});
}

namespace {

const IntMatrix& reference_canonical_form(int k) {
    static std::mutex mu;
    static std::map<int, IntMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, cone_canonical_form(reference_cone(k))).first;
    return it->second;
}

}  // namespace

ConeType classify_cone(const SimplicialCone& c, int k) {
    if (k < 1) throw DomainError("classify_cone: k must be positive");
    Int idx = cone_index(c);
    if (idx == 1) return ConeType::smooth();
    if (k >= 2 && idx == k && cone_canonical_form(c) == reference_canonical_form(k))
        return ConeType::quotient(idx);
    return ConeType::other(idx);
}

}  // namespace fano3
