#include "plmorse/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "plmorse/error.hpp"

namespace plmorse {

SimplexSet::SimplexSet(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
    std::sort(simplices_.begin(), simplices_.end());
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
}

bool SimplexSet::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
}

SimplicialComplex SimplexSet::closure() const {
    return SimplicialComplex::closure_of(simplices_);
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<Vertex>>& maximal) {
    SimplicialComplex K;
    for (const auto& tuple : maximal)
        K.insert_with_faces(Simplex(tuple));
    K.finalize();
    return K;
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Simplex>& simplices) {
    SimplicialComplex K;
    for (const Simplex& s : simplices)
        K.insert_with_faces(s);
    K.finalize();
    return K;
}

void SimplicialComplex::insert_with_faces(const Simplex& s) {
    if (s.empty()) return;
    for (Simplex& face : s.faces()) {
        if (members_.insert(face).second) {
            int d = face.dim();
            if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
            by_dim_[d].push_back(std::move(face));
        }
    }
}

void SimplicialComplex::finalize() {
    total_ = 0;
    for (auto& level : by_dim_) {
        std::sort(level.begin(), level.end());
        total_ += level.size();
    }
    if (!by_dim_.empty()) {
        vertices_.clear();
        vertices_.reserve(by_dim_[0].size());
        for (const Simplex& s : by_dim_[0])
            vertices_.push_back(s.vertices()[0]);
    }
    cofaces_.clear();
    for (const auto& level : by_dim_)
        for (const Simplex& s : level)
            for (Vertex v : s.vertices())
                cofaces_[v].push_back(s);
    for (auto& [v, list] : cofaces_)
        std::sort(list.begin(), list.end());
}

std::size_t SimplicialComplex::count(int dim) const {
    if (dim < 0 || dim > dimension()) return 0;
    return by_dim_[dim].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> none;
    if (dim < 0 || dim > dimension()) return none;
    return by_dim_[dim];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(total_);
    for (const auto& level : by_dim_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return members_.count(s) > 0;
}

bool SimplicialComplex::contains_vertex(Vertex v) const {
    return cofaces_.count(v) > 0;
}

SimplexSet SimplicialComplex::star(const Simplex& s) const {
    if (!contains(s))
        fail(Errc::MissingSimplex, "star of " + s.str() + ": simplex not in complex");
    std::vector<Simplex> cof;
    const auto& candidates = cofaces_.at(s.vertices()[0]);
    for (const Simplex& t : candidates)
        if (s.is_face_of(t)) cof.push_back(t);
    return SimplexSet(std::move(cof));
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    SimplexSet st = star(s);
    std::vector<Simplex> generators;
    for (const Simplex& t : st) {
        if (t == s) continue;
        std::vector<Vertex> rest;
        for (Vertex v : t.vertices())
            if (!s.has_vertex(v)) rest.push_back(v);
        if (!rest.empty()) generators.emplace_back(std::move(rest));
    }
    return SimplicialComplex::closure_of(generators);
}

bool SimplicialComplex::is_pure(int d) const {
    if (dimension() != d) return false;
    for (int i = 0; i < d; ++i) {
        for (const Simplex& s : by_dim_[i]) {
            bool has_coface = false;
            for (const Simplex& t : cofaces_.at(s.vertices()[0])) {
                if (t.dim() == i + 1 && s.is_face_of(t)) { has_coface = true; break; }
            }
            if (!has_coface) return false;
        }
    }
    return true;
}

std::int64_t euler_characteristic(const SimplicialComplex& K) {
    std::int64_t chi = 0;
    for (int d = 0; d <= K.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(K.count(d));
    return chi;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& K) {
    std::vector<SimplicialComplex> parts;
    if (K.empty()) return parts;

    std::map<Vertex, Vertex> root; // vertex -> component representative
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Simplex& e : K.simplices(1)) {
        adj[e.vertices()[0]].push_back(e.vertices()[1]);
        adj[e.vertices()[1]].push_back(e.vertices()[0]);
    }
    for (Vertex v : K.vertices()) {
        if (root.count(v)) continue;
        std::queue<Vertex> q;
        q.push(v);
        root[v] = v;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : adj[u])
                if (!root.count(w)) { root[w] = v; q.push(w); }
        }
    }

    std::map<Vertex, std::vector<Simplex>> groups;
    for (const Simplex& s : K.all_simplices())
        groups[root.at(s.vertices()[0])].push_back(s);
    for (auto& [rep, simplices] : groups)
        parts.push_back(SimplicialComplex::closure_of(simplices));
    return parts;
}

bool is_connected(const SimplicialComplex& K) {
    return connected_components(K).size() == 1;
}

bool is_single_cycle(const SimplicialComplex& K) {
    if (K.dimension() != 1 || !K.is_pure(1)) return false;
    if (!is_connected(K)) return false;
    std::map<Vertex, int> degree;
    for (const Simplex& e : K.simplices(1)) {
        ++degree[e.vertices()[0]];
        ++degree[e.vertices()[1]];
    }
    if (degree.size() != K.count(0)) return false;
    for (const auto& [v, d] : degree)
        if (d != 2) return false;
    return K.count(0) == K.count(1);
}

namespace {

bool link_condition(const SimplicialComplex& L, int d, std::string& why) {
    if (d == 1) {
        if (L.dimension() == 0 && L.count(0) == 2) return true;
        why = "link is not two points";
        return false;
    }
    if (d == 2) {
        if (is_single_cycle(L)) return true;
        why = "link is not a single closed cycle";
        return false;
    }
    // d == 3: link must be a 2-sphere.
    if (L.dimension() != 2 || !L.is_pure(2)) {
        why = "link is not a pure 2-complex";
        return false;
    }
    std::map<Simplex, int> tri_count;
    for (const Simplex& t : L.simplices(2))
        for (const Simplex& e : t.facets())
            ++tri_count[e];
    for (const Simplex& e : L.simplices(1)) {
        auto it = tri_count.find(e);
        if (it == tri_count.end() || it->second != 2) {
            why = "link edge " + e.str() + " is not in exactly two triangles";
            return false;
        }
    }
    for (Vertex u : L.vertices()) {
        if (!is_single_cycle(L.link(Simplex{u}))) {
            why = "link of link vertex " + std::to_string(u) + " is not a cycle";
            return false;
        }
    }
    if (!is_connected(L)) {
        why = "link is not connected";
        return false;
    }
    if (euler_characteristic(L) != 2) {
        why = "link has Euler characteristic " + std::to_string(euler_characteristic(L));
        return false;
    }
    return true;
}

} // namespace

ManifoldReport is_combinatorial_manifold(const SimplicialComplex& K, int d) {
    if (d < 1 || d > 3)
        fail(Errc::UnsupportedDimension,
             "manifold check supports dimensions 1 to 3, got " + std::to_string(d));
    if (K.dimension() != d || !K.is_pure(d))
        fail(Errc::NotPure, "complex is not pure of dimension " + std::to_string(d));

    for (Vertex v : K.vertices()) {
        std::string why;
        if (!link_condition(K.link(Simplex{v}), d, why))
            return {false, "vertex " + std::to_string(v) + ": " + why};
    }
    return {true, ""};
}

bool link_is_sphere(const SimplicialComplex& K, Vertex v) {
    std::string why;
    return link_condition(K.link(Simplex{v}), K.dimension(), why);
}

} // namespace plmorse
