#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "plmorse/simplex.hpp"

namespace plmorse {

class SimplicialComplex;

// A plain set of simplices, not necessarily closed under taking faces.
class SimplexSet {
public:
    SimplexSet() = default;
    explicit SimplexSet(std::vector<Simplex> simplices);

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    bool contains(const Simplex& s) const;
    const std::vector<Simplex>& simplices() const { return simplices_; }

    SimplicialComplex closure() const;

    auto begin() const { return simplices_.begin(); }
    auto end() const { return simplices_.end(); }

private:
    std::vector<Simplex> simplices_; // sorted, deduplicated
};

// Finite abstract simplicial complex, immutable once built.
// Simplices are grouped by dimension and kept sorted; the empty
// complex has dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Face closure of the given vertex tuples. Tuples may overlap and
    // may repeat; duplicates within one tuple are rejected.
    static SimplicialComplex from_maximal(const std::vector<std::vector<Vertex>>& maximal);
    static SimplicialComplex closure_of(const std::vector<Simplex>& simplices);

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t size() const { return total_; }
    std::size_t count(int dim) const;
    const std::vector<Simplex>& simplices(int dim) const;
    std::vector<Simplex> all_simplices() const;
    const std::vector<Vertex>& vertices() const { return vertices_; }

    bool contains(const Simplex& s) const;
    bool contains_vertex(Vertex v) const;
    bool empty() const { return total_ == 0; }

    // Cofaces of s, s included.
    SimplexSet star(const Simplex& s) const;
    // Faces of star members disjoint from s; a complex in its own right.
    SimplicialComplex link(const Simplex& s) const;

    // Every maximal simplex has dimension d.
    bool is_pure(int d) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.by_dim_ == b.by_dim_;
    }

private:
    void insert_with_faces(const Simplex& s);
    void finalize();

    std::vector<std::vector<Simplex>> by_dim_;
    std::unordered_set<Simplex, SimplexHash> members_;
    std::unordered_map<Vertex, std::vector<Simplex>> cofaces_; // per vertex, sorted
    std::vector<Vertex> vertices_;
    std::size_t total_ = 0;
};

std::int64_t euler_characteristic(const SimplicialComplex& K);

// Vertices of K reachable from each other through edges; each component
// is returned as a face-closed subcomplex.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& K);

bool is_connected(const SimplicialComplex& K);

// True when K is a single closed cycle: connected, pure of dimension 1,
// every vertex in exactly two edges.
bool is_single_cycle(const SimplicialComplex& K);

struct ManifoldReport {
    bool ok = true;
    std::string diagnostic; // names the first failing vertex
};

// Link conditions for a combinatorial d-manifold without boundary,
// supported for d = 1, 2, 3. K must be pure of dimension d.
ManifoldReport is_combinatorial_manifold(const SimplicialComplex& K, int d);

// True when link(v) satisfies the closed-manifold vertex condition for
// the dimension of K (two points for d = 1, one cycle for d = 2, a
// 2-sphere for d = 3).
bool link_is_sphere(const SimplicialComplex& K, Vertex v);

} // namespace plmorse
