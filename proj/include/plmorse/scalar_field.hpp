#pragma once

#include <unordered_map>
#include <vector>

#include "plmorse/complex.hpp"
#include "plmorse/simplex.hpp"

namespace plmorse {

// A function level together with the vertex realizing it. Ties between
// equal raw values are broken by vertex id, which makes the induced
// order on vertices total even when raw values repeat.
struct LevelKey {
    double value = 0.0;
    Vertex vertex = -1;

    friend bool operator==(const LevelKey&, const LevelKey&) = default;
    friend bool operator<(const LevelKey& a, const LevelKey& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.vertex < b.vertex;
    }
    friend bool operator<=(const LevelKey& a, const LevelKey& b) { return a == b || a < b; }
    friend bool operator>(const LevelKey& a, const LevelKey& b) { return b < a; }
    friend bool operator>=(const LevelKey& a, const LevelKey& b) { return b <= a; }
};

// Scalar values on vertices. Values must be finite.
class VertexScalarField {
public:
    VertexScalarField() = default;

    // Vertex i gets values[i].
    static VertexScalarField from_dense(const std::vector<double>& values);
    static VertexScalarField from_pairs(const std::vector<std::pair<Vertex, double>>& pairs);

    bool has(Vertex v) const { return values_.count(v) > 0; }
    double value(Vertex v) const;
    LevelKey key(Vertex v) const { return {value(v), v}; }
    std::size_t size() const { return values_.size(); }

    std::vector<double> image() const; // sorted distinct raw values
    bool injective() const;
    // Defined on exactly the vertex set of K.
    bool covers(const SimplicialComplex& K) const;

private:
    std::unordered_map<Vertex, double> values_;
};

// Maximum of f over the vertices of s, as a tiebreak key. The key's
// vertex is the maximizing vertex.
LevelKey f_max(const VertexScalarField& f, const Simplex& s);
LevelKey f_max(const SimplicialComplex& K, const VertexScalarField& f, const Simplex& s);

// Members of star(v) whose f_max key is at most key(v). Always
// contains v itself.
SimplexSet lower_star(const SimplicialComplex& K, const VertexScalarField& f, Vertex v);

// Members of link(v) all of whose vertices come strictly before v in
// the tiebreak order. Face closed, possibly empty.
SimplicialComplex lower_link(const SimplicialComplex& K, const VertexScalarField& f, Vertex v);

// Simplices with raw f_max value at most level.
SimplicialComplex sublevel_complex(const SimplicialComplex& K, const VertexScalarField& f,
                                   double level);
// Simplices whose f_max key is at most level in the tiebreak order.
SimplicialComplex sublevel_complex(const SimplicialComplex& K, const VertexScalarField& f,
                                   const LevelKey& level);

// Greatest image value strictly below level, or level - 1 when level
// is the minimum. level must lie in the image of f.
double predecessor_level(const VertexScalarField& f, double level);

// Vertices of K in ascending tiebreak order.
std::vector<Vertex> vertices_by_level(const SimplicialComplex& K, const VertexScalarField& f);

} // namespace plmorse
