#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace plmorse {

using Vertex = std::int32_t;

// An abstract simplex: a vertex tuple kept strictly increasing.
// Ordering is by dimension first, then lexicographic on vertices.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    bool empty() const { return verts_.empty(); }
    const std::vector<Vertex>& vertices() const { return verts_; }

    bool has_vertex(Vertex v) const;
    bool is_face_of(const Simplex& other) const;

    // Codimension-1 faces in the order "omit vertex j", j = 0..dim.
    std::vector<Simplex> facets() const;
    // All nonempty faces, the simplex itself included.
    std::vector<Simplex> faces() const;
    Simplex without(Vertex v) const;

    std::string str() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

private:
    std::vector<Vertex> verts_;
};

// v * s; errors if v already lies in s.
Simplex cone(Vertex v, const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

} // namespace plmorse
