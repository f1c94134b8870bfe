#include "plmorse/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "plmorse/error.hpp"

namespace plmorse {

Simplex::Simplex(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        fail(Errc::MalformedSimplex, "duplicate vertex in simplex " + str());
    for (Vertex v : verts_)
        if (v < 0) fail(Errc::MalformedSimplex, "negative vertex id in simplex " + str());
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

bool Simplex::has_vertex(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(),
                         verts_.begin(), verts_.end());
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (verts_.size() < 2) return out;
    out.reserve(verts_.size());
    for (std::size_t j = 0; j < verts_.size(); ++j) {
        std::vector<Vertex> face;
        face.reserve(verts_.size() - 1);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            if (i != j) face.push_back(verts_[i]);
        Simplex s;
        s.verts_ = std::move(face); // already sorted and distinct
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Simplex> Simplex::faces() const {
    std::vector<Simplex> out;
    const std::size_t n = verts_.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(verts_[i]);
        Simplex s;
        s.verts_ = std::move(face);
        out.push_back(std::move(s));
    }
    return out;
}

Simplex Simplex::without(Vertex v) const {
    if (!has_vertex(v))
        fail(Errc::MissingSimplex, "vertex " + std::to_string(v) + " not in " + str());
    std::vector<Vertex> face;
    face.reserve(verts_.size() - 1);
    for (Vertex u : verts_)
        if (u != v) face.push_back(u);
    Simplex s;
    s.verts_ = std::move(face);
    return s;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ' ';
        os << verts_[i];
    }
    os << ']';
    return os.str();
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.verts_.size() <=> b.verts_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.verts_.begin(), a.verts_.end(), b.verts_.begin(), b.verts_.end());
}

Simplex cone(Vertex v, const Simplex& s) {
    if (s.has_vertex(v))
        fail(Errc::DegenerateCone, "cone apex " + std::to_string(v) + " already in " + s.str());
    std::vector<Vertex> verts = s.vertices();
    verts.push_back(v);
    return Simplex(std::move(verts));
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Vertex v : s.vertices()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace plmorse
