#include "plmorse/scalar_field.hpp"

#include <algorithm>
#include <cmath>

#include "plmorse/error.hpp"

namespace plmorse {

namespace {

void check_finite(Vertex v, double x) {
    if (!std::isfinite(x))
        fail(Errc::Precondition, "non-finite value at vertex " + std::to_string(v));
}

} // namespace

VertexScalarField VertexScalarField::from_dense(const std::vector<double>& values) {
    VertexScalarField f;
    for (std::size_t i = 0; i < values.size(); ++i) {
        check_finite(static_cast<Vertex>(i), values[i]);
        f.values_[static_cast<Vertex>(i)] = values[i];
    }
    return f;
}

VertexScalarField VertexScalarField::from_pairs(const std::vector<std::pair<Vertex, double>>& pairs) {
    VertexScalarField f;
    for (const auto& [v, x] : pairs) {
        check_finite(v, x);
        if (!f.values_.emplace(v, x).second)
            fail(Errc::Precondition, "vertex " + std::to_string(v) + " assigned twice");
    }
    return f;
}

double VertexScalarField::value(Vertex v) const {
    auto it = values_.find(v);
    if (it == values_.end())
        fail(Errc::Precondition, "field undefined at vertex " + std::to_string(v));
    return it->second;
}

std::vector<double> VertexScalarField::image() const {
    std::vector<double> vals;
    vals.reserve(values_.size());
    for (const auto& [v, x] : values_) vals.push_back(x);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

bool VertexScalarField::injective() const {
    return image().size() == values_.size();
}

bool VertexScalarField::covers(const SimplicialComplex& K) const {
    if (values_.size() != K.count(0)) return false;
    for (Vertex v : K.vertices())
        if (!has(v)) return false;
    return true;
}

LevelKey f_max(const VertexScalarField& f, const Simplex& s) {
    if (s.empty())
        fail(Errc::Precondition, "f_max of the empty simplex");
    LevelKey best{f.value(s.vertices()[0]), s.vertices()[0]};
    for (std::size_t i = 1; i < s.vertices().size(); ++i) {
        LevelKey k{f.value(s.vertices()[i]), s.vertices()[i]};
        if (best < k) best = k;
    }
    return best;
}

LevelKey f_max(const SimplicialComplex& K, const VertexScalarField& f, const Simplex& s) {
    if (!K.contains(s))
        fail(Errc::MissingSimplex, "f_max of " + s.str() + ": simplex not in complex");
    return f_max(f, s);
}

SimplexSet lower_star(const SimplicialComplex& K, const VertexScalarField& f, Vertex v) {
    LevelKey kv = f.key(v);
    std::vector<Simplex> out;
    for (const Simplex& s : K.star(Simplex{v}))
        if (f_max(f, s) <= kv) out.push_back(s);
    return SimplexSet(std::move(out));
}

SimplicialComplex lower_link(const SimplicialComplex& K, const VertexScalarField& f, Vertex v) {
    LevelKey kv = f.key(v);
    SimplicialComplex L = K.link(Simplex{v});
    std::vector<Simplex> below;
    for (const Simplex& s : L.all_simplices())
        if (f_max(f, s) < kv) below.push_back(s);
    return SimplicialComplex::closure_of(below);
}

SimplicialComplex sublevel_complex(const SimplicialComplex& K, const VertexScalarField& f,
                                   double level) {
    std::vector<Simplex> in;
    for (const Simplex& s : K.all_simplices())
        if (f_max(f, s).value <= level) in.push_back(s);
    return SimplicialComplex::closure_of(in);
}

SimplicialComplex sublevel_complex(const SimplicialComplex& K, const VertexScalarField& f,
                                   const LevelKey& level) {
    std::vector<Simplex> in;
    for (const Simplex& s : K.all_simplices())
        if (f_max(f, s) <= level) in.push_back(s);
    return SimplicialComplex::closure_of(in);
}

double predecessor_level(const VertexScalarField& f, double level) {
    std::vector<double> img = f.image();
    auto it = std::lower_bound(img.begin(), img.end(), level);
    if (it == img.end() || *it != level)
        fail(Errc::InvalidLevel, "level " + std::to_string(level) + " not in the image of f");
    if (it == img.begin()) return level - 1.0;
    return *(it - 1);
}

std::vector<Vertex> vertices_by_level(const SimplicialComplex& K, const VertexScalarField& f) {
    std::vector<Vertex> vs = K.vertices();
    std::sort(vs.begin(), vs.end(),
              [&](Vertex a, Vertex b) { return f.key(a) < f.key(b); });
    return vs;
}

} // namespace plmorse
