#pragma once

#include <optional>

#include "plmorse/complex.hpp"
#include "plmorse/gvf.hpp"
#include "plmorse/scalar_field.hpp"

namespace plmorse {

// A free face pair: an edge contained in exactly one triangle,
// together with that triangle. Lexicographically smallest such edge
// first; nullopt when none exists.
std::optional<GradientPair> find_free_face(const SimplicialComplex& two_complex);

struct CollapseTrace {
    std::vector<GradientPair> removed; // in removal order
    SimplicialComplex residual;
};

// Repeats elementary free-face collapses until no triangle has a free
// edge. The residual is 1-dimensional iff the input collapses.
CollapseTrace collapse_free_faces(const SimplicialComplex& two_complex);

// Rooted spanning forest as a matching: in each connected component
// the smallest vertex stays critical, every other vertex is paired
// with the edge towards its BFS parent, non-tree edges stay critical.
// Input must have dimension at most 1.
GradientField spanning_forest_gradient(const SimplicialComplex& one_complex);

// A perfect gradient field on a complex embeddable in the 2-sphere
// (or equal to it). Closed surface components get one critical
// triangle and collapse from there; everything else collapses to a
// forest directly. Fails when some component does not collapse.
GradientField perfect_gradient_s2_subcomplex(const SimplicialComplex& K);

// Lifts a field W on lower_link(v) through the cone with apex v:
// pairs (a, b) become (va, vb), v is paired with the cone over the
// lowest critical vertex of W, cones over remaining critical
// simplices of W stay critical.
GradientField cone_gradient(Vertex apex, const VertexScalarField& f,
                            const SimplicialComplex& lower_link_of_apex,
                            const GradientField& link_field);

// The field the construction assigns inside the lower star of v: the
// cone lift of a perfect field on the lower link, or no pairs at all
// when the lower link is empty (v stays critical).
GradientField lower_star_gradient(const SimplicialComplex& K, const VertexScalarField& f,
                                  Vertex v);

// Union of the lower star fields over all vertices. Defined for
// complexes of dimension at most 3 whose lower links all collapse;
// combinatorial manifolds always qualify.
GradientField build_rp_gradient(const SimplicialComplex& K, const VertexScalarField& f);

} // namespace plmorse
