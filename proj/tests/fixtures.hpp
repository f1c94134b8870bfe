#pragma once

#include <random>
#include <vector>

#include "plmorse/complex.hpp"
#include "plmorse/gvf.hpp"
#include "plmorse/scalar_field.hpp"

namespace fixtures {

using plmorse::GradientField;
using plmorse::SimplicialComplex;
using plmorse::Vertex;
using plmorse::VertexScalarField;

struct TestSpace {
    std::vector<std::vector<Vertex>> maximal;
    std::vector<double> values;
    SimplicialComplex K;
    VertexScalarField f;
};

TestSpace make(std::vector<std::vector<Vertex>> maximal, std::vector<double> values);

// One triangle with all faces.
TestSpace lone_triangle();

// Boundary of the tetrahedron on 0..3, f = id + 1.
TestSpace tetra_boundary();

// Boundary of the 4-simplex on 0..4, f = id + 1.
TestSpace pentachoron_boundary();

// Hexagonal fan: an interior vertex of value 5 whose ring carries
// values 1, 7, 3, 8, 6, 2 in cyclic order. The interior vertex is a
// classical one-saddle. Vertex ids follow the sorted values
// 1,2,3,5,6,7,8, so the center is vertex 3.
TestSpace saddle_fan();

// Same fan shape with ring values 1,2,3,5,6,7 in cyclic order and
// center value 4 (center id 6): the center is regular, its lower link
// a single arc.
TestSpace monotone_fan();

// Minimal 6-vertex triangulation of the projective plane,
// f(vertex) = vertex + 1.
TestSpace projective_plane();

// k x k vertex grid with periodic boundary, consistently split into
// 2k^2 triangles; a torus for k >= 3. Values are a shifted identity.
TestSpace torus_grid(int k = 7);

// 3-periodic Freudenthal triangulation of the 3-torus on k^3 vertices
// (6 k^3 tetrahedra).
TestSpace torus_cube(int k = 3);

// Hexagonal bipyramid (a 2-sphere). The top apex (vertex 6, value 10)
// is a monkey saddle: its lower link is three isolated ring vertices.
TestSpace monkey_bipyramid();

// Triangulated annulus, 6 triangles around a prism barrel.
TestSpace annulus();

// k x k grid (no wraparound) with row-major increasing values; every
// interior vertex is regular.
TestSpace grid_ramp(int k = 5);

// The gradient arrows pictured on the saddle fan: a valid acyclic
// matching leaving the two ring vertices of values 3 and 7 and the
// center saddle edge critical.
GradientField fan_pictured_field();

// A deliberately non relatively perfect field on the saddle fan: valid,
// acyclic, globally perfect, but pairing several vertices upward
// across levels. Only the center vertex stays critical.
GradientField fan_skew_field();

// Expected output of the gradient construction on projective_plane().
GradientField rp2_expected_field();

// Fresh injective values 1..n in random order.
std::vector<double> random_injective_values(std::size_t n, std::mt19937& rng);

} // namespace fixtures
