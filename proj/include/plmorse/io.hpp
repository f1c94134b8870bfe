#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plmorse/complex.hpp"
#include "plmorse/gvf.hpp"
#include "plmorse/scalar_field.hpp"

namespace plmorse {

// A parsed input: maximal simplices over dense vertex ids 0..n-1,
// one value per vertex, optional geometry when the source was a mesh.
struct ComplexDocument {
    std::string name;
    std::vector<std::vector<Vertex>> maximal_simplices;
    std::vector<double> values;
    std::optional<int> expected_dimension;
    std::vector<std::array<double, 3>> coords; // empty for purely topological input

    SimplicialComplex complex() const;
    VertexScalarField field() const;
};

// {"maximal_simplices": [[...], ...], "values": [...]} with optional
// "name" and "dimension". Vertex ids may be sparse; they are
// renumbered densely in increasing order, values follow along.
ComplexDocument parse_complex_json(const std::string& text);

// OFF mesh plus a values sidecar, one value per vertex line. Parse
// errors carry 1-based line numbers.
ComplexDocument parse_complex_off(const std::string& off_text, const std::string& vals_text);

// Reads path by extension: .off plus sidecar <stem>.vals (fallback
// <path>.vals), anything else as JSON.
ComplexDocument load_complex(const std::string& path);

std::string emit_complex_json(const ComplexDocument& doc);

// A gradient field file is a JSON array of [tail, head] vertex tuples.
GradientField parse_gradient_json(const std::string& text);
GradientField load_gradient(const std::string& path);
std::string emit_gradient_json(const GradientField& V);

} // namespace plmorse
