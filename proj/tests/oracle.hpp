#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plmorse/complex.hpp"
#include "plmorse/gvf.hpp"
#include "plmorse/homology.hpp"

// Reference implementations kept deliberately independent of the
// library internals: plain dense elimination, from-scratch boundary
// assembly, exhaustive path search. Slow and simple on purpose.
namespace oracle {

using plmorse::Field;
using plmorse::GradientField;
using plmorse::Simplex;
using plmorse::SimplicialComplex;

// Betti numbers 0..dim(K), no trailing trimming.
std::vector<std::int64_t> betti(const SimplicialComplex& K, Field F);
std::vector<std::int64_t> relative_betti(const SimplicialComplex& K, const SimplicialComplex& L,
                                         Field F);
// Reduced Betti numbers indexed from -1: out[0] is the rank in
// degree -1.
std::vector<std::int64_t> reduced_betti(const SimplicialComplex& K, Field F);

// Exhaustive search for a closed V-path.
bool has_closed_path(const GradientField& V);

// Cofaces of s found by scanning every simplex of K.
std::vector<Simplex> star_by_scan(const SimplicialComplex& K, const Simplex& s);

// A random valid partial matching on K.
GradientField random_matching(const SimplicialComplex& K, std::mt19937& rng);

} // namespace oracle
