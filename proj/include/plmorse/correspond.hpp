#pragma once

#include <string>
#include <vector>

#include "plmorse/gvf.hpp"
#include "plmorse/plcrit.hpp"

namespace plmorse {

// One PL critical vertex and index against the critical simplices the
// field assigns to it. matched lists the critical multiplicity-dim
// simplices owned by the vertex (their f_max is attained at it),
// together with their raw levels.
struct CorrespondenceEntry {
    Vertex vertex = -1;
    double level = 0.0;
    int index = 0;
    std::int64_t multiplicity = 0; // expected count, from the homology classifier
    std::vector<std::pair<Simplex, double>> matched;
};

struct CorrespondenceMap {
    std::vector<CorrespondenceEntry> entries;
    // Critical simplices owned by PL-regular vertices, or of an index
    // the owner is not critical in.
    std::vector<Simplex> unmatched;
    // Every multiplicity is 1, every entry matched exactly once, and
    // nothing is unmatched.
    bool bijective = false;
};

// Pairs the homology classification of (K, f) with the critical
// simplices of V, by owning vertex and dimension.
CorrespondenceMap correspondence(const SimplicialComplex& K, const VertexScalarField& f,
                                 const GradientField& V, Field F = Field::GF2);

struct CorrespondenceCertificate {
    bool clean = true;
    std::vector<std::string> violations;
};

// Re-checks a map against its own data: each matched simplex must
// contain its vertex and sit at its level, counts must meet the
// expected multiplicities, and under a PL Morse claim the map must be
// bijective.
CorrespondenceCertificate verify_correspondence(const CorrespondenceMap& map, bool pl_morse);

} // namespace plmorse
