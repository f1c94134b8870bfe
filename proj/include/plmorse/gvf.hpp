#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plmorse/complex.hpp"
#include "plmorse/homology.hpp"
#include "plmorse/scalar_field.hpp"

namespace plmorse {

// A matched facet pair: tail has codimension 1 in head.
struct GradientPair {
    Simplex tail;
    Simplex head;

    friend bool operator==(const GradientPair&, const GradientPair&) = default;
    friend auto operator<=>(const GradientPair&, const GradientPair&) = default;
};

// A discrete vector field given as a list of facet pairs. Construction
// does not validate; validate_matching reports problems as data, so
// deliberately broken fields can be represented and examined.
class GradientField {
public:
    GradientField() = default;
    explicit GradientField(std::vector<GradientPair> pairs);

    const std::vector<GradientPair>& pairs() const { return pairs_; }
    std::size_t pair_count() const { return pairs_.size(); }

    enum class Role { Unpaired, Tail, Head };
    Role role(const Simplex& s) const;
    // Partner under the matching, or nullptr. Meaningful only when the
    // field is a valid matching.
    const Simplex* partner(const Simplex& s) const;

    static GradientField merge(const std::vector<GradientField>& fields);

private:
    std::vector<GradientPair> pairs_; // canonical order
    std::unordered_map<Simplex, std::pair<int, Role>, SimplexHash> lookup_;
};

// Simplices of K not covered by any pair, grouped canonically.
std::vector<Simplex> critical_simplices(const SimplicialComplex& K, const GradientField& V);

struct MatchingViolation {
    enum class Kind { OutsideComplex, NotFacet, DuplicateMembership };
    Kind kind;
    GradientPair pair;
    std::string detail;
};

struct MatchingReport {
    bool ok = true;
    std::vector<MatchingViolation> violations;
};

// Checks that V is a partial matching of the facet graph of K: both
// members of each pair lie in K, the tail is a codimension-1 face of
// the head, and no simplex occurs in two pairs.
MatchingReport validate_matching(const SimplicialComplex& K, const GradientField& V);

struct AcyclicityReport {
    bool acyclic = true;
    // One closed V-path as witness when not acyclic, as the list of
    // its pairs in path order.
    std::vector<GradientPair> witness;
};

// V must be a valid matching on K.
AcyclicityReport is_acyclic(const SimplicialComplex& K, const GradientField& V);

struct MorseProfile {
    std::vector<std::int64_t> m; // critical count by dimension

    struct LevelEntry {
        LevelKey level;
        std::vector<std::int64_t> m;
        std::vector<Simplex> critical;
    };
    // One entry per vertex level, ascending in the tiebreak order.
    std::vector<LevelEntry> levels;
};

MorseProfile morse_profile(const SimplicialComplex& K, const VertexScalarField& f,
                           const GradientField& V);

struct WeakMorseRow {
    int dim = 0;
    std::int64_t critical_count = 0;
    std::int64_t betti = 0;
    std::int64_t slack = 0;
};

struct WeakMorseReport {
    std::vector<WeakMorseRow> rows;
    bool holds = true;   // m_i >= beta_i in every dimension
    bool perfect = true; // equality in every dimension
};

WeakMorseReport check_weak_morse(const SimplicialComplex& K, const GradientField& V,
                                 Field F = Field::GF2);

struct RPMismatch {
    LevelKey level;
    int dim = 0;
    std::int64_t critical_count = 0;
    std::int64_t betti = 0;
};

struct RPCertificate {
    bool relatively_perfect = true;
    std::vector<RPMismatch> mismatches;
};

// Per level l of f, compares the critical counts of V at level l
// against the Betti numbers of the sublevel pair at l. The pair's
// homology is computed two ways, from the sublevel complexes and from
// the lower star of the owning vertex; disagreement between the two
// routes is an internal error.
RPCertificate check_relative_perfectness(const SimplicialComplex& K, const VertexScalarField& f,
                                         const GradientField& V, Field F = Field::GF2);

} // namespace plmorse
