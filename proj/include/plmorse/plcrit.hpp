#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plmorse/complex.hpp"
#include "plmorse/homology.hpp"
#include "plmorse/scalar_field.hpp"

namespace plmorse {

enum class CriticalKind { Regular, Minimum, Maximum, Saddle };

const char* kind_name(CriticalKind k);

// The four classifiers. Index and Wedge are the surface-only curvature
// style counts; Homology inspects the lower-star pair, LowerLink the
// reduced homology of the lower link. Report letters: I, W, H, L.
enum class Classifier { Index, Wedge, Homology, LowerLink };

const char* classifier_letter(Classifier c);

struct PLClassification {
    Vertex vertex = -1;
    CriticalKind kind = CriticalKind::Regular;
    // Nonzero multiplicities by index: k_i > 0 means critical of index
    // i with multiplicity k_i.
    std::map<int, std::int64_t> multiplicities;
    std::int64_t total_multiplicity = 0;
    Classifier source = Classifier::Homology;
    // False when two or more indices are simultaneously nonzero.
    bool simple = true;
};

// Same verdict about the vertex regardless of which classifier
// produced it.
bool same_verdict(const PLClassification& a, const PLClassification& b);

// Triangles of star(v) whose vertex values straddle f(v). Only
// meaningful on 2-complexes.
int middle_triangle_count(const SimplicialComplex& K, const VertexScalarField& f, Vertex v);

// 1 - middle_triangle_count / 2.
int banchoff_index(const SimplicialComplex& K, const VertexScalarField& f, Vertex v);

// Number of lower wedges at v: connected components of the lower
// link, except that an empty or full lower link counts as 0.
int wedge_count(const SimplicialComplex& K, const VertexScalarField& f, Vertex v);

// The two curvature-style classifications. Both require link(v) to be
// a single closed cycle and fail with a precondition error otherwise.
PLClassification i_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v);
PLClassification w_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v);

// k_i = rank H_i(closure(lower_star(v)), lower_link(v)).
PLClassification h_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v,
                            Field F = Field::GF2);

// k_i = reduced rank of H_{i-1}(lower_link(v)).
PLClassification l_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v,
                            Field F = Field::GF2);

struct VertexVerdicts {
    Vertex vertex = -1;
    double value = 0.0;
    PLClassification homology;
    PLClassification lower_link;
    // Present on 2-complexes at vertices whose link is a cycle.
    std::optional<PLClassification> index;
    std::optional<PLClassification> wedge;
    bool agree = true;
};

struct ClassificationSummary {
    std::vector<VertexVerdicts> vertices; // ascending vertex id
    bool all_agree = true;
    std::vector<Vertex> disagreements;
    bool pl_morse = true;     // every critical vertex simple with multiplicity 1
    std::int64_t critical_count = 0;
};

ClassificationSummary classify_all(const SimplicialComplex& K, const VertexScalarField& f,
                                   Field F = Field::GF2);

bool is_pl_morse(const SimplicialComplex& K, const VertexScalarField& f, Field F = Field::GF2);

} // namespace plmorse
