#include "plmorse/plcrit.hpp"

#include <algorithm>

#include "plmorse/error.hpp"

namespace plmorse {

const char* kind_name(CriticalKind k) {
    switch (k) {
    case CriticalKind::Regular: return "regular";
    case CriticalKind::Minimum: return "minimum";
    case CriticalKind::Maximum: return "maximum";
    case CriticalKind::Saddle: return "saddle";
    }
    return "unknown";
}

const char* classifier_letter(Classifier c) {
    switch (c) {
    case Classifier::Index: return "I";
    case Classifier::Wedge: return "W";
    case Classifier::Homology: return "H";
    case Classifier::LowerLink: return "L";
    }
    return "?";
}

namespace {

PLClassification from_multiplicities(Vertex v, std::map<int, std::int64_t> mults, int d,
                                     Classifier source) {
    PLClassification out;
    out.vertex = v;
    out.source = source;
    std::erase_if(mults, [](const auto& kv) { return kv.second == 0; });
    out.multiplicities = std::move(mults);
    for (const auto& [i, k] : out.multiplicities) out.total_multiplicity += k;
    out.simple = out.multiplicities.size() <= 1;

    if (out.multiplicities.empty()) {
        out.kind = CriticalKind::Regular;
    } else if (out.multiplicities.size() == 1 && out.multiplicities.count(0) &&
               out.multiplicities.at(0) == 1) {
        out.kind = CriticalKind::Minimum;
    } else if (out.multiplicities.size() == 1 && out.multiplicities.count(d) &&
               out.multiplicities.at(d) == 1) {
        out.kind = CriticalKind::Maximum;
    } else {
        out.kind = CriticalKind::Saddle;
    }
    return out;
}

void require_circle_link(const SimplicialComplex& K, Vertex v, const char* who) {
    if (K.dimension() != 2)
        fail(Errc::UnsupportedDimension,
             std::string(who) + " needs a 2-complex, got dimension " +
                 std::to_string(K.dimension()));
    if (!is_single_cycle(K.link(Simplex{v})))
        fail(Errc::Precondition, std::string(who) + ": link of vertex " + std::to_string(v) +
                                     " is not a single closed cycle");
}

} // namespace

bool same_verdict(const PLClassification& a, const PLClassification& b) {
    return a.kind == b.kind && a.multiplicities == b.multiplicities;
}

int middle_triangle_count(const SimplicialComplex& K, const VertexScalarField& f, Vertex v) {
    if (K.dimension() != 2)
        fail(Errc::UnsupportedDimension, "middle triangle count needs a 2-complex");
    LevelKey kv = f.key(v);
    int count = 0;
    for (const Simplex& t : K.star(Simplex{v})) {
        if (t.dim() != 2) continue;
        bool below = false, above = false;
        for (Vertex u : t.vertices()) {
            if (u == v) continue;
            (f.key(u) < kv ? below : above) = true;
        }
        if (below && above) ++count;
    }
    return count;
}

int banchoff_index(const SimplicialComplex& K, const VertexScalarField& f, Vertex v) {
    int mid = middle_triangle_count(K, f, v);
    if (mid % 2 != 0)
        fail(Errc::Precondition, "odd middle triangle count at vertex " + std::to_string(v));
    return 1 - mid / 2;
}

PLClassification i_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v) {
    require_circle_link(K, v, "index classification");
    int iota = banchoff_index(K, f, v);

    std::map<int, std::int64_t> mults;
    if (iota == 1) {
        // Extremum. A vertex with no middle triangles on a cycle link
        // has its lower star equal to either {v} or the whole star.
        std::size_t low = lower_star(K, f, v).size();
        std::size_t all = K.star(Simplex{v}).size();
        if (low == 1) mults[0] = 1;
        else if (low == all) mults[2] = 1;
        else fail(Errc::Precondition, "index 1 with mixed lower star at vertex " + std::to_string(v));
    } else if (iota < 0) {
        mults[1] = -iota;
    } else if (iota != 0) {
        fail(Errc::Precondition, "index " + std::to_string(iota) + " out of range at vertex " +
                                     std::to_string(v));
    }
    return from_multiplicities(v, std::move(mults), 2, Classifier::Index);
}

int wedge_count(const SimplicialComplex& K, const VertexScalarField& f, Vertex v) {
    require_circle_link(K, v, "wedge count");
    SimplicialComplex low = lower_link(K, f, v);
    if (low.empty()) return 0;
    if (low.size() == K.link(Simplex{v}).size()) return 0;
    return static_cast<int>(connected_components(low).size());
}

PLClassification w_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v) {
    int w = wedge_count(K, f, v);
    std::map<int, std::int64_t> mults;
    if (w == 0) {
        if (lower_star(K, f, v).size() == 1) mults[0] = 1;
        else mults[2] = 1;
    } else if (w > 1) {
        mults[1] = w - 1;
    }
    return from_multiplicities(v, std::move(mults), 2, Classifier::Wedge);
}

PLClassification h_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v,
                            Field F) {
    SimplicialComplex pair_space = lower_star(K, f, v).closure();
    SimplicialComplex low = lower_link(K, f, v);
    BettiVector b = relative_betti(pair_space, low, F);

    std::map<int, std::int64_t> mults;
    for (int i = 0; i <= std::max(K.dimension(), b.top_degree()); ++i)
        if (b[i] != 0) mults[i] = b[i];
    return from_multiplicities(v, std::move(mults), K.dimension(), Classifier::Homology);
}

PLClassification l_classify(const SimplicialComplex& K, const VertexScalarField& f, Vertex v,
                            Field F) {
    BettiVector b = reduced_betti(lower_link(K, f, v), F);

    std::map<int, std::int64_t> mults;
    for (int i = 0; i <= std::max(K.dimension(), b.top_degree() + 1); ++i)
        if (b[i - 1] != 0) mults[i] = b[i - 1];
    return from_multiplicities(v, std::move(mults), K.dimension(), Classifier::LowerLink);
}

ClassificationSummary classify_all(const SimplicialComplex& K, const VertexScalarField& f,
                                   Field F) {
    ClassificationSummary out;
    for (Vertex v : K.vertices()) {
        VertexVerdicts row;
        row.vertex = v;
        row.value = f.value(v);
        row.homology = h_classify(K, f, v, F);
        row.lower_link = l_classify(K, f, v, F);
        row.agree = same_verdict(row.homology, row.lower_link);

        if (K.dimension() == 2 && is_single_cycle(K.link(Simplex{v}))) {
            row.index = i_classify(K, f, v);
            row.wedge = w_classify(K, f, v);
            row.agree = row.agree && same_verdict(row.homology, *row.index) &&
                        same_verdict(row.homology, *row.wedge);
        }

        if (!row.agree) {
            out.all_agree = false;
            out.disagreements.push_back(v);
        }
        if (row.homology.total_multiplicity > 0) ++out.critical_count;
        if (row.homology.total_multiplicity > 1) out.pl_morse = false;
        out.vertices.push_back(std::move(row));
    }
    return out;
}

bool is_pl_morse(const SimplicialComplex& K, const VertexScalarField& f, Field F) {
    for (Vertex v : K.vertices())
        if (h_classify(K, f, v, F).total_multiplicity > 1) return false;
    return true;
}

} // namespace plmorse
