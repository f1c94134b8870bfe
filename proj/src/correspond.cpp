#include "plmorse/correspond.hpp"

#include <algorithm>
#include <map>

namespace plmorse {

CorrespondenceMap correspondence(const SimplicialComplex& K, const VertexScalarField& f,
                                 const GradientField& V, Field F) {
    CorrespondenceMap out;

    std::map<Vertex, std::map<int, std::vector<Simplex>>> owned;
    for (const Simplex& s : critical_simplices(K, V))
        owned[f_max(f, s).vertex][s.dim()].push_back(s);

    std::map<Vertex, PLClassification> verdicts;
    for (Vertex v : K.vertices()) verdicts.emplace(v, h_classify(K, f, v, F));

    for (Vertex v : K.vertices()) {
        const PLClassification& pl = verdicts.at(v);
        auto claimed = owned.find(v);

        // Indices that appear on either side of the pairing.
        std::map<int, std::int64_t> expected = pl.multiplicities;
        if (claimed != owned.end())
            for (const auto& [i, list] : claimed->second) expected.try_emplace(i, 0);

        for (const auto& [i, k] : expected) {
            CorrespondenceEntry entry;
            entry.vertex = v;
            entry.level = f.value(v);
            entry.index = i;
            entry.multiplicity = k;
            if (claimed != owned.end()) {
                if (auto it = claimed->second.find(i); it != claimed->second.end())
                    for (const Simplex& s : it->second)
                        entry.matched.emplace_back(s, f_max(f, s).value);
            }
            if (k == 0) {
                // Surplus critical simplices at a vertex that is not
                // PL critical in this index.
                for (const auto& [s, level] : entry.matched) out.unmatched.push_back(s);
            }
            out.entries.push_back(std::move(entry));
        }
    }

    std::sort(out.unmatched.begin(), out.unmatched.end());
    out.bijective = out.unmatched.empty() &&
                    std::all_of(out.entries.begin(), out.entries.end(),
                                [](const CorrespondenceEntry& e) {
                                    return e.multiplicity == 1 && e.matched.size() == 1;
                                });
    return out;
}

CorrespondenceCertificate verify_correspondence(const CorrespondenceMap& map, bool pl_morse) {
    CorrespondenceCertificate cert;
    auto flag = [&](std::string msg) {
        cert.clean = false;
        cert.violations.push_back(std::move(msg));
    };

    for (const CorrespondenceEntry& e : map.entries) {
        for (const auto& [s, level] : e.matched) {
            if (!s.has_vertex(e.vertex))
                flag("critical simplex " + s.str() + " does not contain vertex " +
                     std::to_string(e.vertex));
            if (level != e.level)
                flag("critical simplex " + s.str() + " sits at level " + std::to_string(level) +
                     ", vertex " + std::to_string(e.vertex) + " at " + std::to_string(e.level));
            if (s.dim() != e.index)
                flag("critical simplex " + s.str() + " has dimension " + std::to_string(s.dim()) +
                     ", expected " + std::to_string(e.index));
        }
        std::int64_t got = static_cast<std::int64_t>(e.matched.size());
        if (got != e.multiplicity)
            flag("vertex " + std::to_string(e.vertex) + " index " + std::to_string(e.index) +
                 ": expected " + std::to_string(e.multiplicity) + " critical simplices, found " +
                 std::to_string(got));
    }
    for (const Simplex& s : map.unmatched)
        flag("critical simplex " + s.str() + " is not assigned to any PL critical vertex");

    if (pl_morse && !map.bijective)
        flag("field is not a bijective match for a PL Morse function");
    return cert;
}

} // namespace plmorse
