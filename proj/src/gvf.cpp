#include "plmorse/gvf.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "plmorse/error.hpp"

namespace plmorse {

GradientField::GradientField(std::vector<GradientPair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        lookup_.emplace(pairs_[i].tail, std::make_pair(static_cast<int>(i), Role::Tail));
        lookup_.emplace(pairs_[i].head, std::make_pair(static_cast<int>(i), Role::Head));
    }
}

GradientField::Role GradientField::role(const Simplex& s) const {
    auto it = lookup_.find(s);
    return it == lookup_.end() ? Role::Unpaired : it->second.second;
}

const Simplex* GradientField::partner(const Simplex& s) const {
    auto it = lookup_.find(s);
    if (it == lookup_.end()) return nullptr;
    const GradientPair& p = pairs_[it->second.first];
    return it->second.second == Role::Tail ? &p.head : &p.tail;
}

GradientField GradientField::merge(const std::vector<GradientField>& fields) {
    std::vector<GradientPair> all;
    for (const GradientField& f : fields)
        all.insert(all.end(), f.pairs().begin(), f.pairs().end());
    return GradientField(std::move(all));
}

std::vector<Simplex> critical_simplices(const SimplicialComplex& K, const GradientField& V) {
    std::vector<Simplex> out;
    for (const Simplex& s : K.all_simplices())
        if (V.role(s) == GradientField::Role::Unpaired) out.push_back(s);
    return out;
}

MatchingReport validate_matching(const SimplicialComplex& K, const GradientField& V) {
    MatchingReport report;
    auto flag = [&](MatchingViolation::Kind kind, const GradientPair& p, std::string detail) {
        report.ok = false;
        report.violations.push_back({kind, p, std::move(detail)});
    };

    std::unordered_map<Simplex, int, SimplexHash> seen;
    for (const GradientPair& p : V.pairs()) {
        if (!K.contains(p.tail))
            flag(MatchingViolation::Kind::OutsideComplex, p, p.tail.str() + " not in complex");
        if (!K.contains(p.head))
            flag(MatchingViolation::Kind::OutsideComplex, p, p.head.str() + " not in complex");
        if (p.head.dim() != p.tail.dim() + 1 || !p.tail.is_face_of(p.head))
            flag(MatchingViolation::Kind::NotFacet, p,
                 p.tail.str() + " is not a codimension-1 face of " + p.head.str());
        for (const Simplex& s : {p.tail, p.head}) {
            auto [it, fresh] = seen.emplace(s, 1);
            if (!fresh)
                flag(MatchingViolation::Kind::DuplicateMembership, p,
                     s.str() + " occurs in more than one pair");
        }
    }
    return report;
}

namespace {

void require_valid(const SimplicialComplex& K, const GradientField& V, const char* who) {
    MatchingReport r = validate_matching(K, V);
    if (!r.ok)
        fail(Errc::Precondition,
             std::string(who) + ": field is not a valid matching (" +
                 r.violations.front().detail + ")");
}

} // namespace

AcyclicityReport is_acyclic(const SimplicialComplex& K, const GradientField& V) {
    require_valid(K, V, "acyclicity check");

    // Directed graph per dimension on the matched tails: an arc
    // sigma -> sigma' when sigma' is a facet of partner(sigma) other
    // than sigma. A closed V-path is exactly a directed cycle.
    std::unordered_map<Simplex, int, SimplexHash> id_of;
    std::vector<const GradientPair*> pair_of;
    for (const GradientPair& p : V.pairs()) {
        id_of.emplace(p.tail, static_cast<int>(pair_of.size()));
        pair_of.push_back(&p);
    }

    const int n = static_cast<int>(pair_of.size());
    std::vector<std::vector<int>> next(n);
    for (int i = 0; i < n; ++i) {
        for (const Simplex& s : pair_of[i]->head.facets()) {
            if (s == pair_of[i]->tail) continue;
            auto it = id_of.find(s);
            if (it != id_of.end()) next[i].push_back(it->second);
        }
    }

    enum { White, Grey, Black };
    std::vector<int> color(n, White);
    std::vector<int> stack, on_path;

    for (int start = 0; start < n; ++start) {
        if (color[start] != White) continue;
        // Iterative DFS carrying the grey path for witness recovery.
        std::vector<std::pair<int, std::size_t>> frames{{start, 0}};
        color[start] = Grey;
        on_path = {start};
        while (!frames.empty()) {
            auto& [u, edge] = frames.back();
            if (edge < next[u].size()) {
                int w = next[u][edge++];
                if (color[w] == Grey) {
                    AcyclicityReport report;
                    report.acyclic = false;
                    auto it = std::find(on_path.begin(), on_path.end(), w);
                    for (; it != on_path.end(); ++it)
                        report.witness.push_back(*pair_of[*it]);
                    return report;
                }
                if (color[w] == White) {
                    color[w] = Grey;
                    on_path.push_back(w);
                    frames.emplace_back(w, 0);
                }
            } else {
                color[u] = Black;
                on_path.pop_back();
                frames.pop_back();
            }
        }
    }
    return {};
}

MorseProfile morse_profile(const SimplicialComplex& K, const VertexScalarField& f,
                           const GradientField& V) {
    require_valid(K, V, "morse profile");

    MorseProfile profile;
    const int d = K.dimension();
    profile.m.assign(d + 1, 0);

    std::map<Vertex, std::vector<Simplex>> by_owner;
    for (const Simplex& s : critical_simplices(K, V)) {
        ++profile.m[s.dim()];
        by_owner[f_max(f, s).vertex].push_back(s);
    }

    for (Vertex v : vertices_by_level(K, f)) {
        MorseProfile::LevelEntry entry;
        entry.level = f.key(v);
        entry.m.assign(d + 1, 0);
        if (auto it = by_owner.find(v); it != by_owner.end()) {
            entry.critical = it->second;
            for (const Simplex& s : entry.critical) ++entry.m[s.dim()];
        }
        profile.levels.push_back(std::move(entry));
    }
    return profile;
}

WeakMorseReport check_weak_morse(const SimplicialComplex& K, const GradientField& V, Field F) {
    require_valid(K, V, "weak inequality check");

    std::vector<std::int64_t> m(K.dimension() + 1, 0);
    for (const Simplex& s : critical_simplices(K, V)) ++m[s.dim()];
    BettiVector b = betti(K, F);

    WeakMorseReport report;
    for (int i = 0; i <= K.dimension(); ++i) {
        WeakMorseRow row{i, m[i], b[i], m[i] - b[i]};
        if (row.slack < 0) report.holds = false;
        if (row.slack != 0) report.perfect = false;
        report.rows.push_back(row);
    }
    return report;
}

RPCertificate check_relative_perfectness(const SimplicialComplex& K, const VertexScalarField& f,
                                         const GradientField& V, Field F) {
    MorseProfile profile = morse_profile(K, f, V);

    RPCertificate cert;
    SimplicialComplex below; // sublevel complex strictly before the current level
    for (const MorseProfile::LevelEntry& entry : profile.levels) {
        Vertex v = entry.level.vertex;
        SimplicialComplex current = sublevel_complex(K, f, entry.level);
        BettiVector sublevel_route = relative_betti(current, below, F);
        BettiVector star_route = relative_betti(lower_star(K, f, v).closure(),
                                                lower_link(K, f, v), F);
        for (int i = 0; i <= K.dimension(); ++i)
            if (sublevel_route[i] != star_route[i])
                fail(Errc::Precondition,
                     "sublevel pair and lower star disagree at vertex " + std::to_string(v) +
                         " in dimension " + std::to_string(i));

        for (int i = 0; i <= K.dimension(); ++i) {
            if (entry.m[i] != sublevel_route[i]) {
                cert.relatively_perfect = false;
                cert.mismatches.push_back({entry.level, i, entry.m[i], sublevel_route[i]});
            }
        }
        below = std::move(current);
    }
    return cert;
}

} // namespace plmorse
