#include "plmorse/report.hpp"

#include <array>
#include <sstream>

namespace plmorse {

namespace {

ReportJson simplex_json(const Simplex& s) { return ReportJson(s.vertices()); }

ReportJson multiplicities_json(const PLClassification& c) {
    ReportJson m = ReportJson::object();
    for (const auto& [i, k] : c.multiplicities) m[std::to_string(i)] = k;
    return m;
}

ReportJson classification_json(const PLClassification& c) {
    ReportJson j;
    j["kind"] = kind_name(c.kind);
    j["multiplicities"] = multiplicities_json(c);
    j["total"] = c.total_multiplicity;
    j["simple"] = c.simple;
    return j;
}

ReportJson betti_json(const std::vector<std::int64_t>& v) { return ReportJson(v); }

std::array<int, 3> kind_color(CriticalKind k) {
    switch (k) {
    case CriticalKind::Minimum: return {0, 0, 255};
    case CriticalKind::Saddle: return {0, 255, 0};
    case CriticalKind::Maximum: return {255, 0, 0};
    case CriticalKind::Regular: break;
    }
    return {128, 128, 128};
}

} // namespace

ReportJson input_section(const ComplexDocument& doc, const SimplicialComplex& K) {
    ReportJson j;
    j["name"] = doc.name;
    j["dimension"] = K.dimension();
    j["vertices"] = K.count(0);
    std::vector<std::size_t> counts;
    for (int d = 0; d <= K.dimension(); ++d) counts.push_back(K.count(d));
    j["simplices_by_dimension"] = counts;
    j["total_simplices"] = K.size();
    j["euler_characteristic"] = euler_characteristic(K);
    return j;
}

ReportJson manifold_section(const ManifoldReport& report) {
    ReportJson j;
    j["is_manifold"] = report.ok;
    if (!report.ok) j["diagnostic"] = report.diagnostic;
    return j;
}

ReportJson classification_section(const ClassificationSummary& summary) {
    ReportJson rows = ReportJson::array();
    for (const VertexVerdicts& row : summary.vertices) {
        ReportJson r;
        r["vertex"] = row.vertex;
        r["value"] = row.value;
        r["kind"] = kind_name(row.homology.kind);
        ReportJson by;
        by["H"] = classification_json(row.homology);
        by["L"] = classification_json(row.lower_link);
        if (row.index) by["I"] = classification_json(*row.index);
        if (row.wedge) by["W"] = classification_json(*row.wedge);
        r["classifiers"] = std::move(by);
        r["agree"] = row.agree;
        rows.push_back(std::move(r));
    }

    ReportJson j;
    j["vertices"] = std::move(rows);
    j["all_agree"] = summary.all_agree;
    j["disagreements"] = summary.disagreements;
    j["pl_morse"] = summary.pl_morse;
    j["critical_vertices"] = summary.critical_count;
    return j;
}

ReportJson gradient_section(const SimplicialComplex& K, const VertexScalarField& f,
                            const GradientField& V) {
    MorseProfile profile = morse_profile(K, f, V);
    ReportJson j;
    j["pairs"] = V.pair_count();
    j["critical_simplices"] = K.size() - 2 * V.pair_count();
    j["morse_numbers"] = betti_json(profile.m);

    ReportJson levels = ReportJson::array();
    for (const MorseProfile::LevelEntry& entry : profile.levels) {
        if (entry.critical.empty()) continue;
        ReportJson l;
        l["level"] = entry.level.value;
        l["vertex"] = entry.level.vertex;
        l["m"] = betti_json(entry.m);
        ReportJson crit = ReportJson::array();
        for (const Simplex& s : entry.critical) crit.push_back(simplex_json(s));
        l["critical"] = std::move(crit);
        levels.push_back(std::move(l));
    }
    j["levels_with_critical_simplices"] = std::move(levels);
    return j;
}

ReportJson matching_section(const MatchingReport& report) {
    ReportJson j;
    j["valid"] = report.ok;
    ReportJson v = ReportJson::array();
    for (const MatchingViolation& violation : report.violations) {
        ReportJson row;
        switch (violation.kind) {
        case MatchingViolation::Kind::OutsideComplex: row["kind"] = "outside-complex"; break;
        case MatchingViolation::Kind::NotFacet: row["kind"] = "not-a-facet"; break;
        case MatchingViolation::Kind::DuplicateMembership: row["kind"] = "duplicate-membership"; break;
        }
        row["pair"] = ReportJson::array(
            {simplex_json(violation.pair.tail), simplex_json(violation.pair.head)});
        row["detail"] = violation.detail;
        v.push_back(std::move(row));
    }
    j["violations"] = std::move(v);
    return j;
}

ReportJson acyclicity_section(const AcyclicityReport& report) {
    ReportJson j;
    j["acyclic"] = report.acyclic;
    if (!report.acyclic) {
        ReportJson w = ReportJson::array();
        for (const GradientPair& p : report.witness)
            w.push_back(ReportJson::array({simplex_json(p.tail), simplex_json(p.head)}));
        j["closed_path"] = std::move(w);
    }
    return j;
}

ReportJson weak_morse_section(const WeakMorseReport& report) {
    ReportJson rows = ReportJson::array();
    for (const WeakMorseRow& row : report.rows) {
        ReportJson r;
        r["dim"] = row.dim;
        r["critical"] = row.critical_count;
        r["betti"] = row.betti;
        r["slack"] = row.slack;
        rows.push_back(std::move(r));
    }
    ReportJson j;
    j["rows"] = std::move(rows);
    j["holds"] = report.holds;
    j["perfect"] = report.perfect;
    return j;
}

ReportJson rp_section(const RPCertificate& cert) {
    ReportJson j;
    j["relatively_perfect"] = cert.relatively_perfect;
    ReportJson m = ReportJson::array();
    for (const RPMismatch& mm : cert.mismatches) {
        ReportJson row;
        row["level"] = mm.level.value;
        row["vertex"] = mm.level.vertex;
        row["dim"] = mm.dim;
        row["critical"] = mm.critical_count;
        row["betti"] = mm.betti;
        m.push_back(std::move(row));
    }
    j["mismatches"] = std::move(m);
    return j;
}

ReportJson correspondence_section(const CorrespondenceMap& map,
                                  const CorrespondenceCertificate& cert) {
    ReportJson entries = ReportJson::array();
    for (const CorrespondenceEntry& e : map.entries) {
        ReportJson row;
        row["vertex"] = e.vertex;
        row["level"] = e.level;
        row["index"] = e.index;
        row["multiplicity"] = e.multiplicity;
        ReportJson matched = ReportJson::array();
        for (const auto& [s, level] : e.matched) matched.push_back(simplex_json(s));
        row["critical_simplices"] = std::move(matched);
        entries.push_back(std::move(row));
    }
    ReportJson j;
    j["entries"] = std::move(entries);
    ReportJson unmatched = ReportJson::array();
    for (const Simplex& s : map.unmatched) unmatched.push_back(simplex_json(s));
    j["unmatched"] = std::move(unmatched);
    j["bijective"] = map.bijective;
    j["clean"] = cert.clean;
    j["violations"] = cert.violations;
    return j;
}

std::string emit_report(const ReportJson& report) {
    return report.dump(2) + "\n";
}

std::string export_colored_mesh(const ComplexDocument& doc, const ClassificationSummary& summary,
                                const GradientField* V) {
    std::vector<CriticalKind> kind(summary.vertices.size(), CriticalKind::Regular);
    for (const VertexVerdicts& row : summary.vertices)
        if (row.vertex >= 0 && static_cast<std::size_t>(row.vertex) < kind.size())
            kind[row.vertex] = row.homology.kind;

    if (!doc.coords.empty()) {
        std::ostringstream os;
        os << "COFF\n";
        os << doc.coords.size() << ' ' << doc.maximal_simplices.size() << " 0\n";
        for (std::size_t i = 0; i < doc.coords.size(); ++i) {
            auto [r, g, b] = kind_color(i < kind.size() ? kind[i] : CriticalKind::Regular);
            os << doc.coords[i][0] << ' ' << doc.coords[i][1] << ' ' << doc.coords[i][2] << ' '
               << r << ' ' << g << ' ' << b << " 255\n";
        }
        for (const auto& face : doc.maximal_simplices) {
            os << face.size();
            for (Vertex v : face) os << ' ' << v;
            bool crit = false;
            if (V && face.size() == 3)
                crit = V->role(Simplex(face)) == GradientField::Role::Unpaired;
            auto [r, g, b] = crit ? std::array<int, 3>{255, 0, 0}
                                  : std::array<int, 3>{200, 200, 200};
            os << ' ' << r << ' ' << g << ' ' << b << " 255\n";
        }
        if (V) {
            for (const Simplex& s : critical_simplices(doc.complex(), *V))
                if (s.dim() >= 1) os << "# critical " << s.str() << "\n";
        }
        return os.str();
    }

    ReportJson j;
    ReportJson verts = ReportJson::array();
    for (const VertexVerdicts& row : summary.vertices) {
        ReportJson r;
        r["id"] = row.vertex;
        r["value"] = row.value;
        r["kind"] = kind_name(row.homology.kind);
        auto [red, green, blue] = kind_color(row.homology.kind);
        r["color"] = ReportJson::array({red, green, blue});
        verts.push_back(std::move(r));
    }
    j["vertices"] = std::move(verts);
    j["faces"] = doc.maximal_simplices;
    if (V) {
        ReportJson crit = ReportJson::array();
        for (const Simplex& s : critical_simplices(doc.complex(), *V))
            crit.push_back(simplex_json(s));
        j["critical_simplices"] = std::move(crit);
    }
    return emit_report(j);
}

} // namespace plmorse
