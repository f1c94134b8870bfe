#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "plmorse/correspond.hpp"
#include "plmorse/gvf.hpp"
#include "plmorse/io.hpp"
#include "plmorse/plcrit.hpp"

namespace plmorse {

using ReportJson = nlohmann::ordered_json;

// Report sections. Key order is fixed so identical inputs produce
// byte-identical output; anything run-dependent (timings) stays out.
ReportJson input_section(const ComplexDocument& doc, const SimplicialComplex& K);
ReportJson manifold_section(const ManifoldReport& report);
ReportJson classification_section(const ClassificationSummary& summary);
ReportJson gradient_section(const SimplicialComplex& K, const VertexScalarField& f,
                            const GradientField& V);
ReportJson matching_section(const MatchingReport& report);
ReportJson acyclicity_section(const AcyclicityReport& report);
ReportJson weak_morse_section(const WeakMorseReport& report);
ReportJson rp_section(const RPCertificate& cert);
ReportJson correspondence_section(const CorrespondenceMap& map,
                                  const CorrespondenceCertificate& cert);

std::string emit_report(const ReportJson& report);

// Mesh export colored by criticality: minima blue, saddles green,
// maxima red, regular gray. Inputs with coordinates become a COFF
// mesh; purely topological inputs become a JSON adjacency listing.
// When a field is given its critical simplices are annotated too.
std::string export_colored_mesh(const ComplexDocument& doc, const ClassificationSummary& summary,
                                const GradientField* V = nullptr);

} // namespace plmorse
