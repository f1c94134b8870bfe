// Command line front end: classify, build, verify, correspond, export.
// Exit codes: 0 success, 1 a certificate or agreement check failed,
// 2 unusable input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "plmorse/correspond.hpp"
#include "plmorse/error.hpp"
#include "plmorse/gvf.hpp"
#include "plmorse/io.hpp"
#include "plmorse/plcrit.hpp"
#include "plmorse/report.hpp"
#include "plmorse/rpbuild.hpp"

namespace {

using namespace plmorse;

struct Options {
    std::string input;
    std::string field_file;
    std::string output;
    std::string field_name = "gf2";
    std::string format = "json";
    bool check_manifold = false;
    bool quiet = false;
    std::optional<unsigned> seed;
};

Field parse_field(const std::string& name) {
    if (name == "gf2") return Field::GF2;
    if (name == "rational") return Field::Rational;
    fail(Errc::Parse, "unknown field '" + name + "', expected gf2 or rational");
}

class Timer {
public:
    Timer(const std::string& label, bool quiet) : label_(label), quiet_(quiet),
        start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        if (quiet_) return;
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start_).count();
        std::cerr << label_ << ": " << us / 1000.0 << " ms\n";
    }
private:
    std::string label_;
    bool quiet_;
    std::chrono::steady_clock::time_point start_;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) fail(Errc::Parse, "cannot write " + opt.output);
    out << text;
}

ComplexDocument load_input(const Options& opt) {
    ComplexDocument doc = load_complex(opt.input);
    if (opt.seed) {
        // Replace the input values by a random injective function,
        // for property-style runs from the shell.
        std::vector<double> values(doc.values.size());
        std::iota(values.begin(), values.end(), 1.0);
        std::mt19937 rng(*opt.seed);
        std::shuffle(values.begin(), values.end(), rng);
        doc.values = std::move(values);
    }
    return doc;
}

ManifoldReport checked_manifold(const SimplicialComplex& K) {
    return is_combinatorial_manifold(K, K.dimension());
}

int run_classify(const Options& opt) {
    ComplexDocument doc = load_input(opt);
    SimplicialComplex K = doc.complex();
    VertexScalarField f = doc.field();
    Field F = parse_field(opt.field_name);

    ReportJson report;
    report["input"] = input_section(doc, K);
    report["field"] = field_name(F);
    if (opt.check_manifold) {
        ManifoldReport m = checked_manifold(K);
        report["manifold"] = manifold_section(m);
        if (!m.ok) {
            write_output(opt, emit_report(report));
            return 1;
        }
    }

    ClassificationSummary summary;
    {
        Timer t("classify", opt.quiet);
        summary = classify_all(K, f, F);
    }
    report["classification"] = classification_section(summary);
    write_output(opt, emit_report(report));
    return summary.all_agree ? 0 : 1;
}

int run_build(const Options& opt) {
    ComplexDocument doc = load_input(opt);
    SimplicialComplex K = doc.complex();
    VertexScalarField f = doc.field();
    if (opt.check_manifold) {
        ManifoldReport m = checked_manifold(K);
        if (!m.ok) fail(Errc::Precondition, "not a combinatorial manifold: " + m.diagnostic);
    }

    GradientField V;
    {
        Timer t("build", opt.quiet);
        V = build_rp_gradient(K, f);
    }
    write_output(opt, emit_gradient_json(V));
    if (!opt.quiet)
        std::cerr << "pairs: " << V.pair_count() << ", critical: "
                  << K.size() - 2 * V.pair_count() << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    ComplexDocument doc = load_input(opt);
    SimplicialComplex K = doc.complex();
    VertexScalarField f = doc.field();
    Field F = parse_field(opt.field_name);
    GradientField V = load_gradient(opt.field_file);

    ReportJson report;
    report["input"] = input_section(doc, K);
    report["field"] = field_name(F);

    bool ok = true;
    MatchingReport matching = validate_matching(K, V);
    report["matching"] = matching_section(matching);
    if (!matching.ok) {
        ok = false;
    } else {
        Timer t("verify", opt.quiet);
        AcyclicityReport acyclic = is_acyclic(K, V);
        report["acyclicity"] = acyclicity_section(acyclic);
        if (acyclic.acyclic) {
            report["gradient"] = gradient_section(K, f, V);
            WeakMorseReport weak = check_weak_morse(K, V, F);
            report["weak_morse"] = weak_morse_section(weak);
            RPCertificate cert = check_relative_perfectness(K, f, V, F);
            report["relative_perfectness"] = rp_section(cert);
            ok = weak.holds && cert.relatively_perfect;
        } else {
            ok = false;
        }
    }
    write_output(opt, emit_report(report));
    return ok ? 0 : 1;
}

int run_correspond(const Options& opt) {
    ComplexDocument doc = load_input(opt);
    SimplicialComplex K = doc.complex();
    VertexScalarField f = doc.field();
    Field F = parse_field(opt.field_name);

    GradientField V;
    if (opt.field_file.empty()) {
        Timer t("build", opt.quiet);
        V = build_rp_gradient(K, f);
    } else {
        V = load_gradient(opt.field_file);
    }

    ReportJson report;
    report["input"] = input_section(doc, K);
    report["field"] = field_name(F);

    CorrespondenceMap map;
    {
        Timer t("correspond", opt.quiet);
        map = correspondence(K, f, V, F);
    }
    CorrespondenceCertificate cert = verify_correspondence(map, is_pl_morse(K, f, F));
    report["correspondence"] = correspondence_section(map, cert);
    write_output(opt, emit_report(report));
    return cert.clean ? 0 : 1;
}

int run_export(const Options& opt) {
    ComplexDocument doc = load_input(opt);
    SimplicialComplex K = doc.complex();
    VertexScalarField f = doc.field();
    Field F = parse_field(opt.field_name);

    ClassificationSummary summary = classify_all(K, f, F);
    GradientField V;
    bool with_field = !opt.field_file.empty();
    if (with_field) V = load_gradient(opt.field_file);
    write_output(opt, export_colored_mesh(doc, summary, with_field ? &V : nullptr));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PL criticality and discrete gradient analysis on simplicial complexes"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_output = true) {
        cmd->add_option("input", opt.input, "complex file (.json, or .off with a .vals sidecar)")
            ->required();
        cmd->add_option("--field", opt.field_name, "coefficient field: gf2 or rational")
            ->check(CLI::IsMember({"gf2", "rational"}));
        cmd->add_flag("--check-manifold", opt.check_manifold, "validate the manifold property first");
        cmd->add_option("--seed", opt.seed, "replace input values by a seeded random injective function");
        cmd->add_flag("--quiet", opt.quiet, "suppress progress and timing output");
        if (with_output) cmd->add_option("-o,--output", opt.output, "write output here instead of stdout");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify PL critical vertices");
    add_common(classify);
    classify->add_option("--format", opt.format)->check(CLI::IsMember({"json"}));

    CLI::App* build = app.add_subcommand("build", "construct a relatively perfect gradient field");
    add_common(build);

    CLI::App* verify = app.add_subcommand("verify", "check a gradient field file against a complex");
    add_common(verify);
    verify->add_option("gradient", opt.field_file, "gradient field file (JSON pair list)")->required();

    CLI::App* correspond = app.add_subcommand("correspond", "relate PL critical vertices to critical simplices");
    add_common(correspond);
    correspond->add_option("gradient", opt.field_file, "gradient field file; built when omitted");

    CLI::App* exportc = app.add_subcommand("export", "emit a criticality-colored mesh");
    add_common(exportc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(opt);
        if (app.got_subcommand(build)) return run_build(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(correspond)) return run_correspond(opt);
        if (app.got_subcommand(exportc)) return run_export(opt);
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
