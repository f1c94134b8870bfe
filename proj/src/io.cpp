#include "plmorse/io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "plmorse/error.hpp"

namespace plmorse {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::Parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Renumber referenced vertices densely, preserving order; values are
// reindexed to match.
void normalize(ComplexDocument& doc) {
    std::vector<Vertex> referenced;
    for (const auto& tuple : doc.maximal_simplices)
        referenced.insert(referenced.end(), tuple.begin(), tuple.end());
    std::sort(referenced.begin(), referenced.end());
    referenced.erase(std::unique(referenced.begin(), referenced.end()), referenced.end());

    if (!referenced.empty() && referenced.front() < 0)
        fail(Errc::Parse, "negative vertex id " + std::to_string(referenced.front()));
    if (doc.values.size() != referenced.size())
        fail(Errc::Parse, "got " + std::to_string(doc.values.size()) + " values for " +
                              std::to_string(referenced.size()) + " referenced vertices");
    for (double x : doc.values)
        if (!std::isfinite(x)) fail(Errc::Parse, "vertex values must be finite");

    bool dense = referenced.empty() ||
                 (referenced.front() == 0 &&
                  referenced.back() == static_cast<Vertex>(referenced.size()) - 1);
    if (dense) return;

    std::map<Vertex, Vertex> remap;
    for (std::size_t i = 0; i < referenced.size(); ++i)
        remap[referenced[i]] = static_cast<Vertex>(i);
    for (auto& tuple : doc.maximal_simplices)
        for (Vertex& v : tuple) v = remap.at(v);
    if (!doc.coords.empty()) {
        std::vector<std::array<double, 3>> coords(referenced.size());
        for (std::size_t i = 0; i < referenced.size(); ++i) {
            if (static_cast<std::size_t>(referenced[i]) >= doc.coords.size())
                fail(Errc::Parse, "vertex id " + std::to_string(referenced[i]) +
                                      " has no coordinates");
            coords[i] = doc.coords[referenced[i]];
        }
        doc.coords = std::move(coords);
    }
}

} // namespace

SimplicialComplex ComplexDocument::complex() const {
    SimplicialComplex K = SimplicialComplex::from_maximal(maximal_simplices);
    if (expected_dimension && K.dimension() != *expected_dimension)
        fail(Errc::Parse, "declared dimension " + std::to_string(*expected_dimension) +
                              ", built " + std::to_string(K.dimension()));
    return K;
}

VertexScalarField ComplexDocument::field() const {
    return VertexScalarField::from_dense(values);
}

ComplexDocument parse_complex_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("maximal_simplices") || !j.contains("values"))
        fail(Errc::Parse, "expected an object with maximal_simplices and values");

    ComplexDocument doc;
    doc.name = j.value("name", "");
    if (j.contains("dimension")) doc.expected_dimension = j.at("dimension").get<int>();
    try {
        doc.maximal_simplices = j.at("maximal_simplices").get<std::vector<std::vector<Vertex>>>();
        doc.values = j.at("values").get<std::vector<double>>();
    } catch (const json::exception& e) {
        fail(Errc::Parse, std::string("bad field type: ") + e.what());
    }
    normalize(doc);
    return doc;
}

namespace {

// Line-oriented reader skipping blanks and # comments.
struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            if (raw.find_first_not_of(" \t\r\n") != std::string::npos) {
                out = raw;
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void die(const std::string& what) const {
        fail(Errc::Parse, "line " + std::to_string(line_no) + ": " + what);
    }
};

} // namespace

ComplexDocument parse_complex_off(const std::string& off_text, const std::string& vals_text) {
    LineReader off(off_text);
    std::string line;
    if (!off.next(line)) off.die("empty OFF file");
    {
        std::istringstream hdr(line);
        std::string magic;
        hdr >> magic;
        if (magic != "OFF" && magic != "COFF") off.die("expected OFF header, got '" + magic + "'");
    }
    if (!off.next(line)) off.die("missing count line");
    std::size_t nv = 0, nf = 0, ne = 0;
    {
        std::istringstream counts(line);
        if (!(counts >> nv >> nf >> ne)) off.die("malformed count line");
    }

    ComplexDocument doc;
    doc.coords.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        if (!off.next(line)) off.die("expected " + std::to_string(nv) + " vertex lines");
        std::istringstream v(line);
        if (!(v >> doc.coords[i][0] >> doc.coords[i][1] >> doc.coords[i][2]))
            off.die("malformed vertex line");
    }
    for (std::size_t i = 0; i < nf; ++i) {
        if (!off.next(line)) off.die("expected " + std::to_string(nf) + " face lines");
        std::istringstream fline(line);
        std::size_t k = 0;
        if (!(fline >> k)) off.die("malformed face line");
        if (k != 3) off.die("only triangle faces are supported, got " + std::to_string(k));
        std::vector<Vertex> tri(3);
        if (!(fline >> tri[0] >> tri[1] >> tri[2])) off.die("malformed face line");
        for (Vertex v : tri)
            if (v < 0 || static_cast<std::size_t>(v) >= nv)
                off.die("face references vertex " + std::to_string(v) + " of " +
                        std::to_string(nv));
        doc.maximal_simplices.push_back(std::move(tri));
    }

    LineReader vals(vals_text);
    doc.values.reserve(nv);
    while (vals.next(line)) {
        std::istringstream v(line);
        double x;
        if (!(v >> x)) vals.die("malformed value line");
        doc.values.push_back(x);
    }
    if (doc.values.size() != nv)
        fail(Errc::Parse, "got " + std::to_string(doc.values.size()) + " values for " +
                              std::to_string(nv) + " mesh vertices");
    normalize(doc);
    return doc;
}

ComplexDocument load_complex(const std::string& path) {
    namespace fs = std::filesystem;
    fs::path p(path);
    ComplexDocument doc;
    if (p.extension() == ".off") {
        fs::path sidecar = p;
        sidecar.replace_extension(".vals");
        if (!fs::exists(sidecar)) sidecar = fs::path(path + ".vals");
        if (!fs::exists(sidecar))
            fail(Errc::Parse, "no values sidecar for " + path);
        doc = parse_complex_off(read_file(path), read_file(sidecar.string()));
    } else {
        doc = parse_complex_json(read_file(path));
    }
    if (doc.name.empty()) doc.name = p.stem().string();
    return doc;
}

std::string emit_complex_json(const ComplexDocument& doc) {
    ordered j;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["maximal_simplices"] = doc.maximal_simplices;
    j["values"] = doc.values;
    return j.dump(2) + "\n";
}

GradientField parse_gradient_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) fail(Errc::Parse, "expected a JSON array of [tail, head] pairs");

    std::vector<GradientPair> pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            fail(Errc::Parse, "each pair must be [tail, head]");
        try {
            pairs.push_back({Simplex(item[0].get<std::vector<Vertex>>()),
                             Simplex(item[1].get<std::vector<Vertex>>())});
        } catch (const json::exception& e) {
            fail(Errc::Parse, std::string("bad simplex tuple: ") + e.what());
        }
    }
    return GradientField(std::move(pairs));
}

GradientField load_gradient(const std::string& path) {
    return parse_gradient_json(read_file(path));
}

std::string emit_gradient_json(const GradientField& V) {
    ordered j = ordered::array();
    for (const GradientPair& p : V.pairs())
        j.push_back(ordered::array({p.tail.vertices(), p.head.vertices()}));
    return j.dump(2) + "\n";
}

} // namespace plmorse
