#pragma once

#include <stdexcept>
#include <string>

namespace plmorse {

enum class Errc {
    MalformedSimplex,
    MissingSimplex,
    DegenerateCone,
    InvalidLevel,
    UnsupportedDimension,
    NotPure,
    SubcomplexViolation,
    NotSphereSubcomplex,
    Precondition,
    Parse,
};

inline const char* errc_name(Errc code) {
    switch (code) {
    case Errc::MalformedSimplex: return "malformed-simplex";
    case Errc::MissingSimplex: return "missing-simplex";
    case Errc::DegenerateCone: return "degenerate-cone";
    case Errc::InvalidLevel: return "invalid-level";
    case Errc::UnsupportedDimension: return "unsupported-dimension";
    case Errc::NotPure: return "not-pure";
    case Errc::SubcomplexViolation: return "subcomplex-violation";
    case Errc::NotSphereSubcomplex: return "not-sphere-subcomplex";
    case Errc::Precondition: return "precondition";
    case Errc::Parse: return "parse";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace plmorse
