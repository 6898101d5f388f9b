#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jumploci/cdga.hpp"
#include "jumploci/hodge.hpp"
#include "jumploci/torus.hpp"
#include "jumploci/twisted.hpp"

namespace jumploci {

// Error while reading an input file; message carries file and line.
struct WorkspaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named objects parsed from one or more declarative input files. Sections:
// [algebra N], [complex N], [presentation N], [torus N], [affine N],
// [zeroset N], [hodge N]; indices inside files are 1-based. Every object is
// validated on load.
struct Workspace {
    std::map<std::string, GradedAlgebra> algebras;
    std::map<std::string, LaurentComplex> complexes;
    std::map<std::string, Presentation> presentations;
    std::map<std::string, TranslatedSubtorus> tori;
    std::map<std::string, AffineSubspaceQ> affines;
    std::map<std::string, LaurentZeroSet> zerosets;
    std::map<std::string, OneHodgeStructure> hodges;

    // resolves a complex by name, falling back to the Fox complex of a
    // presentation of the same name
    LaurentComplex resolve_complex(const std::string& name) const;
};

Workspace parse_workspace(const std::vector<std::string>& paths);
void parse_workspace_text(Workspace& ws, const std::string& text, const std::string& filename);

// Laurent monomial like "t1^2*t3^-1" or "1"; nvars fixed by the caller.
QPoly parse_monomial(const std::string& token, int nvars);

}  // namespace jumploci
