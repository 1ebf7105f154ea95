#pragma once

#include <string>

#include "natbundle/ext1.hpp"
#include "natbundle/hunter.hpp"
#include "natbundle/laurent.hpp"
#include "natbundle/qbundle.hpp"

namespace natbundle {

// Parsers throw ParseError naming the offending JSON path (e.g. "/eta0/0/1").

/// [[exponent, "p/q"], ...] sorted by exponent.
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text, Var var);

/// {"var": "z", "rows": [[laurent, ...], ...]}
std::string matrix_to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const std::string& text);

/// {"f1": [...], "f2": [...], "entries": [[laurent, ...], ...]} with optional "var"
/// (default "z"). Entries are reduced to normal form on input.
std::string cocycle_to_json(const ExtCocycle& e);
ExtCocycle cocycle_from_json(const std::string& text);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

std::string table_to_json(const CohomologyTable& t);
CohomologyTable table_from_json(const std::string& text);

}  // namespace natbundle
