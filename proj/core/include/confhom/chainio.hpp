// Chain file format shared with the command line tool:
//   { "field": "Q"|"Qi"|"Fp:<p>", "r": int, "n": int,
//     "terms": [ { "coeff": int, "matrix": [["1","0",...], ...] }, ... ] }
// Emission is byte-stable: canonical generator order, fixed key order,
// two-space indentation.

#pragma once

#include <iosfwd>
#include <string>

#include "confhom/chains.hpp"

namespace confhom {

/// ParseError on malformed documents; AdmissibilityError (naming the
/// vanishing minor) on non-admissible generators; MixError on entries that
/// do not parse in the declared field.
Chain parse_chain(const std::string& text);
Chain parse_chain_stream(std::istream& in);

std::string emit_chain(const Chain& c);

/// Raw matrix document { "field": ..., "matrix": [[...]] }; no admissibility
/// requirement (input format of the admissibility checker).
FieldMatrix parse_matrix_document(const std::string& text);

} // namespace confhom
