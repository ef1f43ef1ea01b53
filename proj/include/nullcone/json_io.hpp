#pragma once

#include "nullcone/free_algebra.hpp"

namespace nullcone {

// Tuple documents: the on-disk JSON form of a matrix tuple.
//   {"field": "rational", "n": 3, "m": 2,
//    "matrices": [[[0,0,0],[1,0,0],[0,1,0]], ...]}
// GF(p) documents use {"field": "gfp", "p": 101}. Entries are integers or
// exact fraction strings like "-7/3".
MatrixTuple parse_tuple_document(const std::string& json_text);

// Serializes a tuple back into the same schema. Re-ingesting the output
// reproduces the tuple exactly.
std::string emit_tuple_document(const MatrixTuple& t, int indent = 2);

// Inline matrix syntax for command lines: "[[0,0,0],[1,0,0],[0,1,0]]".
Mat parse_inline_matrix(const std::string& text, Field f);

}  // namespace nullcone
