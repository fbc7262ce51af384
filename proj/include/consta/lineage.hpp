#pragma once

// Lineage is the JSON construction history carried by every LinearCode.  It
// is self-contained: rebuild() recreates the generator matrix from it alone.
//
//   constacyclic  {spec}
//   aux           {name: full|zero|repetition|parity, q, n}
//   matrix        {q, n, rows}
//   X             {pairing: canonical|explicit, leaders?, c1, c2, c3}
//   XX            {c, c1sub, c2sub, d1, d2}
//   shorten, puncture {positions, of}   subcode {k, of}   extend {of}
//   dual          {inner: euclidean|hermitian, of}
//   intersection  {of: [a, b]}
//   isometry      {witness, of}

#include <string>
#include <vector>

#include "json.hpp"

#include "consta/code.hpp"

namespace consta {

/// Rows of field elements as integers.
nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const FieldPtr& f, int cols, const nlohmann::json& rows);

/// Wraps an explicit generator matrix as a code with "matrix" lineage.
LinearCode code_from_matrix(const Mat& m);

/// Recreates the code.  Distance records that follow from the lineage alone
/// (aux codes, the "predicted" field of constructions) are restored; the
/// returned lineage is the input.
LinearCode rebuild(const nlohmann::json& lineage);

/// Construction kinds from the outermost step inward, e.g. {"shorten", "X"}.
std::vector<std::string> construction_chain(const nlohmann::json& lineage);

/// Reads a code file: either a lineage object or {"q": .., "rows": [[..]..]}.
LinearCode load_code_file(const std::string& path);

}  // namespace consta
