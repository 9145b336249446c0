#pragma once

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "q4n/complexes.hpp"
#include "q4n/groupring.hpp"
#include "q4n/report.hpp"
#include "q4n/zlattice.hpp"

namespace q4n {

/// Triple encoding of a ring element: a list of [coefficient, i, j] with
/// coefficients as decimal strings, nonzero entries only, ordered by (j, i).
nlohmann::json ring_to_json(const ZRingElem& e);
ZRingElem ring_from_json(GroupParams p, const nlohmann::json& j);

/// {"n": ..., "rows": ..., "cols": ..., "entries": [[triples] ...]} row-major.
nlohmann::json gr_matrix_to_json(const ZGRMatrix& m);
ZGRMatrix gr_matrix_from_json(const nlohmann::json& j);

/// Plain-text matrix format: first line "rows cols", then row-major entries.
void write_integer_matrix(std::ostream& os, const IntegerMatrix& m);
IntegerMatrix read_integer_matrix(std::istream& is);

} // namespace q4n
