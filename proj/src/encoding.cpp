#include "q4n/encoding.hpp"

namespace q4n {

using nlohmann::json;

json ring_to_json(const ZRingElem& e) {
    json out = json::array();
    const GroupParams p = e.params();
    for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
        if (e.coeffs()[k] == 0) continue;
        const GroupElement g = element_at(p, k);
        out.push_back(json::array({e.coeffs()[k].get_str(), g.i, g.j}));
    }
    return out;
}

ZRingElem ring_from_json(GroupParams p, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("ring_from_json: expected an array");
    ZRingElem e(p);
    for (const json& triple : j) {
        if (!triple.is_array() || triple.size() != 3)
            throw std::invalid_argument("ring_from_json: expected [coeff, i, j] triples");
        Int c(triple[0].get<std::string>());
        const long i = triple[1].get<long>();
        const long jj = triple[2].get<long>();
        if (i < 0 || i >= p.x_order() || jj < 0 || jj > 1)
            throw std::invalid_argument("ring_from_json: exponent out of range");
        e += ZRingElem::monomial(p, c, i, jj);
    }
    return e;
}

json gr_matrix_to_json(const ZGRMatrix& m) {
    json out;
    out["n"] = m.params().n;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            entries.push_back(ring_to_json(m.at(r, c)));
    out["entries"] = entries;
    return out;
}

ZGRMatrix gr_matrix_from_json(const json& j) {
    const GroupParams p(j.at("n").get<int>());
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw std::invalid_argument("gr_matrix_from_json: entry count mismatch");
    ZGRMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = ring_from_json(p, entries[r * cols + c]);
    return m;
}

void write_integer_matrix(std::ostream& os, const IntegerMatrix& m) {
    os << m.rows() << " " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << " ";
            os << m(r, c).get_str();
        }
        os << "\n";
    }
}

IntegerMatrix read_integer_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols))
        throw std::invalid_argument("read_integer_matrix: missing dimensions");
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            std::string tok;
            if (!(is >> tok))
                throw std::invalid_argument("read_integer_matrix: truncated data");
            m(r, c) = Int(tok);
        }
    return m;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["check_id"] = r.check_id;
    j["theorem_ref"] = r.theorem_ref;
    j["status"] = r.pass ? "pass" : "fail";
    j["details"] = r.details;
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

} // namespace q4n
