#ifndef EULERINT_DOCUMENT_HPP
#define EULERINT_DOCUMENT_HPP

#include <string>

#include "eulerint/deffun.hpp"

namespace eulerint {

/**
 * On-disk description of a complex plus (optionally) one function on it.
 * Rationals travel as "p/q" strings so parse/serialize round-trips are
 * lossless. The function section is one of:
 *   vertex_values  continuous PL interpolation data (one rational per vertex)
 *   cell_values    constructible function (integer per cell, zeros omitted)
 *   cell_affine    general cell-wise affine data (zeros omitted)
 * Cells are referenced by their vertex id lists.
 */
struct Document {
    enum class Kind { None, VertexValues, CellValues, CellAffine };

    ComplexPtr K;
    Kind kind = Kind::None;
    RatVec vertex_values;                // Kind::VertexValues
    std::vector<long long> cell_values;  // Kind::CellValues, indexed by cell id
    std::vector<RatVec> cell_affine;     // Kind::CellAffine, indexed by cell id

    CFun as_cfun() const;     // requires cell_values
    DefFun as_deffun() const; // any function kind embeds
    bool has_function() const { return kind != Kind::None; }
};

Document parse_document(const std::string& json_text);
std::string serialize_document(const Document& doc);

Document document_from_deffun(const DefFun& h);
Document document_from_cfun(const CFun& h);
Document document_from_vertex_values(ComplexPtr K, RatVec values);

bool document_equal(const Document& a, const Document& b);

}  // namespace eulerint

#endif
