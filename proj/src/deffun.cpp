#include "eulerint/deffun.hpp"

#include <algorithm>

namespace eulerint {

DefFun::DefFun(ComplexPtr complex, std::vector<RatVec> cell_data)
    : K(std::move(complex)), data(std::move(cell_data)) {
    require(static_cast<int>(data.size()) == K->cell_count(), Err::UnknownCell,
            "cell data size does not match cell count");
    const int C = K->cell_count();
    min_.resize(C);
    max_.resize(C);
    for (int c = 0; c < C; ++c) {
        require(static_cast<int>(data[c].size()) == K->dim(c) + 1, Err::UnknownCell,
                "affine data length must be dim+1 on cell " + std::to_string(c));
        min_[c] = *std::min_element(data[c].begin(), data[c].end());
        max_[c] = *std::max_element(data[c].begin(), data[c].end());
    }
    // Continuity: every cell's limit value at each of its vertices matches
    // the value on the vertex cell itself.
    continuous = true;
    for (int c = 0; c < C && continuous; ++c) {
        const auto& verts = K->cell_verts(c);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (data[c][i] != data[K->vertex_cell(verts[i])][0]) {
                continuous = false;
                break;
            }
        }
    }
}

Rat DefFun::global_min() const {
    Rat m = min_[0];
    for (const Rat& v : min_) m = rat_min(m, v);
    return m;
}

Rat DefFun::global_max() const {
    Rat m = max_[0];
    for (const Rat& v : max_) m = rat_max(m, v);
    return m;
}

DefFun deffun_from_vertex_values(ComplexPtr K, RatVec vertex_values) {
    require(static_cast<int>(vertex_values.size()) == K->vertex_count(), Err::UnknownCell,
            "one value per vertex required");
    std::vector<RatVec> data(K->cell_count());
    for (int c = 0; c < K->cell_count(); ++c) {
        const auto& verts = K->cell_verts(c);
        data[c].reserve(verts.size());
        for (int v : verts) data[c].push_back(vertex_values[v]);
    }
    return DefFun(std::move(K), std::move(data));
}

DefFun deffun_from_cfun(const CFun& h) {
    std::vector<RatVec> data(h.K->cell_count());
    for (int c = 0; c < h.K->cell_count(); ++c)
        data[c].assign(h.K->dim(c) + 1, rat_ll(h.values[c]));
    return DefFun(h.K, std::move(data));
}

DefFun deffun_cellwise_constant(ComplexPtr K, RatVec cell_values) {
    require(static_cast<int>(cell_values.size()) == K->cell_count(), Err::UnknownCell,
            "one value per cell required");
    std::vector<RatVec> data(K->cell_count());
    for (int c = 0; c < K->cell_count(); ++c)
        data[c].assign(K->dim(c) + 1, cell_values[c]);
    return DefFun(std::move(K), std::move(data));
}

DefFun conjugate(const DefFun& h) {
    std::vector<RatVec> data = h.data;
    for (auto& cell : data)
        for (Rat& v : cell) v = -v;
    return DefFun(h.K, std::move(data));
}

DefFun scale(const DefFun& h, const Rat& lambda) {
    std::vector<RatVec> data = h.data;
    for (auto& cell : data)
        for (Rat& v : cell) v *= lambda;
    return DefFun(h.K, std::move(data));
}

DefFun deffun_add(const DefFun& f, const DefFun& g) {
    require(f.K.get() == g.K.get(), Err::UnknownCell, "operands on different complexes");
    std::vector<RatVec> data = f.data;
    for (int c = 0; c < f.K->cell_count(); ++c)
        for (std::size_t i = 0; i < data[c].size(); ++i) data[c][i] += g.data[c][i];
    return DefFun(f.K, std::move(data));
}

bool deffun_equal(const DefFun& f, const DefFun& g) {
    if (f.K.get() != g.K.get()) return false;
    return f.data == g.data;
}

}  // namespace eulerint
