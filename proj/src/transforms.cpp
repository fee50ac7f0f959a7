#include "eulerint/transforms.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerint {

DefFun dual(const DefFun& h) {
    const SimplicialComplex& K = *h.K;
    std::vector<RatVec> out(K.cell_count());
    for (int tau = 0; tau < K.cell_count(); ++tau) {
        const auto& tverts = K.cell_verts(tau);
        out[tau].assign(tverts.size(), Rat(0));
        for (int sigma : K.star(tau)) {
            const auto& sverts = K.cell_verts(sigma);
            const int w = K.dim(sigma) % 2 == 0 ? 1 : -1;
            // Restrict sigma's affine data to tau's vertices.
            for (std::size_t i = 0; i < tverts.size(); ++i) {
                auto it = std::lower_bound(sverts.begin(), sverts.end(), tverts[i]);
                const std::size_t pos = static_cast<std::size_t>(it - sverts.begin());
                if (w > 0)
                    out[tau][i] += h.data[sigma][pos];
                else
                    out[tau][i] -= h.data[sigma][pos];
            }
        }
    }
    return DefFun(h.K, std::move(out));
}

bool dual_involution_check(const DefFun& h) {
    return deffun_equal(dual(dual(h)), h);
}

DefFun link(const DefFun& h) {
    DefFun d = dual(h);
    std::vector<RatVec> out = h.data;
    for (int c = 0; c < h.K->cell_count(); ++c)
        for (std::size_t i = 0; i < out[c].size(); ++i) out[c][i] -= d.data[c][i];
    return DefFun(h.K, std::move(out));
}

DefFun inner_product_integrand(const CFun& h, const RatVec& xi) {
    const SimplicialComplex& K = *h.K;
    require(static_cast<int>(xi.size()) == K.ambient_dim(), Err::NotConstructibleIntegrand,
            "direction dimension mismatch");
    std::vector<RatVec> data(K.cell_count());
    for (int c = 0; c < K.cell_count(); ++c) {
        const auto& verts = K.cell_verts(c);
        data[c].reserve(verts.size());
        for (int v : verts) {
            Rat dot(0);
            const RatVec& p = K.vertex(v);
            for (std::size_t a = 0; a < xi.size(); ++a) dot += p[a] * xi[a];
            data[c].push_back(dot * rat_ll(h.values[c]));
        }
    }
    return DefFun(h.K, std::move(data));
}

std::vector<Rat> kernel_transform(const CFun& h, const std::vector<RatVec>& xis,
                                  KernelMode mode) {
    for (const RatVec& xi : xis)
        require(static_cast<int>(xi.size()) == h.K->ambient_dim(),
                Err::NotConstructibleIntegrand, "direction dimension mismatch");
    std::vector<Rat> out(xis.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(xis.size()); ++i) {
        DefFun integrand = inner_product_integrand(h, xis[i]);
        switch (mode) {
            case KernelMode::Floor: out[i] = integrate(integrand, Measure::Floor); break;
            case KernelMode::Ceil: out[i] = integrate(integrand, Measure::Ceil); break;
            case KernelMode::Avg: out[i] = integrate(integrand, Measure::Avg); break;
            case KernelMode::Width:
                out[i] = integrate(integrand, Measure::Floor) -
                         integrate(integrand, Measure::Ceil);
                break;
        }
    }
    return out;
}

bool avg_linearity_check(const CFun& f, const CFun& g, long long a, long long b,
                         const std::vector<RatVec>& xis) {
    require(f.K.get() == g.K.get(), Err::UnknownCell, "operands on different complexes");
    std::vector<long long> combo(f.values.size());
    for (std::size_t i = 0; i < combo.size(); ++i)
        combo[i] = a * f.values[i] + b * g.values[i];
    CFun cf(f.K, std::move(combo));
    std::vector<Rat> lhs = kernel_transform(cf, xis, KernelMode::Avg);
    std::vector<Rat> tf = kernel_transform(f, xis, KernelMode::Avg);
    std::vector<Rat> tg = kernel_transform(g, xis, KernelMode::Avg);
    for (std::size_t i = 0; i < xis.size(); ++i)
        if (lhs[i] != rat_ll(a) * tf[i] + rat_ll(b) * tg[i]) return false;
    return true;
}

}  // namespace eulerint
