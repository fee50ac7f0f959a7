#include "eulerint/defint.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerint {

namespace {

int cell_sign(const SimplicialComplex& K, int c) { return K.dim(c) % 2 == 0 ? 1 : -1; }

Rat merge_partials(std::vector<Rat>& partials) {
    Rat total(0);
    for (Rat& p : partials) total += p;
    return total;
}

}  // namespace

Rat integrate_serial(const DefFun& h, Measure m) {
    if (m == Measure::Avg)
        return (integrate_serial(h, Measure::Floor) + integrate_serial(h, Measure::Ceil)) / 2;
    Rat total(0);
    for (int c = 0; c < h.K->cell_count(); ++c) {
        const Rat& v = (m == Measure::Floor) ? h.cell_min(c) : h.cell_max(c);
        if (cell_sign(*h.K, c) > 0)
            total += v;
        else
            total -= v;
    }
    return total;
}

Rat integrate(const DefFun& h, Measure m) {
    if (m == Measure::Avg)
        return (integrate(h, Measure::Floor) + integrate(h, Measure::Ceil)) / 2;
    const int C = h.K->cell_count();
    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    std::vector<Rat> partials(nthreads, Rat(0));
#pragma omp parallel
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        Rat local(0);
#pragma omp for schedule(static)
        for (int c = 0; c < C; ++c) {
            const Rat& v = (m == Measure::Floor) ? h.cell_min(c) : h.cell_max(c);
            if (cell_sign(*h.K, c) > 0)
                local += v;
            else
                local -= v;
        }
        partials[tid] = std::move(local);
    }
    return merge_partials(partials);
}

long long chi_excursion(const DefFun& h, const Rat& s, Excursion kind) {
    long long chi = 0;
    const int C = h.K->cell_count();
    for (int c = 0; c < C; ++c) {
        bool in = false;
        switch (kind) {
            case Excursion::GT: in = s < h.cell_max(c); break;
            case Excursion::GE: in = s <= h.cell_min(c); break;
            case Excursion::LT: in = s > h.cell_min(c); break;
            case Excursion::LE: in = s >= h.cell_max(c); break;
        }
        if (in) chi += cell_sign(*h.K, c);
    }
    return chi;
}

namespace {

// Sorted distinct per-cell extrema of h.
RatVec extrema_values(const DefFun& h) {
    RatVec vals;
    vals.reserve(2 * h.K->cell_count());
    for (int c = 0; c < h.K->cell_count(); ++c) {
        vals.push_back(h.cell_min(c));
        vals.push_back(h.cell_max(c));
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

}  // namespace

Rat integrate_levelset(const DefFun& h, Measure m) {
    if (m == Measure::Avg)
        return (integrate_levelset(h, Measure::Floor) + integrate_levelset(h, Measure::Ceil)) / 2;
    // Breakpoints in s: absolute values of per-cell extrema (the integrand
    // chi{h ? s} - chi{h ? -s} can only switch there), plus 0.
    RatVec breaks{Rat(0)};
    for (const Rat& v : extrema_values(h)) breaks.push_back(rat_abs(v));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const int n = static_cast<int>(breaks.size());
    std::vector<Rat> contrib(std::max(0, n - 1), Rat(0));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n - 1; ++i) {
        Rat mid = (breaks[i] + breaks[i + 1]) / 2;
        long long chi;
        if (m == Measure::Floor)
            chi = chi_excursion(h, mid, Excursion::GE) - chi_excursion(h, -mid, Excursion::LT);
        else
            chi = chi_excursion(h, mid, Excursion::GT) - chi_excursion(h, -mid, Excursion::LE);
        contrib[i] = rat_ll(chi) * (breaks[i + 1] - breaks[i]);
    }
    Rat total(0);
    for (const Rat& v : contrib) total += v;
    return total;
}

Rat riemann_oracle_serial(const DefFun& h, long long n, Measure m) {
    require(n >= 1, Err::EmptyRange, "riemann oracle needs n >= 1");
    if (m == Measure::Avg)
        return (riemann_oracle_serial(h, n, Measure::Floor) +
                riemann_oracle_serial(h, n, Measure::Ceil)) /
               2;
    // Per open cell: sum over integer levels s of s * chi_c{ round(n h) = s },
    // with chi of the level piece taken from the excursion table at rational
    // thresholds.
    Rat total(0);
    const Rat nn = rat_ll(n);
    for (int c = 0; c < h.K->cell_count(); ++c) {
        const int sign = cell_sign(*h.K, c);
        long long lo, hi;
        if (m == Measure::Floor) {
            lo = rat_floor_ll(nn * h.cell_min(c));
            hi = rat_floor_ll(nn * h.cell_max(c));
        } else {
            lo = rat_ceil_ll(nn * h.cell_min(c));
            hi = rat_ceil_ll(nn * h.cell_max(c));
        }
        for (long long s = lo; s <= hi; ++s) {
            // chi_c{floor(nh) = s} = chi_c{nh >= s} - chi_c{nh >= s+1};
            // ceil:  chi_c{ceil(nh) = s} = chi_c{nh > s-1} - chi_c{nh > s}.
            int level;
            if (m == Measure::Floor) {
                bool in_lo = rat_ll(s) / nn <= h.cell_min(c);
                bool in_hi = rat_ll(s + 1) / nn <= h.cell_min(c);
                level = (in_lo ? 1 : 0) - (in_hi ? 1 : 0);
            } else {
                bool in_lo = rat_ll(s - 1) / nn < h.cell_max(c);
                bool in_hi = rat_ll(s) / nn < h.cell_max(c);
                level = (in_lo ? 1 : 0) - (in_hi ? 1 : 0);
            }
            if (level != 0) total += rat_ll(sign) * rat_ll(s) * level;
        }
    }
    return total / nn;
}

Rat riemann_oracle(const DefFun& h, long long n, Measure m) {
    require(n >= 1, Err::EmptyRange, "riemann oracle needs n >= 1");
    if (m == Measure::Avg)
        return (riemann_oracle(h, n, Measure::Floor) + riemann_oracle(h, n, Measure::Ceil)) / 2;
    // Telescoped level-set sum for the step function g = floor(n h) (Ceil:
    // ceil(n h)):  int g dchi = sum_{s>=0} chi{g>s} - chi{g<-s}. All the
    // per-level comparisons reduce to integer comparisons against
    // floor(n*inf) (Floor) or ceil(n*sup) (Ceil) per cell, precomputed once.
    const int C = h.K->cell_count();
    const Rat nn = rat_ll(n);
    std::vector<long long> key(C);
    std::vector<int> sign(C);
    long long S = 0;
    for (int c = 0; c < C; ++c) {
        key[c] = (m == Measure::Floor) ? rat_floor_ll(nn * h.cell_min(c))
                                       : rat_ceil_ll(nn * h.cell_max(c));
        sign[c] = cell_sign(*h.K, c);
        S = std::max(S, std::llabs(key[c]) + 1);
    }
    // Floor: {floor(nh) > s} = {h >= (s+1)/n}, active iff s+1 <= floor(n*inf);
    //        {floor(nh) < -s} = {h < -s/n}, active iff floor(n*inf) <= -s-1.
    // Ceil:  {ceil(nh) > s} = {h > s/n}, active iff s+1 <= ceil(n*sup);
    //        {ceil(nh) < -s} = {h <= (-s-1)/n}, active iff ceil(n*sup) <= -s-1.
    // Both reduce to the same comparisons against the per-cell key.
    long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (long long s = 0; s <= S; ++s) {
        long long chi_above = 0, chi_below = 0;
        for (int c = 0; c < C; ++c) {
            if (key[c] >= s + 1) chi_above += sign[c];
            if (key[c] <= -s - 1) chi_below += sign[c];
        }
        total += chi_above - chi_below;
    }
    return rat_ll(total) / nn;
}

Rat epsilon_formula(const DefFun& h, const Rat& eps, Measure m) {
    require(eps > 0, Err::EpsilonTooLarge, "eps must be positive");
    if (m == Measure::Avg)
        return (epsilon_formula(h, eps, Measure::Floor) +
                epsilon_formula(h, eps, Measure::Ceil)) /
               2;
    RatVec vals = extrema_values(h);
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        require(eps < vals[i + 1] - vals[i], Err::EpsilonTooLarge,
                "eps exceeds the minimal gap between per-cell extrema");

    RatVec breaks;
    for (const Rat& v : vals) {
        breaks.push_back(v);
        breaks.push_back(v - eps);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    // Integrand s * chi{s <= h < s+eps} (Ceil: strict/weak swapped) is
    // piecewise linear in s between breakpoints; integrate each piece
    // exactly via chi * (b^2 - a^2)/2.
    Rat total(0);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rat& a = breaks[i];
        const Rat& b = breaks[i + 1];
        Rat mid = (a + b) / 2;
        long long chi;
        if (m == Measure::Floor)
            chi = chi_excursion(h, mid, Excursion::GE) - chi_excursion(h, mid + eps, Excursion::GE);
        else
            chi = chi_excursion(h, mid, Excursion::GT) - chi_excursion(h, mid + eps, Excursion::GT);
        if (chi != 0) total += rat_ll(chi) * (b * b - a * a) / 2;
    }
    return total / eps;
}

DefFun line_pushforward(const DefFun& h) {
    RatVec vals = extrema_values(h);
    const int n = static_cast<int>(vals.size());
    std::vector<RatVec> coords;
    for (const Rat& v : vals) coords.push_back({v});
    std::vector<std::vector<int>> cells;
    for (int i = 0; i + 1 < n; ++i) cells.push_back({i, i + 1});
    if (cells.empty()) cells.push_back({0});
    auto L = build_complex(std::move(coords), cells);

    // gamma(s) = chi{h = s} = chi{h >= s} - chi{h > s}.
    auto gamma = [&](const Rat& s) {
        return chi_excursion(h, s, Excursion::GE) - chi_excursion(h, s, Excursion::GT);
    };
    std::vector<RatVec> data(L->cell_count());
    for (int i = 0; i < n; ++i)
        data[L->vertex_cell(i)] = {vals[i] * rat_ll(gamma(vals[i]))};
    for (int i = 0; i + 1 < n; ++i) {
        long long g = gamma((vals[i] + vals[i + 1]) / 2);
        std::array<int, 2> e{i, i + 1};
        data[L->cell_id(e)] = {vals[i] * rat_ll(g), vals[i + 1] * rat_ll(g)};
    }
    return DefFun(std::move(L), std::move(data));
}

Rat pushforward_to_line(const DefFun& h, Measure m) {
    return integrate(line_pushforward(h), m);
}

DefFun pushforward_def(const SimplicialMap& F, const DefFun& h) {
    require(h.K.get() == F.source.get(), Err::InvalidMap, "integrand lives on wrong complex");
    const SimplicialComplex& Y = *F.target;

    // For each target cell, the affine function (on the target's vertices)
    // induced by every source cell mapping onto it; all must agree.
    std::vector<std::map<int, Rat>> phi(Y.cell_count());
    std::vector<char> has_phi(Y.cell_count(), 0);
    std::vector<long long> fiber_chi(Y.cell_count(), 0);
    for (int c = 0; c < F.source->cell_count(); ++c) {
        const int tau = F.image_cell(c);
        const auto& sverts = F.source->cell_verts(c);
        std::map<int, Rat> induced;
        for (std::size_t i = 0; i < sverts.size(); ++i) {
            const int w = F.vertex_map[sverts[i]];
            auto it = induced.find(w);
            if (it == induced.end()) {
                induced.emplace(w, h.data[c][i]);
            } else {
                require(it->second == h.data[c][i], Err::NotFiberConstant,
                        "integrand varies within a collapsed cell");
            }
        }
        if (!has_phi[tau]) {
            phi[tau] = std::move(induced);
            has_phi[tau] = 1;
        } else {
            require(phi[tau] == induced, Err::NotFiberConstant,
                    "integrand differs between source cells over one target cell");
        }
        const int drop = F.source->dim(c) - Y.dim(tau);
        fiber_chi[tau] += (drop % 2 == 0) ? 1 : -1;
    }

    std::vector<RatVec> data(Y.cell_count());
    for (int t = 0; t < Y.cell_count(); ++t) {
        const auto& verts = Y.cell_verts(t);
        data[t].assign(verts.size(), Rat(0));
        if (!has_phi[t]) continue;
        for (std::size_t i = 0; i < verts.size(); ++i)
            data[t][i] = phi[t].at(verts[i]) * rat_ll(fiber_chi[t]);
    }
    return DefFun(F.target, std::move(data));
}

std::pair<Rat, Rat> fubini_fiber_preserving(const SimplicialMap& F, const DefFun& h, Measure m) {
    DefFun pushed = pushforward_def(F, h);
    return {integrate(pushed, m), integrate(h, m)};
}

}  // namespace eulerint
