#include "eulerint/linalg.hpp"

#include <cassert>
#include <cstddef>

namespace eulerint {

namespace {

// Forward elimination with column pivot tracking. Returns pivot columns.
// `a` is modified in place to row echelon form; `b` (optional, same row
// count) is carried along.
std::vector<int> echelon(RatMat& a, RatVec* b) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        if (b) std::swap((*b)[piv], (*b)[row]);
        for (int r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[row][col];
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[row][c];
            if (b) (*b)[r] -= factor * (*b)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rat_rank(RatMat a) {
    return static_cast<int>(echelon(a, nullptr).size());
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
    const int n = static_cast<int>(a.size());
    assert(n == 0 || static_cast<int>(a[0].size()) == n);
    std::vector<int> pivots = echelon(a, &b);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    RatVec x(n);
    for (int r = 0; r < n; ++r) x[pivots[r]] = b[r] / a[r][pivots[r]];
    return x;
}

bool rat_affine_solve(RatMat a, RatVec b, RatVec& x0, std::vector<RatVec>& nullspace) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots = echelon(a, &b);
    const int rank = static_cast<int>(pivots.size());
    for (int r = rank; r < m; ++r)
        if (b[r] != 0) return false;

    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[p] = 1;

    x0.assign(n, Rat(0));
    for (int r = 0; r < rank; ++r) x0[pivots[r]] = b[r] / a[r][pivots[r]];

    nullspace.clear();
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(n, Rat(0));
        v[free_col] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivots[r]] = -a[r][free_col] / a[r][pivots[r]];
        nullspace.push_back(std::move(v));
    }
    return true;
}

bool affinely_independent(const std::vector<RatVec>& verts) {
    if (verts.empty()) return false;
    const int k = static_cast<int>(verts.size()) - 1;
    if (k == 0) return true;
    const int d = static_cast<int>(verts[0].size());
    if (k > d) return false;
    RatMat edges(k, RatVec(d));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < d; ++c) edges[i][c] = verts[i + 1][c] - verts[0][c];
    return rat_rank(std::move(edges)) == k;
}

bool relative_interiors_intersect(const std::vector<RatVec>& simplex_a,
                                  const std::vector<RatVec>& simplex_b) {
    const int p = static_cast<int>(simplex_a.size());
    const int q = static_cast<int>(simplex_b.size());
    assert(p > 0 && q > 0);
    const int d = static_cast<int>(simplex_a[0].size());
    const int nvars = p + q;

    // Equalities: sum(lambda)=1, sum(nu)=1, sum lambda_i a_i = sum nu_j b_j.
    RatMat eq(d + 2, RatVec(nvars, Rat(0)));
    RatVec rhs(d + 2, Rat(0));
    for (int i = 0; i < p; ++i) eq[0][i] = 1;
    rhs[0] = 1;
    for (int j = 0; j < q; ++j) eq[1][p + j] = 1;
    rhs[1] = 1;
    for (int c = 0; c < d; ++c) {
        for (int i = 0; i < p; ++i) eq[2 + c][i] = simplex_a[i][c];
        for (int j = 0; j < q; ++j) eq[2 + c][p + j] = -simplex_b[j][c];
    }

    RatVec x0;
    std::vector<RatVec> null_basis;
    if (!rat_affine_solve(std::move(eq), std::move(rhs), x0, null_basis)) return false;

    const int m = static_cast<int>(null_basis.size());
    if (m == 0) {
        for (const Rat& v : x0)
            if (v <= 0) return false;
        return true;
    }

    // Strict feasibility of { x0 + Z t > 0 }: maximize s subject to
    // (x0 + Z t)_i >= s. The feasible region in (t, s) is pointed (the two
    // barycentric-sum rows pin any lineality direction), so the optimum is
    // attained at a basic solution: enumerate (m+1)-subsets of active
    // constraints.
    const int dim = m + 1;
    std::vector<int> subset(dim);
    bool found_positive = false;
    auto check_subset = [&](const std::vector<int>& rows) {
        RatMat sys(dim, RatVec(dim));
        RatVec sb(dim);
        for (int r = 0; r < dim; ++r) {
            int i = rows[r];
            for (int c = 0; c < m; ++c) sys[r][c] = null_basis[c][i];
            sys[r][m] = -1;  // minus s
            sb[r] = -x0[i];
        }
        auto sol = rat_solve(std::move(sys), std::move(sb));
        if (!sol) return;
        // Feasibility: every coordinate of x0 + Z t must be >= s.
        const Rat& s = (*sol)[m];
        for (int i = 0; i < nvars; ++i) {
            Rat v = x0[i];
            for (int c = 0; c < m; ++c) v += null_basis[c][i] * (*sol)[c];
            if (v < s) return;
        }
        if (s > 0) found_positive = true;
    };
    // Iterative subset enumeration (nvars choose dim, both tiny).
    std::vector<int> idx(dim);
    for (int i = 0; i < dim; ++i) idx[i] = i;
    if (dim > nvars) return false;
    while (true) {
        check_subset(idx);
        if (found_positive) return true;
        int i = dim - 1;
        while (i >= 0 && idx[i] == nvars - dim + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

}  // namespace eulerint
