#include "rdim/an_category.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "rdim/errors.hpp"

namespace rdim {

void IntervalObject::validate() const
{
    if (n == 0)
        throw InputError("an.n", "n must be positive");
    for (const auto& s : summands)
        if (s.lo < 1 || s.lo > s.hi || s.hi > n)
            throw InputError("an.interval", "interval outside the vertex range");
}

bool interval_hom_nonzero(size_t a, size_t b, size_t c, size_t d)
{
    return c <= a && a <= d && d <= b;
}

bool interval_ext_nonzero(size_t a, size_t b, size_t c, size_t d)
{
    return a + 1 <= c && c <= b + 1 && b + 1 <= d;
}

size_t an_hom_total(const IntervalObject& x, const IntervalObject& y)
{
    if (x.n != y.n)
        throw InputError("an.n_mismatch", "objects over different A_n");
    x.validate();
    y.validate();
    size_t total = 0;
    for (const auto& s : x.summands)
        for (const auto& t : y.summands) {
            long rel = t.shift - s.shift;
            if (rel == 0 && interval_hom_nonzero(s.lo, s.hi, t.lo, t.hi))
                ++total;
            else if (rel == 1 && interval_ext_nonzero(s.lo, s.hi, t.lo, t.hi))
                ++total;
        }
    return total;
}

Rep interval_rep(size_t n, size_t lo, size_t hi)
{
    Rep r;
    r.n = n;
    r.dims.assign(n, 0);
    for (size_t v = lo; v <= hi; ++v)
        r.dims[v - 1] = 1;
    r.maps.clear();
    for (size_t v = 0; v + 1 < n; ++v) {
        QMatrix m(r.dims[v + 1], r.dims[v]);
        if (r.dims[v] == 1 && r.dims[v + 1] == 1 && v + 1 >= lo && v + 2 <= hi)
            m.at(0, 0) = 1;
        r.maps.push_back(std::move(m));
    }
    return r;
}

namespace {

Rep direct_sum(const Rep& a, const Rep& b)
{
    assert(a.n == b.n);
    Rep out;
    out.n = a.n;
    out.dims.resize(a.n);
    for (size_t v = 0; v < a.n; ++v)
        out.dims[v] = a.dims[v] + b.dims[v];
    for (size_t v = 0; v + 1 < a.n; ++v) {
        QMatrix m(out.dims[v + 1], out.dims[v]);
        for (size_t i = 0; i < a.dims[v + 1]; ++i)
            for (size_t j = 0; j < a.dims[v]; ++j)
                m.at(i, j) = a.maps[v].at(i, j);
        for (size_t i = 0; i < b.dims[v + 1]; ++i)
            for (size_t j = 0; j < b.dims[v]; ++j)
                m.at(a.dims[v + 1] + i, a.dims[v] + j) = b.maps[v].at(i, j);
        out.maps.push_back(std::move(m));
    }
    return out;
}

Rep empty_rep(size_t n)
{
    Rep r;
    r.n = n;
    r.dims.assign(n, 0);
    for (size_t v = 0; v + 1 < n; ++v)
        r.maps.push_back(QMatrix(0, 0));
    return r;
}

// rank of the composite map rep(p) -> rep(q), 1-based vertices, p <= q
size_t composite_rank(const Rep& rep, size_t p, size_t q)
{
    if (p == q)
        return rep.dims[p - 1];
    QMatrix acc = rep.maps[p - 1];
    for (size_t v = p; v + 1 < q; ++v)
        acc = rep.maps[v] * acc;
    return rank(acc);
}

} // namespace

std::map<std::pair<size_t, size_t>, size_t> decompose_rep(const Rep& rep)
{
    const size_t n = rep.n;
    // r[p][q] = rank of V_p -> V_q (p <= q), 0 outside
    std::vector<std::vector<size_t>> r(n + 2, std::vector<size_t>(n + 2, 0));
    for (size_t p = 1; p <= n; ++p)
        for (size_t q = p; q <= n; ++q)
            r[p][q] = composite_rank(rep, p, q);

    std::map<std::pair<size_t, size_t>, size_t> mult;
    for (size_t p = 1; p <= n; ++p)
        for (size_t q = p; q <= n; ++q) {
            long m = static_cast<long>(r[p][q]);
            m -= (p > 1) ? static_cast<long>(r[p - 1][q]) : 0;
            m -= (q < n) ? static_cast<long>(r[p][q + 1]) : 0;
            m += (p > 1 && q < n) ? static_cast<long>(r[p - 1][q + 1]) : 0;
            if (m < 0)
                throw std::logic_error("negative interval multiplicity");
            if (m > 0)
                mult[{p, q}] = static_cast<size_t>(m);
        }
    return mult;
}

size_t hom_dim_brute_force(size_t n, size_t a, size_t b, size_t c, size_t d)
{
    Rep X = interval_rep(n, a, b);
    Rep Y = interval_rep(n, c, d);
    // unknowns: entries of f_v (Y.dims[v] x X.dims[v]); equations from the
    // commuting squares f_{v+1} X.maps[v] = Y.maps[v] f_v
    std::vector<size_t> offset(n, 0);
    size_t nunk = 0;
    for (size_t v = 0; v < n; ++v) {
        offset[v] = nunk;
        nunk += X.dims[v] * Y.dims[v];
    }
    if (nunk == 0)
        return 0;
    std::vector<std::vector<Rational>> rows;
    for (size_t v = 0; v + 1 < n; ++v) {
        for (size_t i = 0; i < Y.dims[v + 1]; ++i)
            for (size_t j = 0; j < X.dims[v]; ++j) {
                std::vector<Rational> row(nunk, Rational(0));
                // (f_{v+1} X.maps[v])_{ij} = sum_k f_{v+1}(i,k) Xmap(k,j)
                for (size_t k = 0; k < X.dims[v + 1]; ++k)
                    row[offset[v + 1] + i * X.dims[v + 1] + k] += X.maps[v].at(k, j);
                // (Y.maps[v] f_v)_{ij} = sum_k Ymap(i,k) f_v(k,j)
                for (size_t k = 0; k < Y.dims[v]; ++k)
                    row[offset[v] + k * X.dims[v] + j] -= Y.maps[v].at(i, k);
                rows.push_back(std::move(row));
            }
    }
    QMatrix A(rows.size(), nunk);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < nunk; ++j)
            A.at(i, j) = rows[i][j];
    return nunk - rank(A);
}

size_t ext_dim_brute_force(size_t n, size_t a, size_t b, size_t c, size_t d)
{
    // hereditary: dim Hom - dim Ext^1 = <dim X, dim Y> (Euler form)
    Rep X = interval_rep(n, a, b);
    Rep Y = interval_rep(n, c, d);
    long euler = 0;
    for (size_t v = 0; v < n; ++v)
        euler += static_cast<long>(X.dims[v]) * static_cast<long>(Y.dims[v]);
    for (size_t v = 0; v + 1 < n; ++v)
        euler -= static_cast<long>(X.dims[v]) * static_cast<long>(Y.dims[v + 1]);
    long hom = static_cast<long>(hom_dim_brute_force(n, a, b, c, d));
    long ext = hom - euler;
    assert(ext >= 0);
    return static_cast<size_t>(ext);
}

// ---------------------------------------------------------------------------
// Chain-level machinery.
//
// RepComplex layout: groups[k] sits in homological degree min_degree + k and
// diffs[k] holds the per-vertex matrices of d: groups[k+1] -> groups[k]
// (diffs.size() == groups.size() - 1). Objects are built from the projective
// resolutions P_{hi+1} -> P_lo of intervals, so every chain group is a sum of
// projectives and every derived-category map is realized by a chain map.
// ---------------------------------------------------------------------------

namespace {

struct ProjSummand {
    size_t proj;  // P_proj = M[proj, n]; proj in 1..n (n+1 means the zero module)
    long degree;
};

// chain groups of Σ^s M[lo,hi]: P_lo in degree s, P_{hi+1} in degree s+1
struct Layout {
    // for each complex degree, the list of (object index, which piece) so we
    // can address blocks; piece 0 = P_lo, piece 1 = P_{hi+1}
    std::vector<std::vector<std::pair<size_t, int>>> slots;
    long min_degree = 0;
};

Layout layout_of(const IntervalObject& x)
{
    Layout lay;
    if (x.summands.empty()) {
        lay.min_degree = 0;
        return lay;
    }
    long lo = x.summands.front().shift, hi = x.summands.front().shift;
    for (const auto& s : x.summands) {
        lo = std::min(lo, s.shift);
        hi = std::max(hi, s.shift + 1);
    }
    lay.min_degree = lo;
    lay.slots.assign(static_cast<size_t>(hi - lo + 1), {});
    for (size_t i = 0; i < x.summands.size(); ++i) {
        const auto& s = x.summands[i];
        lay.slots[static_cast<size_t>(s.shift - lo)].push_back({i, 0});
        if (s.hi < x.n)
            lay.slots[static_cast<size_t>(s.shift + 1 - lo)].push_back({i, 1});
    }
    return lay;
}

size_t proj_of_piece(const IntervalObject& x, size_t summand, int piece)
{
    const auto& s = x.summands[summand];
    return piece == 0 ? s.lo : s.hi + 1;
}

// vertex dimensions of P_i
size_t proj_dim_at(size_t n, size_t proj, size_t v /*1-based*/)
{
    return (proj <= n && v >= proj) ? 1 : 0;
}

// the canonical map P_i -> P_j (j <= i) is identity on the common support
Rational canonical_entry(size_t n, size_t from_proj, size_t to_proj, size_t v)
{
    if (proj_dim_at(n, from_proj, v) == 0 || proj_dim_at(n, to_proj, v) == 0)
        return Rational(0);
    (void)from_proj;
    (void)to_proj;
    return Rational(1);
}

Rep group_rep(const IntervalObject& x, const Layout& lay, size_t k)
{
    Rep g = empty_rep(x.n);
    if (k >= lay.slots.size())
        return g;
    for (auto [si, piece] : lay.slots[k]) {
        size_t p = proj_of_piece(x, si, piece);
        g = direct_sum(g, interval_rep(x.n, p, x.n));
    }
    return g;
}

// offset of a slot's block at a given vertex inside the direct sum
size_t slot_offset(const IntervalObject& x, const Layout& lay, size_t k, size_t slot_index,
                   size_t v)
{
    size_t off = 0;
    for (size_t s = 0; s < slot_index; ++s) {
        auto [si, piece] = lay.slots[k][s];
        off += proj_dim_at(x.n, proj_of_piece(x, si, piece), v);
    }
    return off;
}

} // namespace

RepComplex object_complex(const IntervalObject& x)
{
    x.validate();
    Layout lay = layout_of(x);
    RepComplex c;
    c.n = x.n;
    c.min_degree = lay.min_degree;
    for (size_t k = 0; k < lay.slots.size(); ++k)
        c.groups.push_back(group_rep(x, lay, k));
    for (size_t k = 0; k + 1 < lay.slots.size(); ++k) {
        // d: groups[k+1] -> groups[k]; per-vertex matrices
        std::vector<QMatrix> d;
        for (size_t v = 1; v <= x.n; ++v) {
            QMatrix m(c.groups[k].dims[v - 1], c.groups[k + 1].dims[v - 1]);
            // the only differentials are P_{hi+1} -> P_lo within one summand
            for (size_t s_hi = 0; s_hi < lay.slots[k + 1].size(); ++s_hi) {
                auto [si, piece] = lay.slots[k + 1][s_hi];
                if (piece != 1)
                    continue;
                // find P_lo of the same summand in degree k
                for (size_t s_lo = 0; s_lo < lay.slots[k].size(); ++s_lo) {
                    auto [sj, pj] = lay.slots[k][s_lo];
                    if (sj != si || pj != 0)
                        continue;
                    size_t from = proj_of_piece(x, si, 1);
                    size_t to = proj_of_piece(x, si, 0);
                    Rational e = canonical_entry(x.n, from, to, v);
                    if (e != 0) {
                        size_t row = slot_offset(x, lay, k, s_lo, v);
                        size_t col = slot_offset(x, lay, k + 1, s_hi, v);
                        m.at(row, col) = e;
                    }
                }
            }
            d.push_back(std::move(m));
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

namespace {

// homology of a complex of representations, one Rep per degree
std::vector<std::pair<long, Rep>> complex_homology(const RepComplex& c)
{
    std::vector<std::pair<long, Rep>> out;
    const size_t len = c.groups.size();
    for (size_t k = 0; k < len; ++k) {
        // cycles: ker d_k (d out of degree k, i.e. diffs[k-1]: groups[k] -> groups[k-1])
        // boundaries: im d_{k+1} (diffs[k]: groups[k+1] -> groups[k])
        std::vector<QMatrix> cycle_basis(c.n);
        for (size_t v = 0; v < c.n; ++v) {
            if (k == 0) {
                cycle_basis[v] = QMatrix::identity(c.groups[k].dims[v]);
            } else {
                cycle_basis[v] = kernel_basis(c.diffs[k - 1][v]);
            }
        }
        std::vector<QMatrix> boundary(c.n);
        for (size_t v = 0; v < c.n; ++v) {
            boundary[v] =
                k + 1 < len ? c.diffs[k][v] : QMatrix(c.groups[k].dims[v], 0);
        }

        // homology basis per vertex: columns of cycle_basis independent
        // modulo the boundary columns
        std::vector<QMatrix> hom_basis(c.n);
        std::vector<size_t> hdim(c.n, 0);
        for (size_t v = 0; v < c.n; ++v) {
            QMatrix big = boundary[v].augment(cycle_basis[v]);
            // pivot columns beyond the boundary block pick homology reps
            QMatrix copy = big;
            // local rref to find pivot columns
            std::vector<size_t> pivots;
            {
                size_t row = 0;
                for (size_t col = 0; col < copy.cols() && row < copy.rows(); ++col) {
                    size_t p = row;
                    while (p < copy.rows() && copy.at(p, col) == 0)
                        ++p;
                    if (p == copy.rows())
                        continue;
                    if (p != row)
                        for (size_t j = 0; j < copy.cols(); ++j)
                            std::swap(copy.at(p, j), copy.at(row, j));
                    Rational inv = Rational(1) / copy.at(row, col);
                    for (size_t j = col; j < copy.cols(); ++j)
                        copy.at(row, j) *= inv;
                    for (size_t i = 0; i < copy.rows(); ++i) {
                        if (i == row || copy.at(i, col) == 0)
                            continue;
                        Rational f = copy.at(i, col);
                        for (size_t j = col; j < copy.cols(); ++j)
                            copy.at(i, j) -= f * copy.at(row, j);
                    }
                    pivots.push_back(col);
                    ++row;
                }
            }
            std::vector<size_t> rep_cols;
            for (size_t col : pivots)
                if (col >= boundary[v].cols())
                    rep_cols.push_back(col - boundary[v].cols());
            hdim[v] = rep_cols.size();
            QMatrix h(c.groups[k].dims[v], rep_cols.size());
            for (size_t j = 0; j < rep_cols.size(); ++j)
                for (size_t i = 0; i < c.groups[k].dims[v]; ++i)
                    h.at(i, j) = cycle_basis[v].at(i, rep_cols[j]);
            hom_basis[v] = std::move(h);
        }

        // induced arrow maps on homology: express A_v * h in the basis
        // [boundary | hom_basis] of the target and read off the tail block
        Rep hrep;
        hrep.n = c.n;
        hrep.dims.assign(c.n, 0);
        for (size_t v = 0; v < c.n; ++v)
            hrep.dims[v] = hdim[v];
        for (size_t v = 0; v + 1 < c.n; ++v) {
            QMatrix m(hdim[v + 1], hdim[v]);
            if (hdim[v] > 0 && hdim[v + 1] > 0) {
                QMatrix solver = boundary[v + 1].augment(hom_basis[v + 1]);
                for (size_t j = 0; j < hdim[v]; ++j) {
                    // image of the j-th homology vector under the arrow
                    std::vector<Rational> img(c.groups[k].dims[v + 1], Rational(0));
                    for (size_t i = 0; i < c.groups[k].dims[v + 1]; ++i)
                        for (size_t t = 0; t < c.groups[k].dims[v]; ++t)
                            img[i] += c.groups[k].maps[v].at(i, t) * hom_basis[v].at(t, j);
                    auto sol = solve(solver, img);
                    if (!sol)
                        throw std::logic_error("homology arrow image escapes cycles");
                    for (size_t i = 0; i < hdim[v + 1]; ++i)
                        m.at(i, j) = (*sol)[boundary[v + 1].cols() + i];
                }
            }
            hrep.maps.push_back(std::move(m));
        }
        out.push_back({c.min_degree + static_cast<long>(k), std::move(hrep)});
    }
    return out;
}

} // namespace

std::vector<IntervalSummand> homology_summands(const RepComplex& c)
{
    std::vector<IntervalSummand> out;
    for (const auto& [deg, rep] : complex_homology(c)) {
        for (const auto& [iv, mult] : decompose_rep(rep))
            for (size_t i = 0; i < mult; ++i)
                out.push_back({iv.first, iv.second, deg});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntervalSummand> cone_summands(
    const IntervalObject& A, const IntervalObject& B,
    const std::map<std::pair<size_t, size_t>, Rational>& components)
{
    if (A.n != B.n)
        throw InputError("an.n_mismatch", "cone endpoints over different A_n");
    A.validate();
    B.validate();
    // X = Σ^{-1} B as a complex, Y = A
    IntervalObject shifted = B;
    for (auto& s : shifted.summands)
        s.shift -= 1;
    RepComplex X = object_complex(shifted);
    RepComplex Y = object_complex(A);
    Layout layX = layout_of(shifted);
    Layout layY = layout_of(A);

    // admissibility + chain map f: X -> Y, degreewise per vertex
    for (const auto& [key, scalar] : components) {
        auto [bi, ai] = key;
        if (bi >= B.summands.size() || ai >= A.summands.size())
            throw InputError("an.component", "component index out of range");
        const auto& sb = shifted.summands[bi];
        const auto& sa = A.summands[ai];
        long rel = sa.shift - sb.shift;
        bool ok = (rel == 0 && interval_hom_nonzero(sb.lo, sb.hi, sa.lo, sa.hi)) ||
                  (rel == 1 && interval_ext_nonzero(sb.lo, sb.hi, sa.lo, sa.hi));
        if (!ok && scalar != 0)
            throw InputError("an.component", "component without a nonzero hom space");
    }

    // build the degreewise chain-map blocks
    long lo = std::min(X.min_degree, Y.min_degree);
    long hi = std::max(X.min_degree + static_cast<long>(X.groups.size()),
                       Y.min_degree + static_cast<long>(Y.groups.size()));
    auto x_group = [&](long deg) -> const Rep* {
        long k = deg - X.min_degree;
        return (k >= 0 && k < static_cast<long>(X.groups.size())) ? &X.groups[k] : nullptr;
    };
    auto y_group = [&](long deg) -> const Rep* {
        long k = deg - Y.min_degree;
        return (k >= 0 && k < static_cast<long>(Y.groups.size())) ? &Y.groups[k] : nullptr;
    };

    // f[deg][v]: X_deg -> Y_deg
    std::map<long, std::vector<QMatrix>> f;
    for (long deg = lo; deg < hi; ++deg) {
        const Rep* xg = x_group(deg);
        const Rep* yg = y_group(deg);
        std::vector<QMatrix> mats;
        for (size_t v = 1; v <= A.n; ++v) {
            size_t rows = yg ? yg->dims[v - 1] : 0;
            size_t cols = xg ? xg->dims[v - 1] : 0;
            mats.push_back(QMatrix(rows, cols));
        }
        f[deg] = std::move(mats);
    }

    for (const auto& [key, scalar] : components) {
        if (scalar == 0)
            continue;
        auto [bi, ai] = key;
        const auto& sb = shifted.summands[bi];
        const auto& sa = A.summands[ai];
        long rel = sa.shift - sb.shift;
        // pieces: (piece in source, piece in target, degree)
        std::vector<std::tuple<int, int, long>> legs;
        if (rel == 0) {
            legs.push_back({0, 0, sb.shift});     // P_{lo_b} -> P_{lo_a}
            legs.push_back({1, 1, sb.shift + 1}); // P_{hi_b+1} -> P_{hi_a+1}
        } else {
            legs.push_back({1, 0, sb.shift + 1}); // P_{hi_b+1} -> P_{lo_a}
        }
        for (auto [pb, pa, deg] : legs) {
            if (pb == 1 && sb.hi >= B.n)
                continue;
            if (pa == 1 && sa.hi >= A.n)
                continue;
            size_t from = proj_of_piece(shifted, bi, pb);
            size_t to = proj_of_piece(A, ai, pa);
            long kx = deg - X.min_degree;
            long ky = deg - Y.min_degree;
            assert(kx >= 0 && ky >= 0);
            // locate slot indices
            size_t sxi = SIZE_MAX, syi = SIZE_MAX;
            for (size_t s = 0; s < layX.slots[static_cast<size_t>(kx)].size(); ++s)
                if (layX.slots[static_cast<size_t>(kx)][s] == std::make_pair(bi, pb))
                    sxi = s;
            for (size_t s = 0; s < layY.slots[static_cast<size_t>(ky)].size(); ++s)
                if (layY.slots[static_cast<size_t>(ky)][s] == std::make_pair(ai, pa))
                    syi = s;
            assert(sxi != SIZE_MAX && syi != SIZE_MAX);
            for (size_t v = 1; v <= A.n; ++v) {
                Rational e = canonical_entry(A.n, from, to, v);
                if (e == 0)
                    continue;
                size_t row = slot_offset(A, layY, static_cast<size_t>(ky), syi, v);
                size_t col = slot_offset(shifted, layX, static_cast<size_t>(kx), sxi, v);
                f[deg][v - 1].at(row, col) += scalar * e;
            }
        }
    }

    // cone: C_d = X_{d-1} ⊕ Y_d with differential [[-dX, 0], [f, dY]]
    RepComplex cone;
    cone.n = A.n;
    cone.min_degree = lo;
    std::vector<Rep> groups;
    for (long deg = lo; deg <= hi; ++deg) {
        const Rep* xprev = x_group(deg - 1);
        const Rep* yg = y_group(deg);
        Rep g = xprev ? *xprev : empty_rep(A.n);
        g = direct_sum(g, yg ? *yg : empty_rep(A.n));
        groups.push_back(std::move(g));
    }
    cone.groups = groups;
    for (long deg = lo; deg < hi; ++deg) {
        // d: cone_{deg+1} -> cone_deg
        const Rep* xu = x_group(deg);      // X part of cone_{deg+1}
        const Rep* yu = y_group(deg + 1);  // Y part of cone_{deg+1}
        const Rep* xl = x_group(deg - 1);  // X part of cone_deg
        const Rep* yl = y_group(deg);      // Y part of cone_deg
        std::vector<QMatrix> d;
        for (size_t v = 0; v < A.n; ++v) {
            size_t rows = (xl ? xl->dims[v] : 0) + (yl ? yl->dims[v] : 0);
            size_t cols = (xu ? xu->dims[v] : 0) + (yu ? yu->dims[v] : 0);
            QMatrix m(rows, cols);
            // -dX block: X_deg -> X_{deg-1}
            long kx = deg - X.min_degree; // differential index into X.diffs
            if (xu && xl && kx - 1 >= 0 && static_cast<size_t>(kx - 1) < X.diffs.size()) {
                const QMatrix& dx = X.diffs[static_cast<size_t>(kx - 1)][v];
                for (size_t i = 0; i < xl->dims[v]; ++i)
                    for (size_t j = 0; j < xu->dims[v]; ++j)
                        m.at(i, j) = -dx.at(i, j);
            }
            // f block: X_deg -> Y_deg
            if (xu && yl) {
                const QMatrix& fb = f[deg][v];
                for (size_t i = 0; i < yl->dims[v]; ++i)
                    for (size_t j = 0; j < xu->dims[v]; ++j)
                        m.at((xl ? xl->dims[v] : 0) + i, j) = fb.at(i, j);
            }
            // dY block: Y_{deg+1} -> Y_deg
            long ky = deg - Y.min_degree;
            if (yu && yl && ky >= 0 && static_cast<size_t>(ky) < Y.diffs.size()) {
                const QMatrix& dy = Y.diffs[static_cast<size_t>(ky)][v];
                for (size_t i = 0; i < yl->dims[v]; ++i)
                    for (size_t j = 0; j < yu->dims[v]; ++j)
                        m.at((xl ? xl->dims[v] : 0) + i, (xu ? xu->dims[v] : 0) + j) =
                            dy.at(i, j);
            }
            d.push_back(std::move(m));
        }
        cone.diffs.push_back(std::move(d));
    }

    return homology_summands(cone);
}

bool GenerationResult::complete() const
{
    return level.size() == n * (n + 1) / 2;
}

IntervalObject full_additive_generator(size_t n)
{
    IntervalObject g;
    g.n = n;
    for (size_t lo = 1; lo <= n; ++lo)
        for (size_t hi = lo; hi <= n; ++hi)
            g.summands.push_back({lo, hi, 0});
    return g;
}

IntervalObject projective_generator(size_t n)
{
    IntervalObject g;
    g.n = n;
    for (size_t i = 1; i <= n; ++i)
        g.summands.push_back({i, n, 0});
    return g;
}

namespace {

using IntervalKey = std::pair<size_t, size_t>;

// enumerate cone summands over capped sums and scalar patterns
void enumerate_new_intervals(const std::vector<IntervalSummand>& a_pool,
                             const std::vector<IntervalSummand>& b_pool, size_t n,
                             std::set<IntervalKey>& found)
{
    std::vector<std::vector<IntervalSummand>> a_sets, b_sets;
    for (size_t i = 0; i < a_pool.size(); ++i) {
        a_sets.push_back({a_pool[i]});
        for (size_t j = i + 1; j < a_pool.size(); ++j)
            a_sets.push_back({a_pool[i], a_pool[j]});
    }
    for (size_t i = 0; i < b_pool.size(); ++i) {
        b_sets.push_back({b_pool[i]});
        for (size_t j = i + 1; j < b_pool.size(); ++j)
            b_sets.push_back({b_pool[i], b_pool[j]});
    }

    static const Rational scalar_choices[2] = {Rational(1), Rational(-1)};

    for (const auto& aset : a_sets) {
        IntervalObject A;
        A.n = n;
        A.summands = aset;
        for (const auto& bset : b_sets) {
            IntervalObject B;
            B.n = n;
            B.summands = bset;
            // admissible component slots (after the internal Σ^{-1})
            std::vector<std::pair<size_t, size_t>> slots;
            for (size_t bi = 0; bi < bset.size(); ++bi)
                for (size_t ai = 0; ai < aset.size(); ++ai) {
                    long rel = aset[ai].shift - (bset[bi].shift - 1);
                    bool ok =
                        (rel == 0 && interval_hom_nonzero(bset[bi].lo, bset[bi].hi,
                                                          aset[ai].lo, aset[ai].hi)) ||
                        (rel == 1 && interval_ext_nonzero(bset[bi].lo, bset[bi].hi,
                                                          aset[ai].lo, aset[ai].hi));
                    if (ok)
                        slots.push_back({bi, ai});
                }
            if (slots.empty())
                continue;
            // on/off with sign per slot
            size_t patterns = 1;
            for (size_t s = 0; s < slots.size(); ++s)
                patterns *= 3;
            for (size_t code = 1; code < patterns; ++code) {
                std::map<std::pair<size_t, size_t>, Rational> comps;
                size_t rest = code;
                bool any = false;
                for (const auto& slot : slots) {
                    size_t digit = rest % 3;
                    rest /= 3;
                    if (digit > 0) {
                        comps[slot] = scalar_choices[digit - 1];
                        any = true;
                    }
                }
                if (!any)
                    continue;
                for (const auto& s : cone_summands(A, B, comps))
                    found.insert({s.lo, s.hi});
            }
        }
    }
}

} // namespace

GenerationResult generation_time(const IntervalObject& generator, size_t n, size_t max_level)
{
    generator.validate();
    if (generator.summands.empty())
        throw InputError("an.empty_generator", "generator must be nonempty");
    if (generator.n != n)
        throw InputError("an.n_mismatch", "generator over a different A_n");

    GenerationResult res;
    res.n = n;
    res.max_level = max_level;
    for (const auto& s : generator.summands)
        if (!res.level.count({s.lo, s.hi}))
            res.level[{s.lo, s.hi}] = 1;

    std::vector<IntervalSummand> b_pool;
    {
        std::set<IntervalKey> gens;
        for (const auto& s : generator.summands)
            gens.insert({s.lo, s.hi});
        // with A-side shifts in {0,1}, hom components need B-shift σ+1 and
        // ext components need B-shift σ, so {0,1,2} covers every case
        for (const auto& g : gens)
            for (long t = 0; t <= 2; ++t)
                b_pool.push_back({g.first, g.second, t});
    }

    for (size_t m = 1; m < max_level; ++m) {
        if (res.complete())
            break;
        std::vector<IntervalSummand> a_pool;
        for (const auto& [iv, lvl] : res.level) {
            (void)lvl;
            a_pool.push_back({iv.first, iv.second, 0});
            a_pool.push_back({iv.first, iv.second, 1});
        }
        std::set<IntervalKey> found;
        enumerate_new_intervals(a_pool, b_pool, n, found);
        bool progressed = false;
        for (const auto& iv : found)
            if (!res.level.count(iv)) {
                res.level[iv] = m + 1;
                progressed = true;
            }
        if (!progressed)
            break; // fixed point: nothing new can ever appear
    }
    return res;
}

} // namespace rdim
