#include "rdim/commalg.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "rdim/errors.hpp"

namespace rdim {

struct RingPresentation::Cache {
    std::once_flag once;
    GroebnerBasis gb;
};

RingPresentation::RingPresentation(RingPtr ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)), relations_(std::move(relations)), cache_(std::make_shared<Cache>())
{
    for (const auto& r : relations_)
        if (!same_ring(r.ring(), ring_))
            throw InputError("ring.mismatch", "relation lives in a different ring");
}

const GroebnerBasis& RingPresentation::defining_gb() const
{
    std::call_once(cache_->once, [&] {
        cache_->gb = buchberger(relations_, MonomialOrder::degrevlex());
    });
    return cache_->gb;
}

struct FPModule::Cache {
    std::once_flag once;
    ModuleGB gb;
};

FPModule::FPModule(RingPresentation ring, size_t free_rank, std::vector<FreeModuleVector> relations)
    : ring_(std::move(ring)), free_rank_(free_rank), relations_(std::move(relations)),
      cache_(std::make_shared<Cache>())
{
    if (free_rank_ == 0)
        throw InputError("module.rank", "free rank must be positive");
    for (const auto& v : relations_) {
        if (v.rank() != free_rank_)
            throw InputError("module.rank_mismatch",
                             "relation vector length differs from free rank");
        for (const auto& c : v.components)
            if (!same_ring(c.ring(), ring_.ring()))
                throw InputError("ring.mismatch", "module relation in a different ring");
    }
}

std::vector<FreeModuleVector> FPModule::augmented_relations() const
{
    std::vector<FreeModuleVector> out = relations_;
    for (const auto& rel : ring_.relations()) {
        if (rel.is_zero())
            continue;
        for (size_t j = 0; j < free_rank_; ++j) {
            FreeModuleVector v = zero_vector(ring_.ring(), free_rank_);
            v.components[j] = rel;
            out.push_back(std::move(v));
        }
    }
    return out;
}

const ModuleGB& FPModule::relation_gb() const
{
    std::call_once(cache_->once, [&] {
        cache_->gb = module_buchberger(augmented_relations(), MonomialOrder::degrevlex(),
                                       free_rank_);
    });
    return cache_->gb;
}

bool canonical_less(const Polynomial& a, const Polynomial& b)
{
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (ta[i].mon != tb[i].mon)
            return lex_greater(tb[i].mon, ta[i].mon);
        if (ta[i].coeff != tb[i].coeff)
            return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
}

namespace {

// Subsets of {0..n-1} of a fixed size in lexicographic order.
bool next_combination(std::vector<size_t>& c, size_t n)
{
    size_t k = c.size();
    for (size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (size_t j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<Polynomial> sorted_unique(std::vector<Polynomial> v)
{
    std::vector<Polynomial> out;
    for (auto& p : v) {
        if (p.is_zero())
            continue;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

namespace {

DimensionReport dim_from_leading_terms(const GroebnerBasis& gb, size_t n);

}

DimensionReport krull_dim_ideal(const RingPresentation& ring)
{
    return dim_from_leading_terms(ring.defining_gb(), ring.nvars());
}

DimensionReport krull_dim_ideal(const RingPresentation& ring, const MonomialOrder& order)
{
    return dim_from_leading_terms(buchberger(ring.relations(), order), ring.nvars());
}

namespace {

DimensionReport dim_from_leading_terms(const GroebnerBasis& gb, size_t n)
{
    DimensionReport rep;
    rep.method = DimMethod::fitting;
    if (gb.is_trivial()) {
        rep.zero = true;
        return rep;
    }
    std::vector<Monomial> lead;
    for (const auto& g : gb.generators)
        lead.push_back(g.leading_term(gb.order).mon);

    // dim = max |S| over variable sets S touching no leading monomial
    for (size_t size = n + 1; size-- > 0;) {
        std::vector<size_t> comb(size);
        for (size_t i = 0; i < size; ++i)
            comb[i] = i;
        bool more = true;
        while (more) {
            std::vector<bool> allowed(n, false);
            for (size_t i : comb)
                allowed[i] = true;
            bool independent = true;
            for (const auto& m : lead) {
                if (m.supported_on(allowed)) {
                    independent = false;
                    break;
                }
            }
            if (independent) {
                rep.dimension = size;
                rep.witness_vars = comb;
                return rep;
            }
            more = size > 0 && next_combination(comb, n);
        }
        if (size == 0)
            break;
    }
    // a nontrivial ideal always leaves the empty set independent
    rep.dimension = 0;
    return rep;
}

} // namespace

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring)
{
    const size_t n = m.size();
    if (n == 0)
        return Polynomial::constant(ring, 1);
    if (n == 1)
        return m[0][0];
    Polynomial det = Polynomial::zero(ring);
    // Laplace expansion along the first row; fine at presentation sizes
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * determinant(minor, ring);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

} // namespace

std::vector<Polynomial> fitting_ideal_0(const FPModule& M)
{
    const size_t r = M.free_rank();
    const size_t m = M.relations().size();
    if (m < r)
        return {};
    std::vector<Polynomial> minors;
    std::vector<size_t> cols(r);
    for (size_t i = 0; i < r; ++i)
        cols[i] = i;
    bool more = true;
    while (more) {
        std::vector<std::vector<Polynomial>> mat(r, std::vector<Polynomial>());
        for (size_t row = 0; row < r; ++row)
            for (size_t ci : cols)
                mat[row].push_back(M.relations()[ci].components[row]);
        minors.push_back(determinant(mat, M.ring().ring()));
        more = next_combination(cols, m);
    }
    return sorted_unique(std::move(minors));
}

namespace {

// Generators of {a in R : a*u ∈ <gens>} via syzygies of (u, gens).
std::vector<Polynomial> colon_ideal(const FreeModuleVector& u,
                                    const std::vector<FreeModuleVector>& gens)
{
    std::vector<FreeModuleVector> vs;
    vs.push_back(u);
    for (const auto& g : gens)
        vs.push_back(g);
    std::vector<FreeModuleVector> syz = syzygy_basis(vs, MonomialOrder::degrevlex());
    std::vector<Polynomial> out;
    for (const auto& s : syz)
        out.push_back(s.components[0]);
    return sorted_unique(std::move(out));
}

} // namespace

std::vector<Polynomial> annihilator(const FPModule& M)
{
    const auto gens = M.augmented_relations();
    std::optional<std::vector<Polynomial>> acc;
    for (size_t j = 0; j < M.free_rank(); ++j) {
        std::vector<Polynomial> colon =
            colon_ideal(basis_vector(M.ring().ring(), M.free_rank(), j), gens);
        if (!acc)
            acc = std::move(colon);
        else
            *acc = ideal_intersection(*acc, colon, M.ring().ring());
        if (acc->empty())
            return {}; // zero ideal absorbs the intersection
    }
    std::vector<Polynomial> with_ring = *acc;
    for (const auto& rel : M.ring().relations())
        with_ring.push_back(rel);
    GroebnerBasis gb = buchberger(with_ring, MonomialOrder::degrevlex());
    return gb.generators;
}

bool is_zero_module(const FPModule& M)
{
    const ModuleGB& gb = M.relation_gb();
    for (size_t j = 0; j < M.free_rank(); ++j)
        if (!in_submodule(basis_vector(M.ring().ring(), M.free_rank(), j), gb))
            return false;
    return true;
}

DimensionReport module_dim(const FPModule& M, DimMethod method)
{
    DimensionReport rep;
    rep.method = method;
    if (is_zero_module(M)) {
        rep.zero = true;
        return rep;
    }
    std::vector<Polynomial> cutting =
        method == DimMethod::fitting ? fitting_ideal_0(M) : annihilator(M);
    std::vector<Polynomial> ideal = M.ring().relations();
    for (auto& p : cutting)
        ideal.push_back(std::move(p));
    RingPresentation quotient(M.ring().ring(), std::move(ideal));
    DimensionReport inner = krull_dim_ideal(quotient);
    // M != 0, so its support is nonempty and the cut ring cannot vanish
    assert(!inner.zero);
    inner.method = method;
    return inner;
}

NzdResult is_nonzerodivisor(const Polynomial& x, const FPModule& M)
{
    const size_t r = M.free_rank();
    std::vector<FreeModuleVector> vs;
    for (size_t j = 0; j < r; ++j) {
        FreeModuleVector v = zero_vector(M.ring().ring(), r);
        v.components[j] = x;
        vs.push_back(std::move(v));
    }
    const auto rel = M.augmented_relations();
    for (const auto& g : rel)
        vs.push_back(g);

    std::vector<FreeModuleVector> syz = syzygy_basis(vs, MonomialOrder::degrevlex());
    const ModuleGB& ngb = M.relation_gb();
    NzdResult res;
    res.nonzerodivisor = true;
    for (const auto& s : syz) {
        FreeModuleVector m;
        m.components.assign(s.components.begin(), s.components.begin() + static_cast<long>(r));
        FreeModuleVector nf = module_normal_form(m, ngb);
        if (!nf.is_zero()) {
            res.nonzerodivisor = false;
            res.witness = std::move(nf);
            return res;
        }
    }
    return res;
}

FPModule quotient_by_element(const FPModule& M, const Polynomial& x)
{
    std::vector<FreeModuleVector> rels = M.relations();
    for (size_t j = 0; j < M.free_rank(); ++j) {
        FreeModuleVector v = zero_vector(M.ring().ring(), M.free_rank());
        v.components[j] = x;
        rels.push_back(std::move(v));
    }
    return FPModule(M.ring(), M.free_rank(), std::move(rels));
}

RegSeqResult verify_regular_sequence(const std::vector<Polynomial>& xs, const FPModule& M)
{
    if (xs.empty())
        throw InputError("regseq.empty", "regular sequence candidates must be nonempty");
    RegSeqResult res;
    FPModule cur = M;
    for (size_t k = 0; k < xs.size(); ++k) {
        RegSeqCheck check;
        check.element = xs[k];
        NzdResult nzd = is_nonzerodivisor(xs[k], cur);
        check.nonzerodivisor = nzd.nonzerodivisor;
        if (!nzd.nonzerodivisor) {
            check.zerodivisor_witness = nzd.witness;
            check.proper = false;
            res.checks.push_back(std::move(check));
            res.ok = false;
            res.fails_at = k + 1;
            return res;
        }
        cur = quotient_by_element(cur, xs[k]);
        check.proper = !is_zero_module(cur);
        bool proper = check.proper;
        res.checks.push_back(std::move(check));
        if (!proper) {
            res.ok = false;
            res.fails_at = k + 1;
            return res;
        }
    }
    res.ok = true;
    return res;
}

namespace {

// Variables first, then normalized two- and three-variable integer
// combinations with coefficients in {-2..2}.
std::vector<Polynomial> regseq_candidates(const RingPtr& ring)
{
    std::vector<Polynomial> cands;
    const size_t n = ring->nvars();
    for (size_t i = 0; i < n; ++i)
        cands.push_back(Polynomial::variable(ring, i));

    static const int pair_coeffs[][2] = {{1, 1}, {1, -1}, {1, 2}, {1, -2}, {2, 1}, {2, -1}};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (const auto& c : pair_coeffs) {
                Polynomial p = Polynomial::variable(ring, i).scaled(Rational(c[0])) +
                               Polynomial::variable(ring, j).scaled(Rational(c[1]));
                cands.push_back(std::move(p));
            }

    static const int triple_coeffs[][3] = {{1, 1, 1},  {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                                           {1, 1, 2},  {1, 2, 1},  {2, 1, 1},  {1, 1, -2},
                                           {1, -2, 1}, {2, -1, -1}};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                for (const auto& c : triple_coeffs) {
                    Polynomial p = Polynomial::variable(ring, i).scaled(Rational(c[0])) +
                                   Polynomial::variable(ring, j).scaled(Rational(c[1])) +
                                   Polynomial::variable(ring, k).scaled(Rational(c[2]));
                    cands.push_back(std::move(p));
                }
    return cands;
}

bool regseq_dfs(const FPModule& cur, const std::vector<Polynomial>& cands, size_t target,
                std::vector<Polynomial>& prefix, size_t& budget)
{
    if (prefix.size() == target)
        return true;
    for (const auto& cand : cands) {
        if (budget == 0)
            return false;
        --budget;
        NzdResult nzd = is_nonzerodivisor(cand, cur);
        if (!nzd.nonzerodivisor)
            continue;
        FPModule next = quotient_by_element(cur, cand);
        if (is_zero_module(next))
            continue;
        prefix.push_back(cand);
        if (regseq_dfs(next, cands, target, prefix, budget))
            return true;
        prefix.pop_back();
    }
    return false;
}

} // namespace

RegSeqSearchResult find_regular_sequence(const FPModule& M, size_t target, size_t budget)
{
    if (target == 0)
        throw InputError("regseq.target", "target length must be positive");
    DimensionReport dim = module_dim(M);
    if (dim.zero || target > dim.dimension)
        throw InputError("regseq.target",
                         "target exceeds the module dimension; no sequence can exist");

    RegSeqSearchResult out;
    std::vector<Polynomial> cands = regseq_candidates(M.ring().ring());
    std::vector<Polynomial> prefix;
    size_t remaining = budget;
    bool found = regseq_dfs(M, cands, target, prefix, remaining);
    out.evaluations = budget - remaining;
    if (found) {
        RegSeqResult cert = verify_regular_sequence(prefix, M);
        assert(cert.ok);
        out.certificate = std::move(cert);
    }
    return out;
}

namespace {

// Basis management for the Koszul complex: slot (T, j) where T is a k-subset
// of the sequence indices and j a free-module coordinate of M.
std::vector<std::vector<size_t>> subsets_of_size(size_t s, size_t k)
{
    std::vector<std::vector<size_t>> out;
    if (k > s)
        return out;
    std::vector<size_t> comb(k);
    for (size_t i = 0; i < k; ++i)
        comb[i] = i;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    bool more = true;
    while (more) {
        out.push_back(comb);
        more = next_combination(comb, s);
    }
    return out;
}

size_t index_of_subset(const std::vector<std::vector<size_t>>& table,
                       const std::vector<size_t>& s)
{
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] == s)
            return i;
    assert(false && "subset not found");
    return 0;
}

} // namespace

size_t koszul_depth(const std::vector<Polynomial>& xs, const FPModule& M)
{
    if (xs.empty())
        throw InputError("koszul.empty", "need at least one sequence element");
    const size_t s = xs.size();
    const size_t r = M.free_rank();
    const RingPtr& ring = M.ring().ring();

    // differential d_k : Λ^k ⊗ M -> Λ^{k-1} ⊗ M on generators, as columns
    auto differential_columns = [&](size_t k) {
        std::vector<FreeModuleVector> cols;
        auto src = subsets_of_size(s, k);
        auto dst = subsets_of_size(s, k - 1);
        for (const auto& T : src) {
            for (size_t j = 0; j < r; ++j) {
                FreeModuleVector col = zero_vector(ring, dst.size() * r);
                for (size_t pos = 0; pos < T.size(); ++pos) {
                    std::vector<size_t> rest = T;
                    rest.erase(rest.begin() + static_cast<long>(pos));
                    size_t slot = index_of_subset(dst, rest) * r + j;
                    Polynomial entry = xs[T[pos]];
                    if (pos % 2 == 1)
                        entry = -entry;
                    col.components[slot] = col.components[slot] + entry;
                }
                cols.push_back(std::move(col));
            }
        }
        return cols;
    };

    auto slot_relations = [&](size_t k) {
        std::vector<FreeModuleVector> rels;
        size_t slots = subsets_of_size(s, k).size();
        if (slots == 0)
            return rels;
        // module relations of M (and the ring ideal) in every Λ-slot
        std::vector<FreeModuleVector> base = M.augmented_relations();
        for (size_t slot = 0; slot < slots; ++slot)
            for (const auto& rel : base) {
                FreeModuleVector v = zero_vector(ring, slots * r);
                for (size_t j = 0; j < r; ++j)
                    v.components[slot * r + j] = rel.components[j];
                rels.push_back(std::move(v));
            }
        return rels;
    };

    for (size_t i = s + 1; i-- > 0;) {
        const size_t rank_i = subsets_of_size(s, i).size() * r;
        // boundary targets B_i = im d_{i+1} + relations
        std::vector<FreeModuleVector> boundary =
            i < s ? differential_columns(i + 1) : std::vector<FreeModuleVector>{};
        for (auto& rel : slot_relations(i))
            boundary.push_back(std::move(rel));

        // cycle generators P_i = preimage of relations under d_i
        std::vector<FreeModuleVector> cycles;
        if (i == 0) {
            for (size_t j = 0; j < rank_i; ++j)
                cycles.push_back(basis_vector(ring, rank_i, j));
        } else {
            std::vector<FreeModuleVector> probe = differential_columns(i);
            const size_t a = probe.size();
            for (auto& rel : slot_relations(i - 1))
                probe.push_back(std::move(rel));
            std::vector<FreeModuleVector> syz = syzygy_basis(probe, MonomialOrder::degrevlex());
            for (const auto& z : syz) {
                FreeModuleVector v;
                v.components.assign(z.components.begin(),
                                    z.components.begin() + static_cast<long>(a));
                if (!v.is_zero())
                    cycles.push_back(std::move(v));
            }
        }

        ModuleGB bgb = module_buchberger(boundary, MonomialOrder::degrevlex(), rank_i);
        bool homology_zero = true;
        for (const auto& z : cycles) {
            if (!in_submodule(z, bgb)) {
                homology_zero = false;
                break;
            }
        }
        if (!homology_zero)
            return s - i;
    }
    return s; // all homology vanishes: (xs)M = M
}

} // namespace rdim
