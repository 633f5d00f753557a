#include "rdim/module_groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "rdim/errors.hpp"

namespace rdim {

bool FreeModuleVector::is_zero() const
{
    for (const auto& c : components)
        if (!c.is_zero())
            return false;
    return true;
}

FreeModuleVector FreeModuleVector::operator+(const FreeModuleVector& o) const
{
    assert(rank() == o.rank());
    FreeModuleVector out;
    out.components.reserve(rank());
    for (size_t i = 0; i < rank(); ++i)
        out.components.push_back(components[i] + o.components[i]);
    return out;
}

FreeModuleVector FreeModuleVector::operator-(const FreeModuleVector& o) const
{
    assert(rank() == o.rank());
    FreeModuleVector out;
    out.components.reserve(rank());
    for (size_t i = 0; i < rank(); ++i)
        out.components.push_back(components[i] - o.components[i]);
    return out;
}

FreeModuleVector FreeModuleVector::times_monomial(const Monomial& m, const Rational& c) const
{
    FreeModuleVector out;
    out.components.reserve(rank());
    for (const auto& p : components)
        out.components.push_back(p.times_monomial(m, c));
    return out;
}

FreeModuleVector FreeModuleVector::scaled_by(const Polynomial& p) const
{
    FreeModuleVector out;
    out.components.reserve(rank());
    for (const auto& q : components)
        out.components.push_back(q * p);
    return out;
}

FreeModuleVector zero_vector(const RingPtr& ring, size_t rank)
{
    FreeModuleVector v;
    v.components.assign(rank, Polynomial::zero(ring));
    return v;
}

FreeModuleVector basis_vector(const RingPtr& ring, size_t rank, size_t position)
{
    FreeModuleVector v = zero_vector(ring, rank);
    v.components[position] = Polynomial::constant(ring, 1);
    return v;
}

namespace {

struct ModLead {
    size_t position;
    Monomial mon;
    Rational coeff;
};

// Position-over-term leading term: lowest nonzero position wins, then the
// base order on that component.
ModLead leading(const FreeModuleVector& v, const MonomialOrder& order)
{
    for (size_t p = 0; p < v.rank(); ++p) {
        if (!v.components[p].is_zero()) {
            const Term& t = v.components[p].leading_term(order);
            return {p, t.mon, t.coeff};
        }
    }
    assert(false && "leading of zero vector");
    return {0, Monomial(), Rational(0)};
}

FreeModuleVector reduce_full(const FreeModuleVector& v,
                             const std::vector<FreeModuleVector>& basis,
                             const std::vector<ModLead>& leads, const MonomialOrder& order)
{
    FreeModuleVector h = v;
    FreeModuleVector rem = zero_vector(v.components.empty() ? nullptr : v.components[0].ring(),
                                       v.rank());
    while (!h.is_zero()) {
        ModLead lt = leading(h, order);
        bool divided = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (leads[k].position != lt.position || !leads[k].mon.divides(lt.mon))
                continue;
            Monomial q = leads[k].mon.divide_into(lt.mon);
            h = h - basis[k].times_monomial(q, lt.coeff / leads[k].coeff);
            divided = true;
            break;
        }
        if (!divided) {
            Polynomial piece = Polynomial::from_terms(h.components[lt.position].ring(),
                                                      {{lt.mon, lt.coeff}});
            rem.components[lt.position] = rem.components[lt.position] + piece;
            h.components[lt.position] = h.components[lt.position] - piece;
        }
    }
    return rem;
}

struct ModPair {
    size_t i, j;
    Monomial lcm;
    uint32_t degree;
    size_t position;
};

bool mod_pair_less(const ModPair& a, const ModPair& b)
{
    if (a.degree != b.degree)
        return a.degree < b.degree;
    if (a.position != b.position)
        return a.position < b.position;
    if (a.lcm != b.lcm)
        return lex_greater(b.lcm, a.lcm);
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

} // namespace

ModuleGB module_buchberger(std::vector<FreeModuleVector> generators, const MonomialOrder& order,
                           size_t rank)
{
    std::vector<FreeModuleVector> basis;
    for (auto& g : generators) {
        if (g.is_zero())
            continue;
        if (g.rank() != rank)
            throw InputError("module.rank_mismatch", "free module vectors of unequal rank");
        basis.push_back(std::move(g));
    }

    std::vector<ModLead> leads;
    for (const auto& g : basis)
        leads.push_back(leading(g, order));

    std::vector<ModPair> queue;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].position != leads[j].position)
                continue;
            Monomial l = leads[i].mon.lcm(leads[j].mon);
            queue.push_back({i, j, l, l.total_degree(), leads[i].position});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j)
        push_pairs_for(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), mod_pair_less);
        ModPair p = *it;
        queue.erase(it);
        handled.insert({p.i, p.j});

        // chain criterion (valid for modules at equal leading position)
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j || leads[k].position != p.position)
                continue;
            if (!leads[k].mon.divides(p.lcm))
                continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(k, p.j);
            if (handled.count({key1.first, key1.second}) &&
                handled.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip)
            continue;

        Monomial qi = leads[p.i].mon.divide_into(p.lcm);
        Monomial qj = leads[p.j].mon.divide_into(p.lcm);
        FreeModuleVector s = basis[p.i].times_monomial(qi, Rational(1) / leads[p.i].coeff) -
                             basis[p.j].times_monomial(qj, Rational(1) / leads[p.j].coeff);
        FreeModuleVector r = reduce_full(s, basis, leads, order);
        if (!r.is_zero()) {
            ModLead lt = leading(r, order);
            basis.push_back(r.times_monomial(Monomial::one(lt.mon.nvars()), Rational(1) / lt.coeff));
            leads.push_back(leading(basis.back(), order));
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize
    std::vector<bool> drop(basis.size(), false);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (drop[i])
            continue;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || drop[j] || leads[j].position != leads[i].position)
                continue;
            if (leads[j].mon.divides(leads[i].mon) &&
                (leads[i].mon != leads[j].mon || j < i)) {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<FreeModuleVector> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!drop[i])
            minimal.push_back(basis[i]);

    // inter-reduce
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<FreeModuleVector> others;
            std::vector<ModLead> other_leads;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) {
                    others.push_back(minimal[j]);
                    other_leads.push_back(leading(minimal[j], order));
                }
            if (others.empty())
                continue;
            FreeModuleVector r = reduce_full(minimal[i], others, other_leads, order);
            if (!(r == minimal[i])) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    ModLead lt = leading(r, order);
                    minimal[i] =
                        r.times_monomial(Monomial::one(lt.mon.nvars()), Rational(1) / lt.coeff);
                }
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(),
              [&](const FreeModuleVector& a, const FreeModuleVector& b) {
                  ModLead la = leading(a, order), lb = leading(b, order);
                  if (la.position != lb.position)
                      return la.position < lb.position;
                  return order.less(la.mon, lb.mon);
              });

    ModuleGB out;
    out.generators = std::move(minimal);
    out.order = order;
    out.rank = rank;
    return out;
}

FreeModuleVector module_normal_form(const FreeModuleVector& v, const ModuleGB& gb)
{
    if (v.rank() != gb.rank)
        throw InputError("module.rank_mismatch", "vector rank differs from basis rank");
    if (v.is_zero() || gb.generators.empty())
        return v;
    std::vector<ModLead> leads;
    for (const auto& g : gb.generators)
        leads.push_back(leading(g, gb.order));
    return reduce_full(v, gb.generators, leads, gb.order);
}

bool in_submodule(const FreeModuleVector& v, const ModuleGB& gb)
{
    return module_normal_form(v, gb).is_zero();
}

std::vector<FreeModuleVector> syzygy_basis(const std::vector<FreeModuleVector>& vectors,
                                           const MonomialOrder& order)
{
    if (vectors.empty())
        return {};
    const size_t r = vectors.front().rank();
    RingPtr ring = vectors.front().components.front().ring();
    const size_t m = vectors.size();
    for (const auto& v : vectors)
        if (v.rank() != r)
            throw InputError("module.rank_mismatch", "syzygy inputs of unequal rank");

    // graph vectors v_i ⊕ e_i in R^{r+m}; positions 0..r-1 dominate, so the
    // elements with vanishing first block form a basis of the kernel
    std::vector<FreeModuleVector> graph;
    for (size_t i = 0; i < m; ++i) {
        FreeModuleVector w = zero_vector(ring, r + m);
        for (size_t p = 0; p < r; ++p)
            w.components[p] = vectors[i].components[p];
        w.components[r + i] = Polynomial::constant(ring, 1);
        graph.push_back(std::move(w));
    }
    ModuleGB gb = module_buchberger(std::move(graph), order, r + m);

    std::vector<FreeModuleVector> out;
    for (const auto& g : gb.generators) {
        bool first_block_zero = true;
        for (size_t p = 0; p < r && first_block_zero; ++p)
            if (!g.components[p].is_zero())
                first_block_zero = false;
        if (!first_block_zero)
            continue;
        FreeModuleVector s;
        s.components.assign(g.components.begin() + static_cast<long>(r), g.components.end());
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace rdim
