#include "rdim/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "rdim/errors.hpp"

namespace rdim {

bool GroebnerBasis::is_trivial() const
{
    for (const auto& g : generators)
        if (!g.is_zero() && g.is_constant())
            return true;
    return false;
}

namespace {

// One reduction pass: cancel the order-maximal reducible term of h against
// basis[k]. Returns false when no term of h is reducible.
bool reduce_step(Polynomial& h, const std::vector<Polynomial>& basis,
                 const std::vector<size_t>& lead, const MonomialOrder& order,
                 Polynomial& remainder)
{
    while (!h.is_zero()) {
        size_t li = h.leading_index(order);
        const Term& t = h.terms()[li];
        bool divided = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            const Term& g_lt = basis[k].terms()[lead[k]];
            if (g_lt.mon.divides(t.mon)) {
                Monomial q = g_lt.mon.divide_into(t.mon);
                Rational c = t.coeff / g_lt.coeff;
                h = h - basis[k].times_monomial(q, c);
                divided = true;
                break;
            }
        }
        if (!divided) {
            // move the leading term to the remainder and keep reducing the tail
            remainder = remainder + Polynomial::from_terms(h.ring(), {t});
            Polynomial rest = h - Polynomial::from_terms(h.ring(), {t});
            h = std::move(rest);
        }
    }
    return true;
}

Polynomial full_reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<size_t>& lead, const MonomialOrder& order)
{
    Polynomial h = f;
    Polynomial remainder = Polynomial::zero(f.ring());
    reduce_step(h, basis, lead, order, remainder);
    return remainder;
}

std::vector<size_t> leading_indices(const std::vector<Polynomial>& basis,
                                    const MonomialOrder& order)
{
    std::vector<size_t> lead(basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        lead[i] = basis[i].leading_index(order);
    return lead;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    uint32_t degree;
};

bool pair_less(const Pair& a, const Pair& b)
{
    if (a.degree != b.degree)
        return a.degree < b.degree;
    if (a.lcm != b.lcm)
        return lex_greater(b.lcm, a.lcm);
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order)
{
    std::vector<Polynomial> nonzero;
    for (const auto& g : basis) {
        if (g.is_zero())
            continue;
        require_same_ring(f, g, "normal_form");
        nonzero.push_back(g);
    }
    if (f.is_zero() || nonzero.empty())
        return f;
    return full_reduce(f, nonzero, leading_indices(nonzero, order), order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis)
{
    return normal_form(f, basis.generators, basis.order);
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& basis)
{
    return normal_form(f, basis).is_zero();
}

GroebnerBasis buchberger(std::vector<Polynomial> generators, const MonomialOrder& order)
{
    std::vector<Polynomial> basis;
    for (auto& g : generators) {
        if (g.is_zero())
            continue;
        if (!basis.empty())
            require_same_ring(basis.front(), g, "buchberger");
        basis.push_back(std::move(g));
    }

    std::vector<size_t> lead = leading_indices(basis, order);
    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> handled;

    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            const Monomial& a = basis[i].terms()[lead[i]].mon;
            const Monomial& b = basis[j].terms()[lead[j]].mon;
            Monomial l = a.lcm(b);
            queue.push_back({i, j, l, l.total_degree()});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j)
        push_pairs_for(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        handled.insert({p.i, p.j});

        const Term& fi = basis[p.i].terms()[lead[p.i]];
        const Term& fj = basis[p.j].terms()[lead[p.j]];

        // Buchberger's first criterion: coprime leading monomials
        if (fi.mon.coprime(fj.mon))
            continue;
        // chain criterion: a third leading term divides the lcm and both
        // side pairs were already treated
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j)
                continue;
            if (!basis[k].terms()[lead[k]].mon.divides(p.lcm))
                continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(k, p.j);
            if (handled.count({key1.first, key1.second}) &&
                handled.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip)
            continue;

        Monomial qi = fi.mon.divide_into(p.lcm);
        Monomial qj = fj.mon.divide_into(p.lcm);
        Polynomial s = basis[p.i].times_monomial(qi, Rational(1) / fi.coeff) -
                       basis[p.j].times_monomial(qj, Rational(1) / fj.coeff);
        Polynomial r = full_reduce(s, basis, lead, order);
        if (!r.is_zero()) {
            basis.push_back(r.monic(order));
            lead.push_back(basis.back().leading_index(order));
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop generators whose leading term another one divides
    std::vector<bool> drop(basis.size(), false);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (drop[i])
            continue;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || drop[j])
                continue;
            const Monomial& mi = basis[i].terms()[lead[i]].mon;
            const Monomial& mj = basis[j].terms()[lead[j]].mon;
            if (mj.divides(mi) && (mi != mj || j < i)) {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!drop[i])
            minimal.push_back(basis[i].monic(order));

    // inter-reduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            if (others.empty())
                continue;
            Polynomial r = full_reduce(minimal[i], others, leading_indices(others, order), order);
            if (r != minimal[i]) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    minimal[i] = r.monic(order);
                }
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).mon, b.leading_term(order).mon);
    });

    GroebnerBasis out;
    out.generators = std::move(minimal);
    out.order = order;
    out.reduced = true;
    return out;
}

std::vector<Polynomial> elimination_ideal(const std::vector<Polynomial>& generators,
                                          const std::vector<bool>& keep)
{
    if (generators.empty())
        return {};
    RingPtr ring = generators.front().ring();
    if (keep.size() != ring->nvars())
        throw InputError("elim.keep_size", "keep mask size must match variable count");

    // permute eliminated variables to the front, run a block order, project back
    std::vector<size_t> perm; // new index -> old index
    for (size_t i = 0; i < keep.size(); ++i)
        if (!keep[i])
            perm.push_back(i);
    size_t block = perm.size();
    for (size_t i = 0; i < keep.size(); ++i)
        if (keep[i])
            perm.push_back(i);

    std::vector<std::string> names;
    for (size_t idx : perm)
        names.push_back(ring->variables[idx]);
    RingPtr permuted = make_ring(names);

    auto remap = [](const Polynomial& p, const RingPtr& target, const std::vector<size_t>& to_old) {
        // to_old: target index -> source index
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<uint32_t> e(to_old.size());
            for (size_t i = 0; i < to_old.size(); ++i)
                e[i] = t.mon.exponent(to_old[i]);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(target, std::move(ts));
    };

    std::vector<Polynomial> moved;
    for (const auto& g : generators)
        moved.push_back(remap(g, permuted, perm));

    GroebnerBasis gb = buchberger(moved, MonomialOrder::elimination(block));

    std::vector<size_t> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i)
        inv[perm[i]] = i;

    std::vector<Polynomial> out;
    for (const auto& g : gb.generators) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (size_t i = 0; i < block && pure; ++i)
                if (t.mon.exponent(i) != 0)
                    pure = false;
        if (pure)
            out.push_back(remap(g, ring, inv));
    }
    return out;
}

std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b,
                                           const RingPtr& ring)
{
    // I ∩ J = (t·I + (1-t)·J) ∩ k[x]
    std::vector<std::string> names = ring->variables;
    std::string tname = "t_";
    while (std::find(names.begin(), names.end(), tname) != names.end())
        tname += "_";
    names.insert(names.begin(), tname);
    RingPtr ext = make_ring(names);

    auto lift = [&](const Polynomial& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<uint32_t> e(ext->nvars(), 0);
            for (size_t i = 0; i < ring->nvars(); ++i)
                e[i + 1] = t.mon.exponent(i);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(ext, std::move(ts));
    };

    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a)
        gens.push_back(t * lift(f));
    for (const auto& g : b)
        gens.push_back(one_minus_t * lift(g));

    std::vector<bool> keep(ext->nvars(), true);
    keep[0] = false;
    std::vector<Polynomial> elim = elimination_ideal(gens, keep);

    std::vector<Polynomial> out;
    for (const auto& g : elim) {
        std::vector<Term> ts;
        for (const auto& term : g.terms()) {
            std::vector<uint32_t> e(ring->nvars());
            for (size_t i = 0; i < ring->nvars(); ++i)
                e[i] = term.mon.exponent(i + 1);
            ts.push_back({Monomial(std::move(e)), term.coeff});
        }
        out.push_back(Polynomial::from_terms(ring, std::move(ts)));
    }
    return out;
}

bool in_radical(const Polynomial& f, const std::vector<Polynomial>& ideal, const RingPtr& ring)
{
    if (f.is_zero())
        return true;
    std::vector<std::string> names = ring->variables;
    std::string tname = "t_rab";
    while (std::find(names.begin(), names.end(), tname) != names.end())
        tname += "_";
    names.push_back(tname);
    RingPtr ext = make_ring(names);

    auto lift = [&](const Polynomial& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<uint32_t> e(ext->nvars(), 0);
            for (size_t i = 0; i < ring->nvars(); ++i)
                e[i] = t.mon.exponent(i);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(ext, std::move(ts));
    };

    std::vector<Polynomial> gens;
    for (const auto& g : ideal)
        gens.push_back(lift(g));
    Polynomial t = Polynomial::variable(ext, ext->nvars() - 1);
    gens.push_back(Polynomial::constant(ext, 1) - t * lift(f));
    GroebnerBasis gb = buchberger(gens, MonomialOrder::degrevlex());
    return gb.is_trivial();
}

} // namespace rdim
