#include "rdim/fppoly.hpp"

#include <algorithm>
#include <set>

#include "rdim/errors.hpp"

namespace rdim {

FpContext::FpContext(uint32_t prime) : p(prime)
{
    if (p < 2 || p >= (uint32_t{1} << 31))
        throw InputError("fp.prime", "modulus must satisfy 2 <= p < 2^31");
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw InputError("fp.prime", "modulus must be prime");
}

uint32_t FpContext::inv(uint32_t a) const
{
    a %= p;
    if (a == 0)
        throw InputError("fp.division", "division by zero mod p");
    // extended Euclid
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0)
        t += p;
    return static_cast<uint32_t>(t);
}

uint32_t FpContext::reduce(const Rational& q) const
{
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(p);
    mpz_class n = num % pz;
    if (n < 0)
        n += pz;
    mpz_class d = den % pz;
    if (d == 0)
        throw InputError("fp.denominator", "denominator vanishes mod p");
    uint32_t ni = static_cast<uint32_t>(n.get_ui());
    uint32_t di = static_cast<uint32_t>(mpz_class(d).get_ui());
    return mul(ni, inv(di));
}

FpPolynomial fp_from_rational(const Polynomial& f, const FpContext& ctx)
{
    FpPolynomial out;
    for (const auto& t : f.terms()) {
        uint32_t c = ctx.reduce(t.coeff);
        if (c != 0)
            out.terms.push_back({t.mon, c});
    }
    return out;
}

namespace {

size_t fp_leading_index(const FpPolynomial& f, const MonomialOrder& order)
{
    size_t best = 0;
    for (size_t i = 1; i < f.terms.size(); ++i)
        if (order.greater(f.terms[i].mon, f.terms[best].mon))
            best = i;
    return best;
}

FpPolynomial fp_sub_scaled(const FpPolynomial& a, const FpPolynomial& b, const Monomial& shift,
                           uint32_t scale, const FpContext& ctx)
{
    // a - scale * shift * b, merged on the canonical order
    FpPolynomial out;
    size_t i = 0, j = 0;
    auto b_mon = [&](size_t idx) { return b.terms[idx].mon * shift; };
    while (i < a.terms.size() || j < b.terms.size()) {
        if (i == a.terms.size()) {
            uint32_t c = ctx.sub(0, ctx.mul(scale, b.terms[j].coeff));
            if (c)
                out.terms.push_back({b_mon(j), c});
            ++j;
        } else if (j == b.terms.size()) {
            out.terms.push_back(a.terms[i]);
            ++i;
        } else {
            Monomial bm = b_mon(j);
            if (a.terms[i].mon == bm) {
                uint32_t c = ctx.sub(a.terms[i].coeff, ctx.mul(scale, b.terms[j].coeff));
                if (c)
                    out.terms.push_back({a.terms[i].mon, c});
                ++i, ++j;
            } else if (lex_greater(a.terms[i].mon, bm)) {
                out.terms.push_back(a.terms[i]);
                ++i;
            } else {
                uint32_t c = ctx.sub(0, ctx.mul(scale, b.terms[j].coeff));
                if (c)
                    out.terms.push_back({bm, c});
                ++j;
            }
        }
    }
    return out;
}

} // namespace

FpPolynomial fp_normal_form(const FpPolynomial& f, const std::vector<FpPolynomial>& basis,
                            const MonomialOrder& order, const FpContext& ctx)
{
    FpPolynomial h = f;
    FpPolynomial remainder;
    std::vector<size_t> lead;
    for (const auto& g : basis)
        lead.push_back(fp_leading_index(g, order));
    while (!h.terms.empty()) {
        size_t li = fp_leading_index(h, order);
        const FpTerm& t = h.terms[li];
        bool divided = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            const FpTerm& g_lt = basis[k].terms[lead[k]];
            if (g_lt.mon.divides(t.mon)) {
                Monomial q = g_lt.mon.divide_into(t.mon);
                uint32_t c = ctx.mul(t.coeff, ctx.inv(g_lt.coeff));
                h = fp_sub_scaled(h, basis[k], q, c, ctx);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder.terms.push_back(t);
            h.terms.erase(h.terms.begin() + static_cast<long>(li));
        }
    }
    std::sort(remainder.terms.begin(), remainder.terms.end(),
              [](const FpTerm& a, const FpTerm& b) { return lex_greater(a.mon, b.mon); });
    return remainder;
}

std::vector<FpPolynomial> fp_buchberger(std::vector<FpPolynomial> generators,
                                        const MonomialOrder& order, const FpContext& ctx)
{
    std::vector<FpPolynomial> basis;
    for (auto& g : generators)
        if (!g.terms.empty())
            basis.push_back(std::move(g));

    std::vector<size_t> lead;
    for (const auto& g : basis)
        lead.push_back(fp_leading_index(g, order));

    struct Pair {
        size_t i, j;
        Monomial lcm;
        uint32_t degree;
    };
    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = basis[i].terms[lead[i]].mon.lcm(basis[j].terms[lead[j]].mon);
            queue.push_back({i, j, l, l.total_degree()});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j)
        push_pairs_for(j);

    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        if (a.lcm != b.lcm)
            return lex_greater(b.lcm, a.lcm);
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        handled.insert({p.i, p.j});
        const FpTerm& fi = basis[p.i].terms[lead[p.i]];
        const FpTerm& fj = basis[p.j].terms[lead[p.j]];
        if (fi.mon.coprime(fj.mon))
            continue;
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j || !basis[k].terms[lead[k]].mon.divides(p.lcm))
                continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(k, p.j);
            if (handled.count({key1.first, key1.second}) &&
                handled.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip)
            continue;

        // S-polynomial: (lcm/LT_i) f_i / lc_i - (lcm/LT_j) f_j / lc_j
        FpPolynomial si, zero;
        si = fp_sub_scaled(zero, basis[p.i], fi.mon.divide_into(p.lcm),
                           ctx.sub(0, ctx.inv(fi.coeff)), ctx);
        FpPolynomial s = fp_sub_scaled(si, basis[p.j], fj.mon.divide_into(p.lcm),
                                       ctx.inv(fj.coeff), ctx);
        FpPolynomial r = fp_normal_form(s, basis, order, ctx);
        if (!r.terms.empty()) {
            // make monic
            uint32_t inv = ctx.inv(r.terms[fp_leading_index(r, order)].coeff);
            for (auto& t : r.terms)
                t.coeff = ctx.mul(t.coeff, inv);
            basis.push_back(std::move(r));
            lead.push_back(fp_leading_index(basis.back(), order));
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize and inter-reduce
    std::vector<bool> drop(basis.size(), false);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (drop[i])
            continue;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || drop[j])
                continue;
            const Monomial& mi = basis[i].terms[lead[i]].mon;
            const Monomial& mj = basis[j].terms[lead[j]].mon;
            if (mj.divides(mi) && (mi != mj || j < i)) {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<FpPolynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!drop[i]) {
            uint32_t inv = ctx.inv(basis[i].terms[lead[i]].coeff);
            for (auto& t : basis[i].terms)
                t.coeff = ctx.mul(t.coeff, inv);
            minimal.push_back(basis[i]);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<FpPolynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            if (others.empty())
                continue;
            FpPolynomial r = fp_normal_form(minimal[i], others, order, ctx);
            bool same = r.terms.size() == minimal[i].terms.size();
            if (same)
                for (size_t t = 0; t < r.terms.size(); ++t)
                    if (!(r.terms[t].mon == minimal[i].terms[t].mon) ||
                        r.terms[t].coeff != minimal[i].terms[t].coeff)
                        same = false;
            if (!same) {
                changed = true;
                if (r.terms.empty()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    uint32_t inv = ctx.inv(r.terms[fp_leading_index(r, order)].coeff);
                    for (auto& t : r.terms)
                        t.coeff = ctx.mul(t.coeff, inv);
                    minimal[i] = std::move(r);
                }
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const FpPolynomial& a, const FpPolynomial& b) {
        return order.less(a.terms[fp_leading_index(a, order)].mon,
                          b.terms[fp_leading_index(b, order)].mon);
    });
    return minimal;
}

DimensionReport krull_dim_ideal_modp(const RingPresentation& ring, uint32_t p)
{
    FpContext ctx(p);
    std::vector<FpPolynomial> gens;
    for (const auto& r : ring.relations())
        gens.push_back(fp_from_rational(r, ctx));
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<FpPolynomial> gb = fp_buchberger(std::move(gens), order, ctx);

    DimensionReport rep;
    rep.method = DimMethod::fitting;
    for (const auto& g : gb)
        if (g.terms.size() == 1 && g.terms[0].mon.is_one()) {
            rep.zero = true;
            return rep;
        }

    const size_t n = ring.nvars();
    std::vector<Monomial> lead;
    for (const auto& g : gb)
        lead.push_back(g.terms[fp_leading_index(g, order)].mon);
    for (size_t size = n + 1; size-- > 0;) {
        std::vector<size_t> comb(size);
        for (size_t i = 0; i < size; ++i)
            comb[i] = i;
        while (true) {
            std::vector<bool> allowed(n, false);
            for (size_t i : comb)
                allowed[i] = true;
            bool independent = true;
            for (const auto& m : lead)
                if (m.supported_on(allowed)) {
                    independent = false;
                    break;
                }
            if (independent) {
                rep.dimension = size;
                rep.witness_vars = comb;
                return rep;
            }
            // next combination
            size_t k = comb.size();
            bool more = false;
            for (size_t i = k; i-- > 0;) {
                if (comb[i] < n - k + i) {
                    ++comb[i];
                    for (size_t j = i + 1; j < k; ++j)
                        comb[j] = comb[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more)
                break;
        }
        if (size == 0)
            break;
    }
    rep.dimension = 0;
    return rep;
}

} // namespace rdim
