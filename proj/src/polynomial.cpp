#include "rdim/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "rdim/errors.hpp"

namespace rdim {

std::optional<size_t> Ring::index_of(const std::string& name) const
{
    for (size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name)
            return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables)
{
    for (size_t i = 0; i < variables.size(); ++i)
        for (size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw InputError("ring.duplicate_variable",
                                 "duplicate ring variable '" + variables[i] + "'");
    auto r = std::make_shared<Ring>();
    r->variables = std::move(variables);
    return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return a->variables == b->variables;
}

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* where)
{
    if (!same_ring(a.ring(), b.ring()))
        throw InputError("ring.mismatch", std::string(where) + ": operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c)
{
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.push_back({Monomial::one(p.nvars()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t index, uint32_t power)
{
    if (!ring || index >= ring->nvars())
        throw InputError("ring.bad_variable", "variable index out of range");
    Polynomial p(ring);
    if (power == 0)
        return constant(ring, 1);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index, power), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return lex_greater(a.mon, b.mon); });
    Polynomial p(std::move(ring));
    for (auto& t : terms) {
        if (t.coeff == 0)
            continue;
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0)
                p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

uint32_t Polynomial::total_degree() const
{
    uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mon.total_degree());
    return d;
}

Polynomial merge_linear(const Polynomial& a, const Polynomial& b, const Rational& ca,
                        const Rational& cb)
{
    require_same_ring(a, b, "merge");
    Polynomial out(a.ring_ ? a.ring_ : b.ring_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        bool take_a;
        if (i == a.terms_.size())
            take_a = false;
        else if (j == b.terms_.size())
            take_a = true;
        else if (a.terms_[i].mon == b.terms_[j].mon) {
            Rational c = ca * a.terms_[i].coeff + cb * b.terms_[j].coeff;
            if (c != 0)
                out.terms_.push_back({a.terms_[i].mon, std::move(c)});
            ++i, ++j;
            continue;
        } else
            take_a = lex_greater(a.terms_[i].mon, b.terms_[j].mon);
        if (take_a) {
            Rational c = ca * a.terms_[i].coeff;
            if (c != 0)
                out.terms_.push_back({a.terms_[i].mon, std::move(c)});
            ++i;
        } else {
            Rational c = cb * b.terms_[j].coeff;
            if (c != 0)
                out.terms_.push_back({b.terms_[j].mon, std::move(c)});
            ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    return merge_linear(*this, o, Rational(1), Rational(1));
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return merge_linear(*this, o, Rational(1), Rational(-1));
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial out(ring_);
    if (c == 0)
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        t.coeff *= c;
    return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const
{
    Polynomial out(ring_);
    if (c == 0)
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mon * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the canonical sort
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    require_same_ring(*this, o, "mul");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& s : terms_)
        for (const auto& t : o.terms_)
            acc.push_back({s.mon * t.mon, s.coeff * t.coeff});
    return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::pow(uint32_t e) const
{
    Polynomial out = Polynomial::constant(ring_, 1);
    for (uint32_t i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (!same_ring(ring_, o.ring_))
        return false;
    if (terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

size_t Polynomial::leading_index(const MonomialOrder& order) const
{
    assert(!terms_.empty());
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.greater(terms_[i].mon, terms_[best].mon))
            best = i;
    return best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const
{
    if (is_zero())
        return *this;
    const Rational& lc = leading_term(order).coeff;
    return scaled(Rational(1) / lc);
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const
{
    if (images.size() != nvars())
        throw InputError("subst.arity", "substitution needs one image per variable");
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial m = Polynomial::constant(target, t.coeff);
        for (size_t i = 0; i < nvars(); ++i) {
            if (t.mon.exponent(i) == 0)
                continue;
            m = m * images[i].pow(t.mon.exponent(i));
        }
        acc = acc + m;
    }
    return acc;
}

std::string Polynomial::str() const
{
    if (is_zero())
        return "0";
    // print in degrevlex-descending order for readability
    std::vector<const Term*> ts;
    for (const auto& t : terms_)
        ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) {
        return ord.greater(a->mon, b->mon);
    });
    std::ostringstream out;
    bool first = true;
    for (const Term* t : ts) {
        Rational c = t->coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (c != 1 || t->mon.is_one()) {
            out << to_string(c);
            printed_coeff = true;
        }
        bool first_var = true;
        for (size_t i = 0; i < nvars(); ++i) {
            uint32_t e = t->mon.exponent(i);
            if (e == 0)
                continue;
            if (printed_coeff || !first_var)
                out << "*";
            out << ring_->variables[i];
            if (e > 1)
                out << "^" << e;
            first_var = false;
        }
    }
    return out.str();
}

} // namespace rdim
