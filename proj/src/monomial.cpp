#include "rdim/monomial.hpp"

#include <cassert>

namespace rdim {

Monomial Monomial::variable(size_t nvars, size_t index, uint32_t power)
{
    assert(index < nvars);
    std::vector<uint32_t> e(nvars, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

bool Monomial::is_one() const
{
    for (uint32_t e : exps_)
        if (e != 0)
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    assert(exps_.size() == other.exps_.size());
    std::vector<uint32_t> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const
{
    assert(exps_.size() == other.exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& other) const
{
    assert(divides(other));
    std::vector<uint32_t> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = other.exps_[i] - exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const
{
    assert(exps_.size() == other.exps_.size());
    std::vector<uint32_t> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const
{
    assert(exps_.size() == other.exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0)
            return false;
    return true;
}

bool Monomial::supported_on(const std::vector<bool>& allowed) const
{
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && !allowed[i])
            return false;
    return true;
}

bool lex_greater(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.nvars(); ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i);
    }
    return false;
}

namespace {

int lex_compare(const Monomial& a, const Monomial& b, size_t from, size_t to)
{
    for (size_t i = from; i < to; ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i) ? 1 : -1;
    }
    return 0;
}

// Degree first; ties broken by the last variable with a differing exponent,
// smaller exponent winning.
int degrevlex_compare(const Monomial& a, const Monomial& b, size_t from, size_t to)
{
    uint32_t da = 0, db = 0;
    for (size_t i = from; i < to; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db)
        return da > db ? 1 : -1;
    for (size_t i = to; i-- > from;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    assert(a.nvars() == b.nvars());
    const size_t n = a.nvars();
    switch (kind_) {
    case OrderKind::lex:
        return lex_compare(a, b, 0, n);
    case OrderKind::degrevlex:
        return degrevlex_compare(a, b, 0, n);
    case OrderKind::elimination: {
        const size_t k = std::min(block_, n);
        if (int c = degrevlex_compare(a, b, 0, k))
            return c;
        return degrevlex_compare(a, b, k, n);
    }
    }
    return 0;
}

std::string MonomialOrder::name() const
{
    switch (kind_) {
    case OrderKind::lex:
        return "lex";
    case OrderKind::degrevlex:
        return "degrevlex";
    case OrderKind::elimination:
        return "elimination(" + std::to_string(block_) + ")";
    }
    return "?";
}

} // namespace rdim
