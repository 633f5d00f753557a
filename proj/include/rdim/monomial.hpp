#ifndef RDIM_MONOMIAL_HPP
#define RDIM_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace rdim {

/// A power product. The exponent vector always has one entry per ring
/// variable, so monomials from different rings never compare equal.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exponents) : exps_(std::move(exponents)) {}
    static Monomial one(size_t nvars) { return Monomial(std::vector<uint32_t>(nvars, 0)); }
    static Monomial variable(size_t nvars, size_t index, uint32_t power = 1);

    size_t nvars() const { return exps_.size(); }
    uint32_t exponent(size_t i) const { return exps_[i]; }
    const std::vector<uint32_t>& exponents() const { return exps_; }
    uint32_t total_degree() const
    {
        return std::accumulate(exps_.begin(), exps_.end(), uint32_t{0});
    }
    bool is_one() const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// Quotient, valid only when this->divides(other) fails to... callers must
    /// check divides() first; asserts in debug builds.
    Monomial divide_into(const Monomial& other) const; // other / *this
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    /// True when every variable in the support lies in `allowed`.
    bool supported_on(const std::vector<bool>& allowed) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    std::vector<uint32_t> exps_;
};

/// Canonical tie-break order (plain lex on exponent vectors); used for the
/// storage order of polynomials, independent of any term order.
bool lex_greater(const Monomial& a, const Monomial& b);

enum class OrderKind { lex, degrevlex, elimination };

/// Total well-order on monomials compatible with multiplication.
/// elimination(block) orders the first `block` variables in front: any
/// monomial touching the block beats every monomial that does not.
class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::degrevlex), block_(0) {}
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::degrevlex, 0); }
    static MonomialOrder elimination(size_t block_size)
    {
        return MonomialOrder(OrderKind::elimination, block_size);
    }

    OrderKind kind() const { return kind_; }
    size_t block() const { return block_; }

    /// <0, 0, >0 as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string name() const;

private:
    MonomialOrder(OrderKind k, size_t blk) : kind_(k), block_(blk) {}
    OrderKind kind_;
    size_t block_;
};

} // namespace rdim

#endif
