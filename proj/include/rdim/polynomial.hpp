#ifndef RDIM_POLYNOMIAL_HPP
#define RDIM_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rdim/monomial.hpp"
#include "rdim/rational.hpp"

namespace rdim {

/// Ambient ring descriptor: an ordered list of variable names. Variables are
/// identified by declaration index everywhere; names only matter for parsing
/// and printing.
struct Ring {
    std::vector<std::string> variables;

    size_t nvars() const { return variables.size(); }
    std::optional<size_t> index_of(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables);

/// Rings are compatible when the variable lists agree; separately parsed
/// files describing the same ring interoperate.
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial mon;
    Rational coeff;
};

/// Exact multivariate polynomial over the rationals. Terms are stored with
/// nonzero coefficients only, sorted descending in the canonical (lex) order;
/// the zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, size_t index, uint32_t power = 1);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
    size_t nvars() const { return ring_ ? ring_->nvars() : 0; }
    uint32_t total_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(uint32_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Index into terms() of the maximal term under `order`.
    size_t leading_index(const MonomialOrder& order) const;
    const Term& leading_term(const MonomialOrder& order) const
    {
        return terms_[leading_index(order)];
    }

    /// Monic copy: divide by the leading coefficient under `order`.
    Polynomial monic(const MonomialOrder& order) const;

    /// Substitute each variable by the given polynomial (all over one target
    /// ring). Used for morphism images and ring maps.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    friend Polynomial merge_linear(const Polynomial& a, const Polynomial& b,
                                   const Rational& ca, const Rational& cb);
};

/// ca*a + cb*b in one merge pass.
Polynomial merge_linear(const Polynomial& a, const Polynomial& b, const Rational& ca,
                        const Rational& cb);

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* where);

} // namespace rdim

#endif
