#ifndef RDIM_FPPOLY_HPP
#define RDIM_FPPOLY_HPP

#include <cstdint>
#include <vector>

#include "rdim/commalg.hpp"
#include "rdim/polynomial.hpp"

namespace rdim {

/// Optional prime-field coefficient mode (p < 2^31). Useful as a fast
/// pre-pass for leading-term data; certified outputs always come from the
/// rational engine.
struct FpContext {
    uint32_t p;

    explicit FpContext(uint32_t prime);
    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b % p) % p; }
    uint32_t mul(uint32_t a, uint32_t b) const
    {
        return static_cast<uint32_t>((uint64_t(a) * b) % p);
    }
    uint32_t inv(uint32_t a) const;
    /// Reduce a rational coefficient; throws when the denominator vanishes.
    uint32_t reduce(const Rational& q) const;
};

struct FpTerm {
    Monomial mon;
    uint32_t coeff;
};

struct FpPolynomial {
    std::vector<FpTerm> terms; // canonical (lex-descending) order, no zeros
};

FpPolynomial fp_from_rational(const Polynomial& f, const FpContext& ctx);

FpPolynomial fp_normal_form(const FpPolynomial& f, const std::vector<FpPolynomial>& basis,
                            const MonomialOrder& order, const FpContext& ctx);

/// Reduced Gröbner basis over F_p, same strategy and determinism as the
/// rational engine.
std::vector<FpPolynomial> fp_buchberger(std::vector<FpPolynomial> generators,
                                        const MonomialOrder& order, const FpContext& ctx);

/// Krull dimension from the mod-p leading-term ideal. For unlucky primes the
/// result can differ from the rational one, so this is a fast pre-pass, not
/// a certificate.
DimensionReport krull_dim_ideal_modp(const RingPresentation& ring, uint32_t p);

} // namespace rdim

#endif
