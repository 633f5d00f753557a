#ifndef RDIM_MODULE_GROEBNER_HPP
#define RDIM_MODULE_GROEBNER_HPP

#include <vector>

#include "rdim/groebner.hpp"
#include "rdim/polynomial.hpp"

namespace rdim {

/// Element of a free module R^rank; components are polynomials over one ring.
struct FreeModuleVector {
    std::vector<Polynomial> components;

    size_t rank() const { return components.size(); }
    bool is_zero() const;
    FreeModuleVector operator+(const FreeModuleVector& o) const;
    FreeModuleVector operator-(const FreeModuleVector& o) const;
    FreeModuleVector times_monomial(const Monomial& m, const Rational& c) const;
    FreeModuleVector scaled_by(const Polynomial& p) const;
    bool operator==(const FreeModuleVector& o) const { return components == o.components; }
};

FreeModuleVector zero_vector(const RingPtr& ring, size_t rank);
FreeModuleVector basis_vector(const RingPtr& ring, size_t rank, size_t position);

/// Gröbner basis of a submodule of R^rank under the position-over-term
/// extension of `order` (earlier positions dominate).
struct ModuleGB {
    std::vector<FreeModuleVector> generators;
    MonomialOrder order;
    size_t rank = 0;
};

ModuleGB module_buchberger(std::vector<FreeModuleVector> generators, const MonomialOrder& order,
                           size_t rank);

FreeModuleVector module_normal_form(const FreeModuleVector& v, const ModuleGB& gb);

bool in_submodule(const FreeModuleVector& v, const ModuleGB& gb);

/// Generators of the kernel of R^m -> R^rank sending e_i to vectors[i].
/// Computed from a Gröbner basis of the graph module and the block
/// elimination property of position-over-term orders.
std::vector<FreeModuleVector> syzygy_basis(const std::vector<FreeModuleVector>& vectors,
                                           const MonomialOrder& order);

} // namespace rdim

#endif
