#ifndef RDIM_GROEBNER_HPP
#define RDIM_GROEBNER_HPP

#include <vector>

#include "rdim/polynomial.hpp"

namespace rdim {

/// A Gröbner basis together with the order it was computed under. When
/// `reduced` holds, the basis is the unique reduced one: monic generators,
/// no term of any generator divisible by another generator's leading term,
/// sorted by increasing leading term.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    MonomialOrder order;
    bool reduced = false;

    bool is_trivial() const; // basis == {1}, i.e. the whole ring
};

/// Full multivariate division: every term of the result is reducible by no
/// leading term of `basis`. The remainder is unique when `basis` is a
/// Gröbner basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Classical Buchberger with the normal pair-selection strategy (minimal lcm
/// degree) and the coprimality and chain criteria. The output is the reduced
/// basis, so it is deterministic for a fixed input order.
GroebnerBasis buchberger(std::vector<Polynomial> generators, const MonomialOrder& order);

bool in_ideal(const Polynomial& f, const GroebnerBasis& basis);

/// Generators of I ∩ k[keep], computed with a block elimination order.
/// `keep` flags the variables to retain (size = nvars).
std::vector<Polynomial> elimination_ideal(const std::vector<Polynomial>& generators,
                                          const std::vector<bool>& keep);

/// Ideal intersection via the 1-t trick on an extended ring.
std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b,
                                           const RingPtr& ring);

/// Rabinowitsch radical membership: f ∈ √I.
bool in_radical(const Polynomial& f, const std::vector<Polynomial>& ideal, const RingPtr& ring);

} // namespace rdim

#endif
