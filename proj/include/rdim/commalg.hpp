#ifndef RDIM_COMMALG_HPP
#define RDIM_COMMALG_HPP

#include <memory>
#include <optional>
#include <vector>

#include "rdim/groebner.hpp"
#include "rdim/module_groebner.hpp"

namespace rdim {

/// R = k[variables]/(relations). The Gröbner basis of the defining ideal is
/// computed once per presentation and shared between copies.
class RingPresentation {
public:
    RingPresentation() = default;
    RingPresentation(RingPtr ring, std::vector<Polynomial> relations);

    static RingPresentation polynomial_ring(RingPtr ring)
    {
        return RingPresentation(std::move(ring), {});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    size_t nvars() const { return ring_ ? ring_->nvars() : 0; }

    /// Reduced degrevlex Gröbner basis of the defining ideal (cached,
    /// thread-safe).
    const GroebnerBasis& defining_gb() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> relations_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Finitely presented module M = coker(A) over a RingPresentation; the
/// columns of A are `relations`, vectors of length `free_rank`.
class FPModule {
public:
    FPModule() = default;
    FPModule(RingPresentation ring, size_t free_rank, std::vector<FreeModuleVector> relations);

    static FPModule free_module(RingPresentation ring, size_t rank)
    {
        return FPModule(std::move(ring), rank, {});
    }

    const RingPresentation& ring() const { return ring_; }
    size_t free_rank() const { return free_rank_; }
    const std::vector<FreeModuleVector>& relations() const { return relations_; }

    /// Module relations plus the defining ideal acting on every slot.
    std::vector<FreeModuleVector> augmented_relations() const;
    /// Gröbner basis of the augmented relation submodule (cached).
    const ModuleGB& relation_gb() const;

private:
    RingPresentation ring_;
    size_t free_rank_ = 0;
    std::vector<FreeModuleVector> relations_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

enum class DimMethod { fitting, annihilator };

/// Krull dimension with a maximal independent variable set as witness.
/// `zero` flags the ZERO_MODULE sentinel (for rings: 1 ∈ I).
struct DimensionReport {
    bool zero = false;
    size_t dimension = 0;
    std::vector<size_t> witness_vars;
    DimMethod method = DimMethod::fitting;
};

DimensionReport krull_dim_ideal(const RingPresentation& ring);
/// Same computation under a caller-chosen term order (the dimension itself
/// is order-independent; the witness set may differ).
DimensionReport krull_dim_ideal(const RingPresentation& ring, const MonomialOrder& order);

std::vector<Polynomial> fitting_ideal_0(const FPModule& M);

std::vector<Polynomial> annihilator(const FPModule& M);

bool is_zero_module(const FPModule& M);

DimensionReport module_dim(const FPModule& M, DimMethod method = DimMethod::fitting);

struct NzdResult {
    bool nonzerodivisor = false;
    /// On failure: m with x·m ∈ im A but m ∉ im A, in normal form.
    std::optional<FreeModuleVector> witness;
};

NzdResult is_nonzerodivisor(const Polynomial& x, const FPModule& M);

/// M/(x)M: the presentation gains the columns x·e_j.
FPModule quotient_by_element(const FPModule& M, const Polynomial& x);

struct RegSeqCheck {
    Polynomial element;
    bool nonzerodivisor = false;
    bool proper = false;
    std::optional<FreeModuleVector> zerodivisor_witness;
};

/// Successful verification doubles as the certificate: re-running
/// verify_regular_sequence replays every check.
struct RegSeqResult {
    bool ok = false;
    size_t fails_at = 0; // 1-based prefix index when !ok
    std::vector<RegSeqCheck> checks;
};

RegSeqResult verify_regular_sequence(const std::vector<Polynomial>& xs, const FPModule& M);

struct RegSeqSearchResult {
    std::optional<RegSeqResult> certificate; // nullopt: NOT_FOUND (inconclusive)
    size_t evaluations = 0;
};

/// Bounded heuristic search: ring variables first, then small integer linear
/// combinations with coefficients in {-2..2}, depth-first with backtracking.
/// A miss is inconclusive by design.
RegSeqSearchResult find_regular_sequence(const FPModule& M, size_t target, size_t budget = 200);

/// depth along <xs> as s - max{ i : H_i(Koszul(xs; M)) != 0 }; homology is
/// computed by syzygies and zero-tested by generator membership. Returns s
/// when every homology module vanishes ((xs)M = M).
size_t koszul_depth(const std::vector<Polynomial>& xs, const FPModule& M);

/// Deterministic tie-break order on polynomials (used for sorting outputs).
bool canonical_less(const Polynomial& a, const Polynomial& b);

} // namespace rdim

#endif
