#ifndef RDIM_GRADEDALG_HPP
#define RDIM_GRADEDALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdim/commalg.hpp"

namespace rdim {

enum class Parity { even, odd };
enum class GradingMode { integer, mod2 };

struct GradedGenerator {
    std::string name;
    long degree = 0;
    Parity parity = Parity::even;
};

/// Graded-commutative algebra by generators and relations. Odd generators
/// square to zero implicitly (characteristic 0); relation expressions are
/// parsed commutatively and read as products in declaration order.
class GradedPresentation {
public:
    GradedPresentation() = default;
    GradedPresentation(GradingMode mode, std::vector<GradedGenerator> generators,
                       std::vector<Polynomial> relations);

    static GradedPresentation ground_field(GradingMode mode = GradingMode::integer)
    {
        return GradedPresentation(mode, {}, {});
    }

    GradingMode mode() const { return mode_; }
    const std::vector<GradedGenerator>& generators() const { return gens_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const RingPtr& expr_ring() const { return ring_; }

    /// Kill odd squares, then reduce even-variable content modulo the even
    /// part of the relation ideal (plus odd-linear relations).
    Polynomial normalize(const Polynomial& expr) const;
    /// Product with Koszul signs hidden behind the declaration-order normal
    /// form (odd variables anticommute).
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;

    bool is_zero_element(const Polynomial& expr) const { return normalize(expr).is_zero(); }

    /// Degree of a homogeneous element; nullopt for 0, throws when mixed.
    std::optional<long> degree_of(const Polynomial& expr) const;

private:
    GradingMode mode_ = GradingMode::integer;
    std::vector<GradedGenerator> gens_;
    std::vector<Polynomial> relations_;
    RingPtr ring_;
    std::vector<Polynomial> even_reducers_;     // relations purely in even generators
    std::vector<Polynomial> odd_linear_reducers_; // single odd monomial times even content
    void split_reducers();
    Polynomial normalize_raw(const Polynomial& expr) const; // odd-square kill only
    long monomial_degree(const Monomial& m) const;
};

/// Tensor product of presentations; generators are suffixed _1/_2 so the
/// result is deterministic. Signs live entirely in the parity flags.
GradedPresentation kunneth_tensor(const GradedPresentation& a, const GradedPresentation& b);

/// Degree- and parity-preserving algebra map, checked at construction:
/// every source relation (and odd square) must map to zero in the target.
class AlgebraMorphism {
public:
    AlgebraMorphism(GradedPresentation source, GradedPresentation target,
                    std::map<std::string, Polynomial> images);

    const GradedPresentation& source() const { return source_; }
    const GradedPresentation& target() const { return target_; }
    Polynomial apply(const Polynomial& source_expr) const;

private:
    GradedPresentation source_;
    GradedPresentation target_;
    std::vector<Polynomial> images_; // by source generator index
};

/// The data feeding the dimension lower bound: a finite-type commutative
/// subring R (of the degree-zero part) together with the endomorphism module
/// of a generator, presented by the action of each subring variable on a
/// finite generator set.
struct SubringModuleProblem {
    RingPresentation subring;
    std::vector<std::string> module_generators;
    /// action[v](i,j): coefficient of generator i in v·(generator j);
    /// entries are polynomials over the subring variables.
    std::map<std::string, std::vector<std::vector<Polynomial>>> action;
    std::string description;
};

/// Forget the grading: the subring acts through matrices, so the module is
/// coker of the columns v·e_j − Σ_i action[v](i,j)·e_i.
FPModule flatten_to_module(const SubringModuleProblem& problem);

struct LowerBoundCertificate {
    size_t bound = 0;
    DimensionReport dimension;
    std::optional<RegSeqResult> regular_sequence; // ghost-witness data when found
};

/// dim_R Hom(G,G): a certified lower bound for the Rouquier dimension.
/// Throws InputError("vanishing category") on the zero module.
LowerBoundCertificate lower_bound_from_generator(const SubringModuleProblem& problem,
                                                 size_t regseq_budget = 200);

enum class LieFamily { Sp, SU, Spin, G2, F4, E6, E7, E8 };

size_t lie_group_rank(LieFamily family, size_t n);

/// Presets for the standard geometric families.
SubringModuleProblem preset_odd_sphere(size_t n);
SubringModuleProblem preset_even_sphere(size_t n);
SubringModuleProblem preset_torus(size_t n);
SubringModuleProblem preset_lie_group(LieFamily family, size_t n);
SubringModuleProblem preset_cp(size_t n);
SubringModuleProblem preset_product(const std::vector<SubringModuleProblem>& factors);

/// Name-based preset entry point used by the CLI: odd_sphere, even_sphere,
/// torus, lie_group, cp, product (comma-separated simple factors).
SubringModuleProblem preset_by_name(const std::string& name,
                                    const std::map<std::string, std::string>& params);

} // namespace rdim

#endif
