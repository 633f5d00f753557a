#ifndef RDIM_DESCENT_HPP
#define RDIM_DESCENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdim/quiver.hpp"

namespace rdim {

/// Finite simplicial complex given by its simplices (0-based vertex sets).
/// Construction validates face closure and rejects duplicates; every vertex
/// used by a simplex must appear as a singleton.
class SimplicialComplex {
public:
    /// Default: the one-point complex.
    SimplicialComplex() : n_(1), simplices_{{0}} {}
    SimplicialComplex(size_t vertex_count, std::vector<std::vector<size_t>> simplices);

    /// Close the given simplex list under faces before validating.
    static SimplicialComplex with_closed_faces(size_t vertex_count,
                                               std::vector<std::vector<size_t>> simplices);

    /// Full simplex on n+1 vertices with all faces (the worst-case shape).
    static SimplicialComplex full_simplex(size_t dimension);

    size_t vertex_count() const { return n_; }
    const std::vector<std::vector<size_t>>& simplices() const { return simplices_; }
    size_t dimension() const;
    /// Connected components induced by shared vertices; simplex indices.
    std::vector<std::vector<size_t>> components() const;

private:
    size_t n_;
    std::vector<std::vector<size_t>> simplices_; // each sorted; list sorted
};

/// Longest chain in the star-inclusion poset: dim + 1 for a complex.
size_t star_poset_depth(const SimplicialComplex& k);

/// A simplicial complex whose simplices carry arboreal local models: either
/// an explicit rooted signed tree or DEFAULT (worst case allowed by the
/// dimension constraint: a d-simplex in ambient half-dimension n admits
/// trees with at most n-d non-root vertices).
struct StratLabeledComplex {
    SimplicialComplex complex;
    size_t ambient_half_dim = 0;
    /// by simplex index into complex.simplices(); nullopt = DEFAULT
    std::vector<std::optional<RootedSignedTree>> labels;

    void validate() const;
    /// Local Rouquier dimension of one simplex's label.
    int local_rdim(size_t simplex_index) const;
};

StratLabeledComplex default_labeled(SimplicialComplex complex, size_t ambient_half_dim);

/// Max of local rdims over the simplices at one poset level (level = dim+1).
int level_rdim(const StratLabeledComplex& s, size_t level);

struct CoverBoundReport {
    size_t depth = 0;
    std::vector<int> per_level_rdim;            // index 0 = level 1
    size_t bound = 0;                           // Σ (r_l + 1) − 1, max over components
    size_t experimental_chain_bound = 0;        // per-maximal-chain refinement; NOT certified
    std::vector<std::string> trace;             // which simplices realize each level max
};

/// Levelwise upper bound for the category glued from the star cover. The
/// certified number is per connected component (orthogonal pieces), combined
/// by max.
CoverBoundReport descent_upper_bound(const StratLabeledComplex& s);

/// Closed form of the worst-case bound: n for n <= 3, else 2n-3.
size_t arboreal_default_bound(size_t n);

/// Σ (r_l + 1) − 1 over the parts of a semi-orthogonal decomposition.
size_t sod_bound(const std::vector<size_t>& parts);

/// A diagonal resolution of length l certifies rdim <= l - 1.
size_t resolution_bound(size_t length);

} // namespace rdim

#endif
