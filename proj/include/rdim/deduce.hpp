#ifndef RDIM_DEDUCE_HPP
#define RDIM_DEDUCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rdim {

enum class EntityKind { liouville, category, variety };

struct Entity {
    std::string id;
    EntityKind kind = EntityKind::liouville;
    /// complex dimension; mandatory for varieties feeding the coherent floor
    std::optional<long> dim;
};

/// Bound-transfer hypotheses and assertions. `generalized_cocores` is the
/// flag form of the skeleton hypotheses (mostly Lagrangian, every critical
/// component carries a generalized cocore, intersections transverse); the
/// intersection and proper-module rules refuse to fire without it.
enum class FactKind {
    rdim_bound,             // direct interval assertion (lower and/or upper)
    lef_crit_count,         // a Lefschetz fibration with Weinstein fibers and k critical points
    intersection_count,     // a witnessed generic skeleton intersection count
    krull_lower,            // certified dim_R Hom(G,G) from the algebra pipeline
    point_like_dim,         // point-like object of torus dimension n
    embedding,              // inner embeds into outer (Weinstein up to deformation)
    quotient,               // subject is a quotient (dense image) of `of`
    polarized_weinstein_dim,// polarized Weinstein pair of real dimension 2n
    nonzero_category,
    proper_module,          // a nonzero proper module exists
    mirror_equivalence,     // variety's coherent category matches the pair's category
    generalized_cocores,
};

struct Fact {
    FactKind kind;
    std::string subject;             // unused by embedding/mirror_equivalence
    std::optional<long> value;       // k / n payloads
    std::optional<long> lower, upper; // rdim_bound payloads
    std::string inner, outer;        // embedding
    std::string of, by;              // quotient: subject = target, of = source
    std::string variety, pair;       // mirror_equivalence
};

enum class Quantity { rdim, lef_w, intersection };

std::string quantity_name(Quantity q);
std::string fact_kind_name(FactKind k);

/// [lower, upper] with NONE/INF encoded as absent; both finite requires
/// lower <= upper (checked by the engine at every tightening).
struct BoundInterval {
    std::optional<long> lower;
    std::optional<long> upper;

    bool operator==(const BoundInterval&) const = default;
};

struct BoundRef {
    std::string entity;
    Quantity quantity = Quantity::rdim;
    bool is_lower = true;
};

struct TraceStep {
    std::string rule; // "R1".."R9" or "fact"
    BoundRef produced;
    long value = 0;
    std::vector<size_t> fact_inputs;   // indices into the database fact list
    std::vector<BoundRef> bound_inputs;
    std::string note;
};

struct FactDatabase {
    std::vector<Entity> entities;
    std::vector<Fact> facts;

    const Entity* find(const std::string& id) const;
    void validate() const; // reference resolution, payload ranges
};

struct PropagationResult {
    std::map<std::string, std::map<Quantity, BoundInterval>> intervals;
    std::vector<TraceStep> trace;

    const BoundInterval& interval(const std::string& entity, Quantity q) const;
};

/// Run all rules to the fixed point (intervals only tighten; termination is
/// guaranteed since every propagated value is bounded by seeded payloads).
/// Throws InconsistencyError when a lower bound exceeds an upper bound.
PropagationResult propagate(const FactDatabase& db);
/// Same, with the per-pass rule application order permuted (for the
/// order-independence property test). `rule_order` must be a permutation of
/// 0..rule_count()-1.
PropagationResult propagate(const FactDatabase& db, const std::vector<size_t>& rule_order);
size_t rule_count();

/// Minimal rule chain justifying the current lower and upper of a quantity,
/// in application order. Empty for untouched quantities.
std::vector<TraceStep> explain(const PropagationResult& result, const std::string& entity,
                               Quantity quantity);

/// Replay a trace step-by-step on a fresh database; returns the resulting
/// intervals (byte-identical to the original run for valid traces).
std::map<std::string, std::map<Quantity, BoundInterval>> replay(const FactDatabase& db,
                                                                const std::vector<TraceStep>& trace);

/// The worked entities shipped with the tool: cotangent bundles of spheres,
/// tori and compact Lie groups, the exotic cotangent structure, a flexible
/// example, and the mirror entries.
FactDatabase ship_catalog();

} // namespace rdim

#endif
