#include "rdim/deduce.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rdim/descent.hpp"
#include "rdim/errors.hpp"

namespace rdim {

std::string quantity_name(Quantity q)
{
    switch (q) {
    case Quantity::rdim:
        return "rdim";
    case Quantity::lef_w:
        return "lef_w";
    case Quantity::intersection:
        return "intersection";
    }
    return "?";
}

std::string fact_kind_name(FactKind k)
{
    switch (k) {
    case FactKind::rdim_bound: return "rdim_bound";
    case FactKind::lef_crit_count: return "lef_crit_count";
    case FactKind::intersection_count: return "intersection_count";
    case FactKind::krull_lower: return "krull_lower";
    case FactKind::point_like_dim: return "point_like_dim";
    case FactKind::embedding: return "embedding";
    case FactKind::quotient: return "quotient";
    case FactKind::polarized_weinstein_dim: return "polarized_weinstein_dim";
    case FactKind::nonzero_category: return "nonzero_category";
    case FactKind::proper_module: return "proper_module";
    case FactKind::mirror_equivalence: return "mirror_equivalence";
    case FactKind::generalized_cocores: return "generalized_cocores";
    }
    return "?";
}

const Entity* FactDatabase::find(const std::string& id) const
{
    for (const auto& e : entities)
        if (e.id == id)
            return &e;
    return nullptr;
}

void FactDatabase::validate() const
{
    for (size_t i = 0; i < entities.size(); ++i)
        for (size_t j = i + 1; j < entities.size(); ++j)
            if (entities[i].id == entities[j].id)
                throw InputError("deduce.duplicate_entity",
                                 "duplicate entity '" + entities[i].id + "'");
    auto need = [&](const std::string& id, const char* where) {
        if (!find(id))
            throw InputError("deduce.dangling_reference",
                             std::string(where) + ": unknown entity '" + id + "'");
    };
    for (const auto& f : facts) {
        switch (f.kind) {
        case FactKind::embedding:
            need(f.inner, "embedding.inner");
            need(f.outer, "embedding.outer");
            break;
        case FactKind::mirror_equivalence: {
            need(f.variety, "mirror.variety");
            need(f.pair, "mirror.pair");
            const Entity* v = find(f.variety);
            if (v->kind != EntityKind::variety)
                throw InputError("deduce.mirror_kind",
                                 "mirror_equivalence.variety must point at a variety");
            break;
        }
        case FactKind::quotient:
            need(f.subject, "quotient.subject");
            need(f.of, "quotient.of");
            break;
        default:
            need(f.subject, fact_kind_name(f.kind).c_str());
            break;
        }
        switch (f.kind) {
        case FactKind::lef_crit_count:
        case FactKind::intersection_count:
        case FactKind::krull_lower:
        case FactKind::point_like_dim:
        case FactKind::polarized_weinstein_dim:
            if (!f.value || *f.value < 0)
                throw InputError("deduce.payload",
                                 fact_kind_name(f.kind) + " needs a non-negative value");
            if (f.kind == FactKind::polarized_weinstein_dim && *f.value == 0)
                throw InputError("deduce.payload", "polarized_weinstein_dim needs n >= 1");
            break;
        case FactKind::rdim_bound:
            if (!f.lower && !f.upper)
                throw InputError("deduce.payload", "rdim_bound needs lower and/or upper");
            if ((f.lower && *f.lower < 0) || (f.upper && *f.upper < 0))
                throw InputError("deduce.payload", "rdim bounds are non-negative");
            break;
        default:
            break;
        }
    }
}

const BoundInterval& PropagationResult::interval(const std::string& entity, Quantity q) const
{
    static const BoundInterval empty;
    auto it = intervals.find(entity);
    if (it == intervals.end())
        return empty;
    auto jt = it->second.find(q);
    return jt == it->second.end() ? empty : jt->second;
}

namespace {

std::string bound_ref_str(const BoundRef& r)
{
    return quantity_name(r.quantity) + "(" + r.entity + ")." + (r.is_lower ? "lower" : "upper");
}

struct Engine {
    const FactDatabase& db;
    PropagationResult res;

    explicit Engine(const FactDatabase& database) : db(database)
    {
        for (const auto& e : db.entities) {
            res.intervals[e.id][Quantity::rdim] = {};
            res.intervals[e.id][Quantity::lef_w] = {};
            res.intervals[e.id][Quantity::intersection] = {};
        }
    }

    BoundInterval& slot(const std::string& entity, Quantity q)
    {
        return res.intervals[entity][q];
    }

    [[noreturn]] void inconsistent(const BoundRef& ref, long lower, long upper)
    {
        std::ostringstream text;
        text << "inconsistent bounds for " << quantity_name(ref.quantity) << "(" << ref.entity
             << "): lower " << lower << " > upper " << upper << "\n";
        for (const auto& s : res.trace)
            text << "  [" << s.rule << "] " << bound_ref_str(s.produced) << " := " << s.value
                 << "\n";
        throw InconsistencyError("derived lower bound exceeds upper bound", text.str());
    }

    bool tighten_lower(const std::string& rule, const std::string& entity, Quantity q,
                       long value, std::vector<size_t> fact_inputs,
                       std::vector<BoundRef> bound_inputs, const std::string& note = "")
    {
        BoundInterval& b = slot(entity, q);
        if (b.lower && *b.lower >= value)
            return false;
        b.lower = value;
        BoundRef ref{entity, q, true};
        res.trace.push_back({rule, ref, value, std::move(fact_inputs), std::move(bound_inputs),
                             note});
        if (b.upper && *b.lower > *b.upper)
            inconsistent(ref, *b.lower, *b.upper);
        return true;
    }

    bool tighten_upper(const std::string& rule, const std::string& entity, Quantity q,
                       long value, std::vector<size_t> fact_inputs,
                       std::vector<BoundRef> bound_inputs, const std::string& note = "")
    {
        BoundInterval& b = slot(entity, q);
        if (b.upper && *b.upper <= value)
            return false;
        b.upper = value;
        BoundRef ref{entity, q, false};
        res.trace.push_back({rule, ref, value, std::move(fact_inputs), std::move(bound_inputs),
                             note});
        if (b.lower && *b.lower > *b.upper)
            inconsistent(ref, *b.lower, *b.upper);
        return true;
    }

    bool has_flag(const std::string& entity, FactKind kind, size_t* index = nullptr) const
    {
        for (size_t i = 0; i < db.facts.size(); ++i)
            if (db.facts[i].kind == kind && db.facts[i].subject == entity) {
                if (index)
                    *index = i;
                return true;
            }
        return false;
    }

    // --- rules -----------------------------------------------------------

    bool seed_direct_facts()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            switch (f.kind) {
            case FactKind::rdim_bound:
                if (f.lower)
                    changed |= tighten_lower("fact", f.subject, Quantity::rdim, *f.lower, {i},
                                             {}, "asserted bound");
                if (f.upper)
                    changed |= tighten_upper("fact", f.subject, Quantity::rdim, *f.upper, {i},
                                             {}, "asserted bound");
                break;
            case FactKind::intersection_count:
                changed |= tighten_upper("fact", f.subject, Quantity::intersection, *f.value,
                                         {i}, {}, "witnessed intersection count");
                break;
            default:
                break;
            }
        }
        return changed;
    }

    // a fibration with k critical points: Lef_w <= k and rdim <= k-1
    bool rule_lefschetz_upper()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            if (f.kind != FactKind::lef_crit_count)
                continue;
            long k = *f.value;
            changed |= tighten_upper("R1", f.subject, Quantity::lef_w, k, {i}, {},
                                     "a fibration with k critical points bounds the minimum");
            changed |= tighten_upper("R1", f.subject, Quantity::rdim, std::max<long>(k - 1, 0),
                                     {i}, {}, "full exceptional collection of thimbles");
        }
        return changed;
    }

    // nonzero category: Lef_w >= rdim.lower + 1 (rdim.lower defaults to 0)
    bool rule_lefschetz_lower()
    {
        bool changed = false;
        for (const auto& e : db.entities) {
            size_t flag;
            if (!has_flag(e.id, FactKind::nonzero_category, &flag))
                continue;
            const BoundInterval& r = res.intervals[e.id][Quantity::rdim];
            long base = r.lower.value_or(0);
            changed |= tighten_lower("R1", e.id, Quantity::lef_w, base + 1, {flag},
                                     {{e.id, Quantity::rdim, true}},
                                     "Lef_w >= rdim + 1 for nonzero categories");
        }
        return changed;
    }

    // skeleton intersections: |c ∩ φc| >= rdim.lower + 1
    bool rule_intersection()
    {
        bool changed = false;
        for (const auto& e : db.entities) {
            size_t nz, gc;
            if (!has_flag(e.id, FactKind::nonzero_category, &nz) ||
                !has_flag(e.id, FactKind::generalized_cocores, &gc))
                continue;
            const BoundInterval& r = res.intervals[e.id][Quantity::rdim];
            long base = r.lower.value_or(0);
            changed |= tighten_lower("R2", e.id, Quantity::intersection, base + 1, {nz, gc},
                                     {{e.id, Quantity::rdim, true}},
                                     "diagonal resolution by product cocores");
        }
        return changed;
    }

    // rdim(inner) <= rdim(outer)
    bool rule_embedding()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            if (f.kind != FactKind::embedding)
                continue;
            const BoundInterval& in = res.intervals[f.inner][Quantity::rdim];
            const BoundInterval& out = res.intervals[f.outer][Quantity::rdim];
            if (in.lower)
                changed |= tighten_lower("R3", f.outer, Quantity::rdim, *in.lower, {i},
                                         {{f.inner, Quantity::rdim, true}},
                                         "monotone under Weinstein embeddings");
            if (out.upper)
                changed |= tighten_upper("R3", f.inner, Quantity::rdim, *out.upper, {i},
                                         {{f.outer, Quantity::rdim, false}},
                                         "monotone under Weinstein embeddings");
        }
        return changed;
    }

    // rdim(target) <= rdim(source) for quotients / dense images
    bool rule_quotient()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            if (f.kind != FactKind::quotient)
                continue;
            const BoundInterval& src = res.intervals[f.of][Quantity::rdim];
            const BoundInterval& tgt = res.intervals[f.subject][Quantity::rdim];
            if (src.upper)
                changed |= tighten_upper("R4", f.subject, Quantity::rdim, *src.upper, {i},
                                         {{f.of, Quantity::rdim, false}},
                                         "dense image cannot raise the dimension");
            if (tgt.lower)
                changed |= tighten_lower("R4", f.of, Quantity::rdim, *tgt.lower, {i},
                                         {{f.subject, Quantity::rdim, true}},
                                         "dense image cannot raise the dimension");
        }
        return changed;
    }

    bool rule_point_like()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            if (f.kind == FactKind::point_like_dim)
                changed |= tighten_lower("R5", f.subject, Quantity::rdim, *f.value, {i}, {},
                                         "point-like object of torus type");
        }
        return changed;
    }

    bool rule_krull()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            if (f.kind == FactKind::krull_lower)
                changed |= tighten_lower("R6", f.subject, Quantity::rdim, *f.value, {i}, {},
                                         "central action Krull bound");
        }
        return changed;
    }

    bool rule_polarized_upper()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            if (f.kind != FactKind::polarized_weinstein_dim)
                continue;
            long n = *f.value;
            long bound = static_cast<long>(arboreal_default_bound(static_cast<size_t>(n)));
            changed |= tighten_upper("R7", f.subject, Quantity::rdim, bound, {i}, {},
                                     "arboreal star cover of the skeleton");
        }
        return changed;
    }

    bool rule_proper_module()
    {
        bool changed = false;
        for (const auto& e : db.entities) {
            size_t pm, gc;
            if (!has_flag(e.id, FactKind::proper_module, &pm) ||
                !has_flag(e.id, FactKind::generalized_cocores, &gc))
                continue;
            changed |= tighten_lower("R8", e.id, Quantity::intersection, 2, {pm, gc}, {},
                                     "a nonzero proper module forbids a length-1 resolution");
        }
        return changed;
    }

    bool rule_mirror()
    {
        bool changed = false;
        for (size_t i = 0; i < db.facts.size(); ++i) {
            const Fact& f = db.facts[i];
            if (f.kind != FactKind::mirror_equivalence)
                continue;
            const BoundInterval v = res.intervals[f.variety][Quantity::rdim];
            const BoundInterval p = res.intervals[f.pair][Quantity::rdim];
            if (v.lower)
                changed |= tighten_lower("R9", f.pair, Quantity::rdim, *v.lower, {i},
                                         {{f.variety, Quantity::rdim, true}},
                                         "mirror categories share their dimension");
            if (v.upper)
                changed |= tighten_upper("R9", f.pair, Quantity::rdim, *v.upper, {i},
                                         {{f.variety, Quantity::rdim, false}},
                                         "mirror categories share their dimension");
            if (p.lower)
                changed |= tighten_lower("R9", f.variety, Quantity::rdim, *p.lower, {i},
                                         {{f.pair, Quantity::rdim, true}},
                                         "mirror categories share their dimension");
            if (p.upper)
                changed |= tighten_upper("R9", f.variety, Quantity::rdim, *p.upper, {i},
                                         {{f.pair, Quantity::rdim, false}},
                                         "mirror categories share their dimension");
        }
        return changed;
    }

    // coherent floor: rdim D^bCoh(Y) >= dim(Y) for (reduced, separated,
    // finite type) varieties with a declared dimension
    bool rule_coherent_floor()
    {
        bool changed = false;
        for (const auto& e : db.entities) {
            if (e.kind != EntityKind::variety || !e.dim)
                continue;
            changed |= tighten_lower("R9", e.id, Quantity::rdim, *e.dim, {}, {},
                                     "coherent sheaves see the Krull dimension");
        }
        return changed;
    }
};

using RuleFn = bool (Engine::*)();

const std::vector<RuleFn>& rule_table()
{
    static const std::vector<RuleFn> rules = {
        &Engine::seed_direct_facts,   &Engine::rule_lefschetz_upper,
        &Engine::rule_lefschetz_lower, &Engine::rule_intersection,
        &Engine::rule_embedding,      &Engine::rule_quotient,
        &Engine::rule_point_like,     &Engine::rule_krull,
        &Engine::rule_polarized_upper, &Engine::rule_proper_module,
        &Engine::rule_mirror,         &Engine::rule_coherent_floor,
    };
    return rules;
}

} // namespace

size_t rule_count() { return rule_table().size(); }

PropagationResult propagate(const FactDatabase& db, const std::vector<size_t>& rule_order)
{
    db.validate();
    if (rule_order.size() != rule_count())
        throw InputError("deduce.rule_order", "rule order must be a permutation of the rules");
    Engine engine(db);
    bool changed = true;
    size_t guard = 0;
    while (changed) {
        changed = false;
        for (size_t idx : rule_order)
            changed |= (engine.*rule_table()[idx])();
        if (++guard > 10000)
            throw std::logic_error("propagation failed to reach a fixed point");
    }
    return std::move(engine.res);
}

PropagationResult propagate(const FactDatabase& db)
{
    std::vector<size_t> order(rule_count());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    return propagate(db, order);
}

std::vector<TraceStep> explain(const PropagationResult& result, const std::string& entity,
                               Quantity quantity)
{
    const BoundInterval& b = result.interval(entity, quantity);
    // last step that set each target bound, chased backwards
    auto last_setting = [&](const BoundRef& ref, size_t before) -> std::optional<size_t> {
        for (size_t i = std::min(before, result.trace.size()); i-- > 0;) {
            const TraceStep& s = result.trace[i];
            if (s.produced.entity == ref.entity && s.produced.quantity == ref.quantity &&
                s.produced.is_lower == ref.is_lower)
                return i;
        }
        return std::nullopt;
    };

    std::vector<bool> keep(result.trace.size(), false);
    std::function<void(size_t)> visit = [&](size_t idx) {
        if (keep[idx])
            return;
        keep[idx] = true;
        for (const auto& dep : result.trace[idx].bound_inputs) {
            auto at = last_setting(dep, idx);
            if (at)
                visit(*at);
        }
    };
    if (b.lower) {
        auto at = last_setting({entity, quantity, true}, result.trace.size());
        if (at)
            visit(*at);
    }
    if (b.upper) {
        auto at = last_setting({entity, quantity, false}, result.trace.size());
        if (at)
            visit(*at);
    }
    std::vector<TraceStep> chain;
    for (size_t i = 0; i < result.trace.size(); ++i)
        if (keep[i])
            chain.push_back(result.trace[i]);
    return chain;
}

std::map<std::string, std::map<Quantity, BoundInterval>> replay(const FactDatabase& db,
                                                                const std::vector<TraceStep>& trace)
{
    db.validate();
    std::map<std::string, std::map<Quantity, BoundInterval>> out;
    for (const auto& e : db.entities) {
        out[e.id][Quantity::rdim] = {};
        out[e.id][Quantity::lef_w] = {};
        out[e.id][Quantity::intersection] = {};
    }
    for (const auto& s : trace) {
        BoundInterval& b = out[s.produced.entity][s.produced.quantity];
        if (s.produced.is_lower) {
            if (!b.lower || *b.lower < s.value)
                b.lower = s.value;
        } else {
            if (!b.upper || *b.upper > s.value)
                b.upper = s.value;
        }
    }
    return out;
}

FactDatabase ship_catalog()
{
    FactDatabase db;
    auto liouville = [&](const std::string& id) { db.entities.push_back({id, EntityKind::liouville, {}}); };
    auto variety = [&](const std::string& id, long dim) {
        db.entities.push_back({id, EntityKind::variety, dim});
    };
    auto fact = [&](Fact f) { db.facts.push_back(std::move(f)); };
    auto flag = [&](FactKind k, const std::string& subject) {
        Fact f;
        f.kind = k;
        f.subject = subject;
        db.facts.push_back(std::move(f));
    };
    auto valued = [&](FactKind k, const std::string& subject, long v) {
        Fact f;
        f.kind = k;
        f.subject = subject;
        f.value = v;
        db.facts.push_back(std::move(f));
    };

    // cotangent bundles of spheres: rdim = 1, Lef_w = 2, intersections >= 2
    for (const std::string& id : {std::string("T*S2"), std::string("T*S3")}) {
        liouville(id);
        valued(FactKind::krull_lower, id, 1);
        valued(FactKind::lef_crit_count, id, 2);
        flag(FactKind::nonzero_category, id);
        flag(FactKind::generalized_cocores, id);
    }

    // cotangent bundles of tori: rdim >= n with a polarized upper bound
    for (long n = 1; n <= 4; ++n) {
        std::string id = "T*T" + std::to_string(n);
        liouville(id);
        valued(FactKind::krull_lower, id, n);
        valued(FactKind::polarized_weinstein_dim, id, n);
        flag(FactKind::nonzero_category, id);
        flag(FactKind::generalized_cocores, id);
    }

    // the exotic cotangent structure on the 3-sphere: contains a Lagrangian
    // torus, so T*T3 embeds; polarized of half-dimension 3
    liouville("exoticT*S3");
    {
        Fact f;
        f.kind = FactKind::embedding;
        f.inner = "T*T3";
        f.outer = "exoticT*S3";
        fact(f);
    }
    valued(FactKind::polarized_weinstein_dim, "exoticT*S3", 3);
    flag(FactKind::nonzero_category, "exoticT*S3");

    // compact Lie groups through their rank
    for (const auto& [id, rank] : std::vector<std::pair<std::string, long>>{
             {"T*SU3", 2}, {"T*Sp2", 2}, {"T*G2", 2}, {"T*Spin7", 3}}) {
        liouville(id);
        valued(FactKind::krull_lower, id, rank);
        flag(FactKind::nonzero_category, id);
        flag(FactKind::generalized_cocores, id);
    }

    // a flexible Weinstein manifold: the category vanishes
    liouville("flexible");
    {
        Fact f;
        f.kind = FactKind::rdim_bound;
        f.subject = "flexible";
        f.lower = 0;
        f.upper = 0;
        fact(f);
    }

    // mirror entries: the mirror of the 3-dimensional pair of pants is the
    // coordinate cross in C^4; Keating's log Calabi-Yau surfaces are mirror
    // to Milnor fibers
    liouville("pair_of_pants_3");
    valued(FactKind::polarized_weinstein_dim, "pair_of_pants_3", 3);
    flag(FactKind::nonzero_category, "pair_of_pants_3");
    variety("coordinate_cross_4", 3);
    {
        Fact f;
        f.kind = FactKind::mirror_equivalence;
        f.variety = "coordinate_cross_4";
        f.pair = "pair_of_pants_3";
        fact(f);
    }

    liouville("milnor_Tpqr");
    valued(FactKind::polarized_weinstein_dim, "milnor_Tpqr", 2);
    flag(FactKind::nonzero_category, "milnor_Tpqr");
    variety("keating_Ypqr", 2);
    {
        Fact f;
        f.kind = FactKind::mirror_equivalence;
        f.variety = "keating_Ypqr";
        f.pair = "milnor_Tpqr";
        fact(f);
    }

    return db;
}

} // namespace rdim
