#include "doctest.h"

#include <algorithm>
#include <random>

#include "rdim/deduce.hpp"
#include "rdim/errors.hpp"

using namespace rdim;

namespace {

FactDatabase exotic_db()
{
    FactDatabase db;
    db.entities = {{"T*S3", EntityKind::liouville, {}},
                   {"exoticT*S3", EntityKind::liouville, {}},
                   {"T*T3", EntityKind::liouville, {}}};
    Fact lef;
    lef.kind = FactKind::lef_crit_count;
    lef.subject = "T*S3";
    lef.value = 2;
    Fact nz;
    nz.kind = FactKind::nonzero_category;
    nz.subject = "T*S3";
    Fact nz2;
    nz2.kind = FactKind::nonzero_category;
    nz2.subject = "exoticT*S3";
    Fact emb;
    emb.kind = FactKind::embedding;
    emb.inner = "T*T3";
    emb.outer = "exoticT*S3";
    Fact pol;
    pol.kind = FactKind::polarized_weinstein_dim;
    pol.subject = "exoticT*S3";
    pol.value = 3;
    Fact krull;
    krull.kind = FactKind::krull_lower;
    krull.subject = "T*T3";
    krull.value = 3;
    db.facts = {lef, nz, nz2, emb, pol, krull};
    return db;
}

} // namespace

TEST_CASE("propagation: the exotic cotangent example")
{
    PropagationResult r = propagate(exotic_db());

    // rdim(T*S3): upper 1 from the fibration, no lower input here
    CHECK(r.interval("T*S3", Quantity::rdim).upper == 1);
    CHECK(!r.interval("T*S3", Quantity::rdim).lower.has_value());

    // rdim(exotic) = [3,3]
    CHECK(r.interval("exoticT*S3", Quantity::rdim).lower == 3);
    CHECK(r.interval("exoticT*S3", Quantity::rdim).upper == 3);

    // Lef separation: >= 4 against <= 2
    CHECK(r.interval("exoticT*S3", Quantity::lef_w).lower == 4);
    CHECK(r.interval("T*S3", Quantity::lef_w).upper == 2);
}

TEST_CASE("propagation: torus intersections via central actions")
{
    FactDatabase db;
    db.entities = {{"X", EntityKind::liouville, {}}};
    Fact krull;
    krull.kind = FactKind::krull_lower;
    krull.subject = "X";
    krull.value = 4;
    Fact nz;
    nz.kind = FactKind::nonzero_category;
    nz.subject = "X";
    Fact gc;
    gc.kind = FactKind::generalized_cocores;
    gc.subject = "X";
    db.facts = {krull, nz, gc};
    PropagationResult r = propagate(db);
    CHECK(r.interval("X", Quantity::intersection).lower == 5);
    CHECK(r.interval("X", Quantity::lef_w).lower == 5);
}

TEST_CASE("propagation: the intersection rule refuses to fire without its hypotheses")
{
    FactDatabase db;
    db.entities = {{"X", EntityKind::liouville, {}}};
    Fact krull;
    krull.kind = FactKind::krull_lower;
    krull.subject = "X";
    krull.value = 4;
    Fact nz;
    nz.kind = FactKind::nonzero_category;
    nz.subject = "X";
    db.facts = {krull, nz};
    PropagationResult r = propagate(db);
    CHECK(!r.interval("X", Quantity::intersection).lower.has_value());
}

TEST_CASE("propagation: mirror transfer with the coherent floor")
{
    FactDatabase db;
    db.entities = {{"Y", EntityKind::variety, 3}, {"P", EntityKind::liouville, {}}};
    Fact pol;
    pol.kind = FactKind::polarized_weinstein_dim;
    pol.subject = "P";
    pol.value = 3;
    Fact mir;
    mir.kind = FactKind::mirror_equivalence;
    mir.variety = "Y";
    mir.pair = "P";
    db.facts = {pol, mir};
    PropagationResult r = propagate(db);
    CHECK(r.interval("Y", Quantity::rdim).lower == 3);
    CHECK(r.interval("Y", Quantity::rdim).upper == 3);
    CHECK(r.interval("P", Quantity::rdim).lower == 3);
    CHECK(r.interval("P", Quantity::rdim).upper == 3);
}

TEST_CASE("propagation: proper modules force two intersection points")
{
    FactDatabase db;
    db.entities = {{"X", EntityKind::liouville, {}}};
    Fact pm;
    pm.kind = FactKind::proper_module;
    pm.subject = "X";
    Fact gc;
    gc.kind = FactKind::generalized_cocores;
    gc.subject = "X";
    db.facts = {pm, gc};
    PropagationResult r = propagate(db);
    CHECK(r.interval("X", Quantity::intersection).lower == 2);
}

TEST_CASE("propagation: quotients transfer both directions")
{
    FactDatabase db;
    db.entities = {{"C", EntityKind::category, {}}, {"Q", EntityKind::category, {}}};
    Fact quot;
    quot.kind = FactKind::quotient;
    quot.subject = "Q";
    quot.of = "C";
    quot.by = "thimble collection";
    Fact up;
    up.kind = FactKind::rdim_bound;
    up.subject = "C";
    up.upper = 5;
    Fact low;
    low.kind = FactKind::rdim_bound;
    low.subject = "Q";
    low.lower = 2;
    db.facts = {quot, up, low};
    PropagationResult r = propagate(db);
    CHECK(r.interval("Q", Quantity::rdim).upper == 5);
    CHECK(r.interval("C", Quantity::rdim).lower == 2);
}

TEST_CASE("inconsistency raises with the offending trace")
{
    FactDatabase db;
    db.entities = {{"X", EntityKind::liouville, {}}};
    Fact up;
    up.kind = FactKind::rdim_bound;
    up.subject = "X";
    up.upper = 1;
    Fact low;
    low.kind = FactKind::krull_lower;
    low.subject = "X";
    low.value = 3;
    db.facts = {up, low};
    CHECK_THROWS_AS(propagate(db), InconsistencyError);
}

TEST_CASE("dangling references are input errors")
{
    FactDatabase db;
    db.entities = {{"X", EntityKind::liouville, {}}};
    Fact emb;
    emb.kind = FactKind::embedding;
    emb.inner = "X";
    emb.outer = "nowhere";
    db.facts = {emb};
    CHECK_THROWS_AS(propagate(db), InputError);
}

TEST_CASE("explain: worked examples")
{
    PropagationResult r = propagate(exotic_db());

    // Lef_w(exotic): the chain runs R6 -> R3 -> R1
    auto chain = explain(r, "exoticT*S3", Quantity::lef_w);
    std::vector<std::string> rules;
    for (const auto& s : chain)
        rules.push_back(s.rule);
    REQUIRE(rules.size() >= 3);
    CHECK(std::find(rules.begin(), rules.end(), "R6") != rules.end());
    CHECK(std::find(rules.begin(), rules.end(), "R3") != rules.end());
    CHECK(rules.back() == "R1");
    // R6 fires before R3, R3 before the final R1
    auto pos = [&](const std::string& rule) {
        return std::find(rules.begin(), rules.end(), rule) - rules.begin();
    };
    CHECK(pos("R6") < pos("R3"));

    // rdim(T*S3) upper: a single R1 application
    auto single = explain(r, "T*S3", Quantity::rdim);
    REQUIRE(single.size() == 1);
    CHECK(single[0].rule == "R1");

    // untouched entity: empty chain, empty interval
    FactDatabase db = exotic_db();
    db.entities.push_back({"untouched", EntityKind::liouville, {}});
    PropagationResult r2 = propagate(db);
    CHECK(explain(r2, "untouched", Quantity::rdim).empty());
    CHECK(!r2.interval("untouched", Quantity::rdim).lower.has_value());
    CHECK(!r2.interval("untouched", Quantity::rdim).upper.has_value());
}

TEST_CASE("trace replay reproduces the intervals exactly")
{
    FactDatabase db = ship_catalog();
    PropagationResult r = propagate(db);
    auto replayed = replay(db, r.trace);
    CHECK(replayed == r.intervals);
}

TEST_CASE("propagation is independent of the rule application order")
{
    FactDatabase db = ship_catalog();
    PropagationResult base = propagate(db);
    std::mt19937 rng(321321);
    std::vector<size_t> order(rule_count());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        PropagationResult shuffled = propagate(db, order);
        CHECK(shuffled.intervals == base.intervals);
    }
}

TEST_CASE("catalog reproduces the documented conclusions")
{
    PropagationResult r = propagate(ship_catalog());

    // spheres
    for (const std::string& id : {std::string("T*S2"), std::string("T*S3")}) {
        CHECK(r.interval(id, Quantity::rdim).lower == 1);
        CHECK(r.interval(id, Quantity::rdim).upper == 1);
        CHECK(r.interval(id, Quantity::lef_w).lower == 2);
        CHECK(r.interval(id, Quantity::lef_w).upper == 2);
        CHECK(r.interval(id, Quantity::intersection).lower == 2);
    }

    // tori: intersections >= n+1, rdim pinned for n <= 3
    for (long n = 1; n <= 4; ++n) {
        std::string id = "T*T" + std::to_string(n);
        CHECK(r.interval(id, Quantity::intersection).lower == n + 1);
        CHECK(r.interval(id, Quantity::rdim).lower == n);
        if (n <= 3)
            CHECK(r.interval(id, Quantity::rdim).upper == n);
    }

    // the exotic sphere against the standard one
    CHECK(r.interval("exoticT*S3", Quantity::rdim).lower == 3);
    CHECK(r.interval("exoticT*S3", Quantity::rdim).upper == 3);
    CHECK(r.interval("exoticT*S3", Quantity::lef_w).lower == 4);
    CHECK(r.interval("T*S3", Quantity::lef_w).upper == 2);

    // Lie groups: Lef_w >= rank + 1
    CHECK(r.interval("T*SU3", Quantity::lef_w).lower == 3);
    CHECK(r.interval("T*Spin7", Quantity::lef_w).lower == 4);

    // flexible: rdim = [0,0]
    CHECK(r.interval("flexible", Quantity::rdim).lower == 0);
    CHECK(r.interval("flexible", Quantity::rdim).upper == 0);

    // mirrors of dimension <= 3 land exactly on their dimension
    CHECK(r.interval("coordinate_cross_4", Quantity::rdim).lower == 3);
    CHECK(r.interval("coordinate_cross_4", Quantity::rdim).upper == 3);
    CHECK(r.interval("keating_Ypqr", Quantity::rdim).lower == 2);
    CHECK(r.interval("keating_Ypqr", Quantity::rdim).upper == 2);

    // no catalog entity is inconsistent (propagate would have thrown), and
    // every finite interval is ordered
    for (const auto& [id, qs] : r.intervals)
        for (const auto& [q, b] : qs)
            if (b.lower && b.upper)
                CHECK(*b.lower <= *b.upper);
}
