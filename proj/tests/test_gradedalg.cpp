#include "doctest.h"

#include "rdim/errors.hpp"
#include "rdim/gradedalg.hpp"
#include "rdim/parser.hpp"

using namespace rdim;

namespace {

GradedPresentation odd_loop_algebra(long n)
{
    // Λu ⊗ Q[v] with |u| = -n, |v| = n-1 (n odd)
    return GradedPresentation(GradingMode::integer,
                              {{"u", -n, Parity::odd}, {"v", n - 1, Parity::even}}, {});
}

} // namespace

TEST_CASE("graded presentations: odd squares vanish, parity is enforced")
{
    GradedPresentation A = odd_loop_algebra(3);
    Polynomial u2 = parse_polynomial("u^2", A.expr_ring());
    CHECK(A.is_zero_element(u2));
    Polynomial uv = parse_polynomial("u*v", A.expr_ring());
    CHECK(!A.is_zero_element(uv));
    CHECK(A.degree_of(uv).value() == -1);

    CHECK_THROWS_AS(GradedPresentation(GradingMode::integer,
                                       {{"w", 2, Parity::odd}}, {}),
                    InputError);
}

TEST_CASE("graded multiplication carries Koszul signs")
{
    GradedPresentation A(GradingMode::integer,
                         {{"a", 1, Parity::odd}, {"b", 1, Parity::odd}}, {});
    Polynomial a = parse_polynomial("a", A.expr_ring());
    Polynomial b = parse_polynomial("b", A.expr_ring());
    Polynomial ab = A.multiply(a, b);
    Polynomial ba = A.multiply(b, a);
    CHECK(ab == -ba);
    CHECK(A.multiply(a, a).is_zero());
}

TEST_CASE("kunneth tensor: worked examples")
{
    // A ⊗ k = A
    GradedPresentation A = odd_loop_algebra(3);
    GradedPresentation k = GradedPresentation::ground_field();
    GradedPresentation Ak = kunneth_tensor(A, k);
    CHECK(Ak.generators().size() == 2);
    CHECK(Ak.generators()[0].name == "u");

    // Q[v1] ⊗ Q[v2] = Q[v1, v2]
    GradedPresentation P1(GradingMode::integer, {{"v", 2, Parity::even}}, {});
    GradedPresentation P2(GradingMode::integer, {{"v", 4, Parity::even}}, {});
    GradedPresentation T = kunneth_tensor(P1, P2);
    REQUIRE(T.generators().size() == 2);
    CHECK(T.generators()[0].name == "v_1");
    CHECK(T.generators()[1].name == "v_2");
    CHECK(T.relations().empty());

    // two odd spheres: Λ(u1,u2) ⊗ Q[v1,v2]
    GradedPresentation O = kunneth_tensor(odd_loop_algebra(3), odd_loop_algebra(5));
    REQUIRE(O.generators().size() == 4);
    size_t odd_count = 0;
    for (const auto& g : O.generators())
        if (g.parity == Parity::odd)
            ++odd_count;
    CHECK(odd_count == 2);
    Polynomial u1u2 = parse_polynomial("u_1*u_2", O.expr_ring());
    CHECK(!O.is_zero_element(u1u2));
    CHECK(O.is_zero_element(parse_polynomial("u_1^2", O.expr_ring())));
}

TEST_CASE("morphism validation accepts the loop-space intersection maps")
{
    // odd sphere: Λu ⊗ Q[v] -> Q[v], u -> 0, v -> v
    GradedPresentation src = odd_loop_algebra(3);
    GradedPresentation tgt(GradingMode::integer, {{"v", 2, Parity::even}}, {});
    std::map<std::string, Polynomial> images = {
        {"u", Polynomial::zero(tgt.expr_ring())},
        {"v", parse_polynomial("v", tgt.expr_ring())},
    };
    AlgebraMorphism I(src, tgt, images);
    CHECK(I.apply(parse_polynomial("u*v + v", src.expr_ring())) ==
          parse_polynomial("v", tgt.expr_ring()));

    // even sphere source: Λb ⊗ Q[a,c]/(2ac, a^2, ab), |a|=-n, |b|=-1, |c|=2n-2
    long n = 2;
    GradedPresentation even_src(
        GradingMode::integer,
        {{"b", -1, Parity::odd}, {"a", -n, Parity::even}, {"c", 2 * n - 2, Parity::even}},
        {});
    RingPtr er = even_src.expr_ring();
    GradedPresentation even_src_rel(
        GradingMode::integer,
        {{"b", -1, Parity::odd}, {"a", -n, Parity::even}, {"c", 2 * n - 2, Parity::even}},
        {parse_polynomial("2*a*c", er), parse_polynomial("a^2", er),
         parse_polynomial("a*b", er)});
    CHECK(even_src_rel.is_zero_element(parse_polynomial("a*c", er)));
    CHECK(even_src_rel.is_zero_element(parse_polynomial("a^2*c", er)));
    CHECK(!even_src_rel.is_zero_element(parse_polynomial("c^3", er)));

    // target T(v) in its graded-commutative normal form Λv ⊗ Q[w], w = v^2
    GradedPresentation even_tgt(GradingMode::integer,
                                {{"v", n - 1, Parity::odd}, {"w", 2 * n - 2, Parity::even}}, {});
    std::map<std::string, Polynomial> ev_images = {
        {"b", Polynomial::zero(even_tgt.expr_ring())},
        {"a", Polynomial::zero(even_tgt.expr_ring())},
        {"c", parse_polynomial("w", even_tgt.expr_ring())},
    };
    AlgebraMorphism I2(even_src_rel, even_tgt, ev_images);
    CHECK(I2.apply(parse_polynomial("c^2", er)) ==
          parse_polynomial("w^2", even_tgt.expr_ring()));

    // a degree-violating image is rejected
    std::map<std::string, Polynomial> bad = ev_images;
    bad["c"] = parse_polynomial("v", even_tgt.expr_ring());
    CHECK_THROWS_AS(AlgebraMorphism(even_src_rel, even_tgt, bad), InputError);

    // an image that fails to kill a relation is rejected
    GradedPresentation quot(GradingMode::integer, {{"z", 2, Parity::even}},
                            {parse_polynomial("z^2", make_ring({"z"}))});
    std::map<std::string, Polynomial> surv = {
        {"z", parse_polynomial("z", quot.expr_ring())}};
    GradedPresentation free_tgt(GradingMode::integer, {{"z", 2, Parity::even}}, {});
    std::map<std::string, Polynomial> no_kill = {
        {"z", parse_polynomial("z", free_tgt.expr_ring())}};
    CHECK_THROWS_AS(AlgebraMorphism(quot, free_tgt, no_kill), InputError);
}

TEST_CASE("flatten: worked examples")
{
    // free rank-1 action
    SubringModuleProblem odd = preset_odd_sphere(3);
    FPModule M1 = flatten_to_module(odd);
    CHECK(M1.free_rank() == 1);
    CHECK(M1.relations().empty());

    SubringModuleProblem even = preset_even_sphere(2);
    FPModule M2 = flatten_to_module(even);
    CHECK(M2.free_rank() == 2);
    CHECK(M2.relations().empty());

    // an explicit non-free action: R = Q[x], generator pair with x acting by
    // the nilpotent matrix [[0,0],[1,0]] plus x annihilating the second slot
    RingPtr R = make_ring({"x"});
    SubringModuleProblem p;
    p.subring = RingPresentation::polynomial_ring(R);
    p.module_generators = {"g1", "g2"};
    p.action["x"] = {{Polynomial::zero(R), Polynomial::zero(R)},
                     {Polynomial::constant(R, 1), Polynomial::zero(R)}};
    FPModule M3 = flatten_to_module(p);
    CHECK(M3.free_rank() == 2);
    CHECK(M3.relations().size() == 2);
    // x^2 kills everything, so the module is 0-dimensional
    CHECK(module_dim(M3).dimension == 0);
}

TEST_CASE("lower bound pipeline: geometric presets")
{
    CHECK(lower_bound_from_generator(preset_torus(1)).bound == 1);
    CHECK(lower_bound_from_generator(preset_torus(3)).bound == 3);
    CHECK(lower_bound_from_generator(preset_odd_sphere(3)).bound == 1);
    CHECK(lower_bound_from_generator(preset_even_sphere(2)).bound == 1);
    CHECK(lower_bound_from_generator(preset_cp(2)).bound == 1);
    CHECK(lower_bound_from_generator(preset_lie_group(LieFamily::G2, 0)).bound == 2);

    SubringModuleProblem prod = preset_product({preset_odd_sphere(3), preset_even_sphere(2)});
    CHECK(lower_bound_from_generator(prod).bound == 2);

    // R = Q (no variables), M = Q: dimension 0
    SubringModuleProblem field;
    field.subring = RingPresentation::polynomial_ring(make_ring({}));
    field.module_generators = {"1"};
    CHECK(lower_bound_from_generator(field).bound == 0);
}

TEST_CASE("figure rank table")
{
    CHECK(lie_group_rank(LieFamily::Sp, 3) == 3);
    CHECK(lie_group_rank(LieFamily::SU, 3) == 2);
    CHECK(lie_group_rank(LieFamily::SU, 4) == 3);
    CHECK(lie_group_rank(LieFamily::Spin, 7) == 3);
    CHECK(lie_group_rank(LieFamily::Spin, 8) == 4);
    CHECK(lie_group_rank(LieFamily::G2, 0) == 2);
    CHECK(lie_group_rank(LieFamily::F4, 0) == 4);
    CHECK(lie_group_rank(LieFamily::E6, 0) == 6);
    CHECK(lie_group_rank(LieFamily::E7, 0) == 7);
    CHECK(lie_group_rank(LieFamily::E8, 0) == 8);
}

TEST_CASE("kunneth additivity of the lower bound on preset pairs")
{
    std::vector<SubringModuleProblem> presets = {
        preset_odd_sphere(3), preset_even_sphere(2), preset_torus(1), preset_cp(1)};
    for (const auto& a : presets)
        for (const auto& b : presets) {
            size_t la = lower_bound_from_generator(a).bound;
            size_t lb = lower_bound_from_generator(b).bound;
            size_t lab = lower_bound_from_generator(preset_product({a, b})).bound;
            CHECK(lab == la + lb);
        }
}

TEST_CASE("preset errors")
{
    CHECK_THROWS_AS(preset_odd_sphere(2), InputError);
    CHECK_THROWS_AS(preset_odd_sphere(1), InputError);
    CHECK_THROWS_AS(preset_even_sphere(3), InputError);
    CHECK_THROWS_AS(preset_by_name("klein_bottle", {}), InputError);
    CHECK_THROWS_AS(preset_by_name("torus", {}), InputError);
}
