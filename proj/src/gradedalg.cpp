#include "rdim/gradedalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "rdim/errors.hpp"
#include "rdim/parser.hpp"

namespace rdim {

namespace {

std::vector<std::string> generator_names(const std::vector<GradedGenerator>& gens)
{
    std::vector<std::string> names;
    names.reserve(gens.size());
    for (const auto& g : gens)
        names.push_back(g.name);
    return names;
}

} // namespace

GradedPresentation::GradedPresentation(GradingMode mode, std::vector<GradedGenerator> generators,
                                       std::vector<Polynomial> relations)
    : mode_(mode), gens_(std::move(generators)), relations_(std::move(relations)),
      ring_(make_ring(generator_names(gens_)))
{
    for (const auto& g : gens_) {
        bool odd_degree = ((g.degree % 2) + 2) % 2 == 1;
        if (mode_ == GradingMode::integer && odd_degree != (g.parity == Parity::odd))
            throw InputError("graded.parity",
                             "generator '" + g.name + "': parity must match degree mod 2");
    }
    for (auto& r : relations_) {
        if (!same_ring(r.ring(), ring_)) {
            // accept relations parsed over a ring with the same variable list
            throw InputError("graded.relation_ring", "relation over a foreign generator set");
        }
        r = normalize_raw(r);
    }
    relations_.erase(std::remove_if(relations_.begin(), relations_.end(),
                                    [](const Polynomial& p) { return p.is_zero(); }),
                     relations_.end());
    split_reducers();
}

long GradedPresentation::monomial_degree(const Monomial& m) const
{
    long d = 0;
    for (size_t i = 0; i < gens_.size(); ++i)
        d += static_cast<long>(m.exponent(i)) * gens_[i].degree;
    return d;
}

namespace {

// Koszul reordering sign of concatenating two declaration-ordered odd sets.
int koszul_sign(const std::vector<size_t>& left_odds, const std::vector<size_t>& right_odds)
{
    size_t inversions = 0;
    for (size_t i : left_odds)
        for (size_t j : right_odds)
            if (i > j)
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

Polynomial GradedPresentation::normalize(const Polynomial& expr) const
{
    Polynomial p = normalize_raw(expr);
    // reduce even content modulo the even relations, treating odd-monomial
    // cofactors as module positions; odd-linear relations reduce matching
    // odd monomials directly
    bool changed = true;
    while (changed && !p.is_zero()) {
        changed = false;
        for (const auto& red : even_reducers_) {
            MonomialOrder ord = MonomialOrder::degrevlex();
            const Term& lt = red.leading_term(ord);
            for (const auto& t : p.terms()) {
                if (lt.mon.divides(t.mon)) {
                    Monomial q = lt.mon.divide_into(t.mon);
                    p = p - red.times_monomial(q, t.coeff / lt.coeff);
                    p = normalize_raw(p);
                    changed = true;
                    break;
                }
            }
            if (changed)
                break;
        }
        if (changed)
            continue;
        for (const auto& red : odd_linear_reducers_) {
            MonomialOrder ord = MonomialOrder::degrevlex();
            const Term& lt = red.leading_term(ord);
            for (const auto& t : p.terms()) {
                if (lt.mon.divides(t.mon)) {
                    Monomial q = lt.mon.divide_into(t.mon);
                    // q must be even for naive division to respect signs
                    bool q_even = true;
                    for (size_t i = 0; i < gens_.size(); ++i)
                        if (q.exponent(i) != 0 && gens_[i].parity == Parity::odd)
                            q_even = false;
                    if (!q_even)
                        continue;
                    p = p - red.times_monomial(q, t.coeff / lt.coeff);
                    p = normalize_raw(p);
                    changed = true;
                    break;
                }
            }
            if (changed)
                break;
        }
    }
    return p;
}

Polynomial GradedPresentation::normalize_raw(const Polynomial& expr) const
{
    // odd generators square to zero
    std::vector<Term> keep;
    for (const auto& t : expr.terms()) {
        bool dead = false;
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].parity == Parity::odd && t.mon.exponent(i) >= 2) {
                dead = true;
                break;
            }
        if (!dead)
            keep.push_back(t);
    }
    return Polynomial::from_terms(ring_, std::move(keep));
}

Polynomial GradedPresentation::multiply(const Polynomial& a, const Polynomial& b) const
{
    std::vector<Term> acc;
    for (const auto& s : a.terms()) {
        std::vector<size_t> s_odds;
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].parity == Parity::odd && s.mon.exponent(i) > 0)
                s_odds.push_back(i);
        for (const auto& t : b.terms()) {
            std::vector<size_t> t_odds;
            for (size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i].parity == Parity::odd && t.mon.exponent(i) > 0)
                    t_odds.push_back(i);
            int sign = koszul_sign(s_odds, t_odds);
            acc.push_back({s.mon * t.mon, s.coeff * t.coeff * sign});
        }
    }
    return normalize(Polynomial::from_terms(ring_, std::move(acc)));
}

std::optional<long> GradedPresentation::degree_of(const Polynomial& expr) const
{
    Polynomial p = normalize_raw(expr);
    if (p.is_zero())
        return std::nullopt;
    long deg = monomial_degree(p.terms().front().mon);
    for (const auto& t : p.terms()) {
        long d = monomial_degree(t.mon);
        bool same = mode_ == GradingMode::integer ? d == deg
                                                  : ((d - deg) % 2 == 0);
        if (!same)
            throw InputError("graded.inhomogeneous", "element is not homogeneous");
    }
    return deg;
}

void GradedPresentation::split_reducers()
{
    even_reducers_.clear();
    odd_linear_reducers_.clear();
    for (const auto& r : relations_) {
        if (r.is_zero())
            continue;
        bool purely_even = true;
        for (const auto& t : r.terms())
            for (size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i].parity == Parity::odd && t.mon.exponent(i) > 0)
                    purely_even = false;
        if (purely_even) {
            even_reducers_.push_back(r);
            continue;
        }
        // usable directly when every term carries the same odd monomial part
        odd_linear_reducers_.push_back(r);
    }
    if (!even_reducers_.empty()) {
        GroebnerBasis gb = buchberger(even_reducers_, MonomialOrder::degrevlex());
        even_reducers_ = gb.generators;
    }
}

GradedPresentation kunneth_tensor(const GradedPresentation& a, const GradedPresentation& b)
{
    if (a.mode() != b.mode())
        throw InputError("graded.mode_mismatch", "tensor factors use different grading modes");

    // the tensor with the trivial algebra keeps names unchanged
    if (b.generators().empty()) {
        if (!b.relations().empty())
            throw InputError("graded.trivial", "ground field with relations");
        return a;
    }
    if (a.generators().empty())
        return b;

    std::vector<GradedGenerator> gens;
    for (const auto& g : a.generators())
        gens.push_back({g.name + "_1", g.degree, g.parity});
    for (const auto& g : b.generators())
        gens.push_back({g.name + "_2", g.degree, g.parity});
    RingPtr ring = make_ring(generator_names(gens));

    auto relift = [&](const Polynomial& p, size_t offset, size_t src_n) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<uint32_t> e(gens.size(), 0);
            for (size_t i = 0; i < src_n; ++i)
                e[offset + i] = t.mon.exponent(i);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(ring, std::move(ts));
    };

    std::vector<Polynomial> relations;
    for (const auto& r : a.relations())
        relations.push_back(relift(r, 0, a.generators().size()));
    for (const auto& r : b.relations())
        relations.push_back(relift(r, a.generators().size(), b.generators().size()));
    return GradedPresentation(a.mode(), std::move(gens), std::move(relations));
}

AlgebraMorphism::AlgebraMorphism(GradedPresentation source, GradedPresentation target,
                                 std::map<std::string, Polynomial> images)
    : source_(std::move(source)), target_(std::move(target))
{
    for (const auto& g : source_.generators()) {
        auto it = images.find(g.name);
        if (it == images.end())
            throw InputError("morphism.missing_image", "no image for generator '" + g.name + "'");
        Polynomial img = target_.normalize(it->second);
        auto deg = target_.degree_of(img);
        if (deg) {
            bool degree_ok = source_.mode() == GradingMode::integer
                                 ? *deg == g.degree
                                 : ((*deg - g.degree) % 2 == 0);
            if (!degree_ok)
                throw InputError("morphism.degree",
                                 "image of '" + g.name + "' has the wrong degree");
        }
        images_.push_back(std::move(img));
    }

    // relations (and implicit odd squares) must die in the target
    for (const auto& rel : source_.relations()) {
        if (!target_.is_zero_element(apply(rel)))
            throw InputError("morphism.relation", "a relation does not map to zero");
    }
    for (size_t i = 0; i < source_.generators().size(); ++i) {
        if (source_.generators()[i].parity != Parity::odd)
            continue;
        Polynomial sq = target_.multiply(images_[i], images_[i]);
        if (!target_.is_zero_element(sq))
            throw InputError("morphism.odd_square",
                             "odd generator image fails to square to zero");
    }
}

Polynomial AlgebraMorphism::apply(const Polynomial& source_expr) const
{
    Polynomial acc = Polynomial::zero(target_.expr_ring());
    for (const auto& t : source_expr.terms()) {
        Polynomial m = Polynomial::constant(target_.expr_ring(), t.coeff);
        for (size_t i = 0; i < source_.generators().size(); ++i)
            for (uint32_t e = 0; e < t.mon.exponent(i); ++e)
                m = target_.multiply(m, images_[i]);
        acc = acc + m;
    }
    return target_.normalize(acc);
}

FPModule flatten_to_module(const SubringModuleProblem& problem)
{
    const size_t rank = problem.module_generators.size();
    if (rank == 0)
        throw InputError("problem.no_generators", "module needs at least one generator");
    const RingPtr& ring = problem.subring.ring();

    std::vector<FreeModuleVector> relations;
    for (size_t vi = 0; vi < ring->nvars(); ++vi) {
        const std::string& vname = ring->variables[vi];
        auto it = problem.action.find(vname);
        if (it == problem.action.end())
            continue; // variable acts as scalar multiplication (free action)
        const auto& matrix = it->second;
        if (matrix.size() != rank)
            throw InputError("problem.action_shape", "action matrix for '" + vname +
                                                         "' has the wrong number of rows");
        for (const auto& row : matrix)
            if (row.size() != rank)
                throw InputError("problem.action_shape", "action matrix for '" + vname +
                                                             "' has the wrong number of columns");
        Polynomial v = Polynomial::variable(ring, vi);
        for (size_t j = 0; j < rank; ++j) {
            FreeModuleVector col = zero_vector(ring, rank);
            col.components[j] = v;
            for (size_t i = 0; i < rank; ++i)
                col.components[i] = col.components[i] - matrix[i][j];
            if (!col.is_zero())
                relations.push_back(std::move(col));
        }
    }
    return FPModule(problem.subring, rank, std::move(relations));
}

LowerBoundCertificate lower_bound_from_generator(const SubringModuleProblem& problem,
                                                 size_t regseq_budget)
{
    FPModule M = flatten_to_module(problem);
    DimensionReport dim = module_dim(M);
    if (dim.zero)
        throw InputError("vanishing category", "the endomorphism module is zero");
    LowerBoundCertificate cert;
    cert.bound = dim.dimension;
    cert.dimension = dim;
    if (dim.dimension > 0) {
        RegSeqSearchResult search = find_regular_sequence(M, dim.dimension, regseq_budget);
        if (search.certificate)
            cert.regular_sequence = std::move(search.certificate);
    }
    return cert;
}

size_t lie_group_rank(LieFamily family, size_t n)
{
    switch (family) {
    case LieFamily::Sp:
        if (n < 1)
            throw InputError("preset.lie_rank", "Sp(n) needs n >= 1");
        return n;
    case LieFamily::SU:
        if (n < 2)
            throw InputError("preset.lie_rank", "SU(n) needs n >= 2");
        return n - 1;
    case LieFamily::Spin:
        if (n < 3)
            throw InputError("preset.lie_rank", "Spin(n) needs n >= 3");
        return n / 2;
    case LieFamily::G2:
        return 2;
    case LieFamily::F4:
        return 4;
    case LieFamily::E6:
        return 6;
    case LieFamily::E7:
        return 7;
    case LieFamily::E8:
        return 8;
    }
    throw InputError("preset.lie_family", "unknown family");
}

namespace {

std::vector<std::string> indexed_names(const std::string& stem, size_t count)
{
    std::vector<std::string> names;
    for (size_t i = 1; i <= count; ++i)
        names.push_back(stem + std::to_string(i));
    return names;
}

SubringModuleProblem free_rank_problem(RingPresentation subring, size_t rank,
                                       std::vector<std::string> gen_names, std::string desc)
{
    SubringModuleProblem p;
    p.subring = std::move(subring);
    p.module_generators = std::move(gen_names);
    (void)rank;
    p.description = std::move(desc);
    return p;
}

} // namespace

SubringModuleProblem preset_odd_sphere(size_t n)
{
    if (n < 3 || n % 2 == 0)
        throw InputError("preset.odd_sphere", "odd_sphere requires odd n >= 3");
    RingPtr R = make_ring({"x"});
    return free_rank_problem(RingPresentation::polynomial_ring(R), 1, {"1"},
                             "loop homology of an odd sphere; x acts freely");
}

SubringModuleProblem preset_even_sphere(size_t n)
{
    if (n < 2 || n % 2 == 1)
        throw InputError("preset.even_sphere", "even_sphere requires even n >= 2");
    RingPtr R = make_ring({"x"});
    return free_rank_problem(RingPresentation::polynomial_ring(R), 2, {"1", "v"},
                             "loop homology of an even sphere; x acts by v^2");
}

SubringModuleProblem preset_torus(size_t n)
{
    if (n < 1)
        throw InputError("preset.torus", "torus requires n >= 1");
    std::vector<std::string> names = indexed_names("x", n);
    std::vector<std::string> tnames = indexed_names("t", n);
    names.insert(names.end(), tnames.begin(), tnames.end());
    RingPtr R = make_ring(names);
    std::vector<Polynomial> rels;
    for (size_t i = 0; i < n; ++i)
        rels.push_back(Polynomial::variable(R, i) * Polynomial::variable(R, n + i) -
                       Polynomial::constant(R, 1));
    return free_rank_problem(RingPresentation(R, std::move(rels)), 1, {"1"},
                             "degree-zero symplectic cohomology of the n-torus cotangent "
                             "bundle, Laurent ring by auxiliary inverses");
}

SubringModuleProblem preset_lie_group(LieFamily family, size_t n)
{
    size_t rank = lie_group_rank(family, n);
    RingPtr R = make_ring(indexed_names("x", rank));
    return free_rank_problem(RingPresentation::polynomial_ring(R), 1, {"1"},
                             "rationally a product of rank-many odd spheres");
}

SubringModuleProblem preset_cp(size_t n)
{
    if (n < 1)
        throw InputError("preset.cp", "cp requires n >= 1");
    RingPtr R = make_ring({"y"});
    return free_rank_problem(RingPresentation::polynomial_ring(R), 2, {"1", "s"},
                             "based loops of complex projective space split off a circle");
}

SubringModuleProblem preset_product(const std::vector<SubringModuleProblem>& factors)
{
    if (factors.empty())
        throw InputError("preset.product", "product needs at least one factor");
    SubringModuleProblem acc = factors[0];
    for (size_t fi = 1; fi < factors.size(); ++fi) {
        const SubringModuleProblem& b = factors[fi];
        // ring tensor: disjoint variables, suffixed deterministically
        std::vector<std::string> names;
        for (const auto& v : acc.subring.ring()->variables)
            names.push_back(v + "_1");
        for (const auto& v : b.subring.ring()->variables)
            names.push_back(v + "_2");
        RingPtr R = make_ring(names);
        size_t na = acc.subring.ring()->nvars();
        size_t nb = b.subring.ring()->nvars();

        auto relift = [&](const Polynomial& p, size_t offset, size_t src_n) {
            std::vector<Term> ts;
            for (const auto& t : p.terms()) {
                std::vector<uint32_t> e(na + nb, 0);
                for (size_t i = 0; i < src_n; ++i)
                    e[offset + i] = t.mon.exponent(i);
                ts.push_back({Monomial(std::move(e)), t.coeff});
            }
            return Polynomial::from_terms(R, std::move(ts));
        };

        std::vector<Polynomial> rels;
        for (const auto& r : acc.subring.relations())
            rels.push_back(relift(r, 0, na));
        for (const auto& r : b.subring.relations())
            rels.push_back(relift(r, na, nb));
        RingPresentation ring(R, std::move(rels));

        // module tensor: generators are pairs, actions are Kronecker blocks
        std::vector<std::string> gens;
        for (const auto& ga : acc.module_generators)
            for (const auto& gb : b.module_generators)
                gens.push_back(ga + "*" + gb);
        size_t ra = acc.module_generators.size();
        size_t rb = b.module_generators.size();

        std::map<std::string, std::vector<std::vector<Polynomial>>> action;
        auto kron_index = [&](size_t i, size_t j) { return i * rb + j; };
        for (const auto& [vname, mat] : acc.action) {
            std::vector<std::vector<Polynomial>> big(
                ra * rb, std::vector<Polynomial>(ra * rb, Polynomial::zero(R)));
            for (size_t i = 0; i < ra; ++i)
                for (size_t j = 0; j < ra; ++j) {
                    Polynomial lifted = relift(mat[i][j], 0, na);
                    for (size_t k = 0; k < rb; ++k)
                        big[kron_index(i, k)][kron_index(j, k)] = lifted;
                }
            action[vname + "_1"] = std::move(big);
        }
        for (const auto& [vname, mat] : b.action) {
            std::vector<std::vector<Polynomial>> big(
                ra * rb, std::vector<Polynomial>(ra * rb, Polynomial::zero(R)));
            for (size_t i = 0; i < rb; ++i)
                for (size_t j = 0; j < rb; ++j) {
                    Polynomial lifted = relift(mat[i][j], na, nb);
                    for (size_t k = 0; k < ra; ++k)
                        big[kron_index(k, i)][kron_index(k, j)] = lifted;
                }
            action[vname + "_2"] = std::move(big);
        }

        SubringModuleProblem out;
        out.subring = std::move(ring);
        out.module_generators = std::move(gens);
        out.action = std::move(action);
        out.description = acc.description + " x " + b.description;
        acc = std::move(out);
    }
    return acc;
}

namespace {

size_t require_n(const std::map<std::string, std::string>& params)
{
    auto it = params.find("n");
    if (it == params.end())
        throw InputError("preset.params", "missing parameter n");
    long v = std::stol(it->second);
    if (v < 0)
        throw InputError("preset.params", "n must be non-negative");
    return static_cast<size_t>(v);
}

} // namespace

SubringModuleProblem preset_by_name(const std::string& name,
                                    const std::map<std::string, std::string>& params)
{
    if (name == "odd_sphere")
        return preset_odd_sphere(require_n(params));
    if (name == "even_sphere")
        return preset_even_sphere(require_n(params));
    if (name == "torus")
        return preset_torus(require_n(params));
    if (name == "cp")
        return preset_cp(require_n(params));
    if (name == "lie_group") {
        auto fam = params.find("family");
        if (fam == params.end())
            throw InputError("preset.params", "lie_group needs family=Sp|SU|Spin|G2|F4|E6|E7|E8");
        const std::string& f = fam->second;
        size_t n = params.count("n") ? require_n(params) : 0;
        if (f == "Sp")
            return preset_lie_group(LieFamily::Sp, n);
        if (f == "SU")
            return preset_lie_group(LieFamily::SU, n);
        if (f == "Spin")
            return preset_lie_group(LieFamily::Spin, n);
        if (f == "G2")
            return preset_lie_group(LieFamily::G2, 0);
        if (f == "F4")
            return preset_lie_group(LieFamily::F4, 0);
        if (f == "E6")
            return preset_lie_group(LieFamily::E6, 0);
        if (f == "E7")
            return preset_lie_group(LieFamily::E7, 0);
        if (f == "E8")
            return preset_lie_group(LieFamily::E8, 0);
        throw InputError("preset.params", "unknown Lie family '" + f + "'");
    }
    if (name == "sphere") {
        size_t n = require_n(params);
        return n % 2 == 0 ? preset_even_sphere(n) : preset_odd_sphere(n);
    }
    if (name == "product") {
        // factors like "odd_sphere:3,torus:2,lie_group:SU:4"
        auto it = params.find("factors");
        if (it == params.end())
            throw InputError("preset.params", "product needs factors=name:param,...");
        std::vector<SubringModuleProblem> factors;
        std::stringstream list(it->second);
        std::string item;
        while (std::getline(list, item, ',')) {
            std::stringstream fspec(item);
            std::string fname, p1, p2;
            std::getline(fspec, fname, ':');
            std::getline(fspec, p1, ':');
            std::getline(fspec, p2, ':');
            std::map<std::string, std::string> fparams;
            if (fname == "lie_group") {
                fparams["family"] = p1;
                if (!p2.empty())
                    fparams["n"] = p2;
            } else if (!p1.empty()) {
                fparams["n"] = p1;
            }
            factors.push_back(preset_by_name(fname, fparams));
        }
        return preset_product(factors);
    }
    throw InputError("preset.unknown", "unknown preset '" + name + "'");
}

} // namespace rdim
