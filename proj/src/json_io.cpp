#include "rdim/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "rdim/errors.hpp"
#include "rdim/parser.hpp"
#include "rdim/version.hpp"

namespace rdim {

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("io.open", "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("io.json", "cannot parse '" + path + "': " + e.what());
    }
    return j;
}

namespace {

const Json& field(const Json& j, const char* name)
{
    auto it = j.find(name);
    if (it == j.end())
        throw InputError("schema.missing", std::string("missing field '") + name + "'");
    return *it;
}

} // namespace

RingPresentation ring_from_json(const Json& j)
{
    if (j.is_string()) // a path to a ring file
        return ring_from_json(load_json_file(j.get<std::string>()));
    if (!j.is_object())
        throw InputError("schema.ring", "ring must be an object or a file path");
    std::vector<std::string> vars;
    for (const auto& v : field(j, "variables"))
        vars.push_back(v.get<std::string>());
    RingPtr ring = make_ring(vars);
    std::vector<Polynomial> rels;
    if (j.contains("relations"))
        for (const auto& r : j["relations"])
            rels.push_back(parse_polynomial(r.get<std::string>(), ring));
    return RingPresentation(ring, std::move(rels));
}

FPModule module_from_json(const Json& j)
{
    RingPresentation ring = ring_from_json(field(j, "ring"));
    size_t rank = field(j, "free_rank").get<size_t>();
    std::vector<FreeModuleVector> rels;
    if (j.contains("relations")) {
        for (const auto& col : j["relations"]) {
            FreeModuleVector v;
            for (const auto& entry : col)
                v.components.push_back(parse_polynomial(entry.get<std::string>(), ring.ring()));
            rels.push_back(std::move(v));
        }
    }
    return FPModule(std::move(ring), rank, std::move(rels));
}

SubringModuleProblem problem_from_json(const Json& j)
{
    if (j.contains("preset")) {
        std::map<std::string, std::string> params;
        if (j.contains("params"))
            for (const auto& [k, v] : j["params"].items())
                params[k] = v.is_string() ? v.get<std::string>() : v.dump();
        return preset_by_name(j["preset"].get<std::string>(), params);
    }
    SubringModuleProblem p;
    p.subring = ring_from_json(field(j, "subring"));
    const Json& mod = field(j, "module");
    for (const auto& g : field(mod, "generators"))
        p.module_generators.push_back(g.get<std::string>());
    if (mod.contains("action")) {
        for (const auto& [var, matrix] : mod["action"].items()) {
            if (!p.subring.ring()->index_of(var))
                throw InputError("schema.action", "action for unknown variable '" + var + "'");
            std::vector<std::vector<Polynomial>> rows;
            for (const auto& row : matrix) {
                std::vector<Polynomial> r;
                for (const auto& entry : row)
                    r.push_back(parse_polynomial(entry.get<std::string>(), p.subring.ring()));
                rows.push_back(std::move(r));
            }
            p.action[var] = std::move(rows);
        }
    }
    if (j.contains("description"))
        p.description = j["description"].get<std::string>();
    return p;
}

Quiver quiver_from_json(const Json& j)
{
    size_t n = field(j, "vertices").get<size_t>();
    std::vector<std::pair<size_t, size_t>> arrows;
    if (j.contains("arrows"))
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() != 2)
                throw InputError("schema.quiver", "arrows must be [from, to] pairs");
            arrows.push_back({a[0].get<size_t>(), a[1].get<size_t>()});
        }
    return Quiver(n, std::move(arrows));
}

RootedSignedTree tree_from_json(const Json& j)
{
    std::vector<std::pair<size_t, size_t>> edges;
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("schema.tree", "edges must be [a, b] pairs");
            edges.push_back({e[0].get<size_t>(), e[1].get<size_t>()});
        }
    size_t root = field(j, "root").get<size_t>();
    std::map<std::pair<size_t, size_t>, char> signs;
    if (j.contains("signs")) {
        for (const auto& [key, val] : j["signs"].items()) {
            auto dash = key.find('-');
            if (dash == std::string::npos)
                throw InputError("schema.tree", "sign keys look like \"a-b\"");
            size_t a = std::stoul(key.substr(0, dash));
            size_t b = std::stoul(key.substr(dash + 1));
            std::string s = val.get<std::string>();
            if (s != "+" && s != "-")
                throw InputError("schema.tree", "signs are '+' or '-'");
            signs[{a, b}] = s[0];
        }
    }
    return RootedSignedTree(std::move(edges), root, std::move(signs));
}

StratLabeledComplex labeled_complex_from_json(const Json& j, bool close_faces)
{
    size_t n = field(j, "n").get<size_t>();
    size_t vertices = field(j, "vertices").get<size_t>();

    std::vector<std::vector<size_t>> simplices;
    std::map<std::vector<size_t>, Json> label_by_simplex;
    for (const auto& s : field(j, "simplices")) {
        std::vector<size_t> verts;
        for (const auto& v : field(s, "verts"))
            verts.push_back(v.get<size_t>());
        std::sort(verts.begin(), verts.end());
        simplices.push_back(verts);
        if (s.contains("label"))
            label_by_simplex[verts] = s["label"];
    }

    SimplicialComplex complex =
        close_faces ? SimplicialComplex::with_closed_faces(vertices, simplices)
                    : SimplicialComplex(vertices, simplices);

    StratLabeledComplex out;
    out.ambient_half_dim = n;
    out.labels.assign(complex.simplices().size(), std::nullopt);
    for (size_t i = 0; i < complex.simplices().size(); ++i) {
        auto it = label_by_simplex.find(complex.simplices()[i]);
        if (it == label_by_simplex.end())
            continue; // faces added by closure default to DEFAULT
        const Json& label = it->second;
        if (label.is_string()) {
            if (label.get<std::string>() != "DEFAULT")
                throw InputError("schema.label", "string labels must be \"DEFAULT\"");
        } else {
            out.labels[i] = tree_from_json(label);
        }
    }
    out.complex = std::move(complex);
    out.validate();
    return out;
}

namespace {

FactKind fact_kind_from_name(const std::string& name)
{
    for (int k = 0; k <= static_cast<int>(FactKind::generalized_cocores); ++k)
        if (fact_kind_name(static_cast<FactKind>(k)) == name)
            return static_cast<FactKind>(k);
    throw InputError("schema.fact_kind", "unknown fact kind '" + name + "'");
}

} // namespace

FactDatabase database_from_json(const Json& j)
{
    FactDatabase db;
    for (const auto& e : field(j, "entities")) {
        Entity ent;
        ent.id = field(e, "id").get<std::string>();
        std::string kind = e.contains("kind") ? e["kind"].get<std::string>() : "liouville";
        if (kind == "liouville")
            ent.kind = EntityKind::liouville;
        else if (kind == "category")
            ent.kind = EntityKind::category;
        else if (kind == "variety")
            ent.kind = EntityKind::variety;
        else
            throw InputError("schema.entity", "unknown entity kind '" + kind + "'");
        if (e.contains("dim"))
            ent.dim = e["dim"].get<long>();
        db.entities.push_back(std::move(ent));
    }
    if (j.contains("facts")) {
        for (const auto& f : j["facts"]) {
            Fact fact;
            fact.kind = fact_kind_from_name(field(f, "kind").get<std::string>());
            if (f.contains("subject"))
                fact.subject = f["subject"].get<std::string>();
            if (f.contains("value"))
                fact.value = f["value"].get<long>();
            if (f.contains("lower"))
                fact.lower = f["lower"].get<long>();
            if (f.contains("upper"))
                fact.upper = f["upper"].get<long>();
            if (f.contains("inner"))
                fact.inner = f["inner"].get<std::string>();
            if (f.contains("outer"))
                fact.outer = f["outer"].get<std::string>();
            if (f.contains("of"))
                fact.of = f["of"].get<std::string>();
            if (f.contains("by"))
                fact.by = f["by"].get<std::string>();
            if (f.contains("variety"))
                fact.variety = f["variety"].get<std::string>();
            if (f.contains("pair"))
                fact.pair = f["pair"].get<std::string>();
            db.facts.push_back(std::move(fact));
        }
    }
    db.validate();
    return db;
}

IntervalObject interval_object_from_json(const Json& j)
{
    IntervalObject o;
    o.n = field(j, "n").get<size_t>();
    for (const auto& s : field(j, "summands")) {
        IntervalSummand sm;
        sm.lo = field(s, "lo").get<size_t>();
        sm.hi = field(s, "hi").get<size_t>();
        sm.shift = s.contains("shift") ? s["shift"].get<long>() : 0;
        o.summands.push_back(sm);
    }
    o.validate();
    return o;
}

// ---- serialization ----------------------------------------------------------

Json dimension_report_to_json(const DimensionReport& rep, const RingPtr& ring)
{
    Json j;
    if (rep.zero) {
        j["dimension"] = "ZERO_MODULE";
        return j;
    }
    j["dimension"] = rep.dimension;
    j["method"] = rep.method == DimMethod::fitting ? "fitting" : "annihilator";
    Json witness = Json::array();
    for (size_t v : rep.witness_vars)
        witness.push_back(ring->variables[v]);
    j["witness_independent_set"] = witness;
    return j;
}

Json regseq_result_to_json(const RegSeqResult& res)
{
    Json j;
    j["ok"] = res.ok;
    if (!res.ok)
        j["fails_at"] = res.fails_at;
    Json checks = Json::array();
    for (const auto& c : res.checks) {
        Json cj;
        cj["element"] = c.element.str();
        cj["nonzerodivisor"] = c.nonzerodivisor;
        cj["proper"] = c.proper;
        if (c.zerodivisor_witness) {
            Json w = Json::array();
            for (const auto& comp : c.zerodivisor_witness->components)
                w.push_back(comp.str());
            cj["zerodivisor_witness"] = w;
        }
        checks.push_back(std::move(cj));
    }
    j["checks"] = checks;
    return j;
}

Json cover_report_to_json(const CoverBoundReport& rep)
{
    Json j;
    j["depth"] = rep.depth;
    j["per_level_rdim"] = rep.per_level_rdim;
    j["bound"] = rep.bound;
    j["experimental_chain_bound"] = rep.experimental_chain_bound;
    j["experimental_chain_bound_certified"] = false;
    j["trace"] = rep.trace;
    return j;
}

Json lower_bound_certificate_to_json(const LowerBoundCertificate& cert, const RingPtr& ring)
{
    Json j;
    j["lower_bound"] = cert.bound;
    j["dimension_report"] = dimension_report_to_json(cert.dimension, ring);
    if (cert.regular_sequence)
        j["regular_sequence"] = regseq_result_to_json(*cert.regular_sequence);
    return j;
}

namespace {

Json bound_to_json(const BoundInterval& b)
{
    Json j;
    j["lower"] = b.lower ? Json(*b.lower) : Json("NONE");
    j["upper"] = b.upper ? Json(*b.upper) : Json("INF");
    return j;
}

} // namespace

Json intervals_to_json(const std::map<std::string, std::map<Quantity, BoundInterval>>& m)
{
    Json j = Json::object();
    for (const auto& [entity, qs] : m) {
        Json e = Json::object();
        for (const auto& [q, b] : qs)
            e[quantity_name(q)] = bound_to_json(b);
        j[entity] = std::move(e);
    }
    return j;
}

Json trace_to_json(const std::vector<TraceStep>& trace)
{
    Json j = Json::array();
    for (const auto& s : trace) {
        Json t;
        t["rule"] = s.rule;
        t["entity"] = s.produced.entity;
        t["quantity"] = quantity_name(s.produced.quantity);
        t["side"] = s.produced.is_lower ? "lower" : "upper";
        t["value"] = s.value;
        t["facts"] = s.fact_inputs;
        Json deps = Json::array();
        for (const auto& d : s.bound_inputs)
            deps.push_back(quantity_name(d.quantity) + "(" + d.entity + ")." +
                           (d.is_lower ? "lower" : "upper"));
        t["depends_on"] = deps;
        if (!s.note.empty())
            t["note"] = s.note;
        j.push_back(std::move(t));
    }
    return j;
}

Json generation_result_to_json(const GenerationResult& r)
{
    Json j;
    j["n"] = r.n;
    j["max_level"] = r.max_level;
    j["complete"] = r.complete();
    if (r.complete()) {
        size_t worst = 1;
        for (const auto& [iv, lvl] : r.level) {
            (void)iv;
            worst = std::max(worst, lvl);
        }
        // generation time of this particular generator; an upper bound
        // certificate for the Rouquier dimension
        j["generation_time"] = worst - 1;
    }
    Json levels = Json::array();
    for (size_t lo = 1; lo <= r.n; ++lo)
        for (size_t hi = lo; hi <= r.n; ++hi) {
            Json e;
            e["interval"] = {lo, hi};
            auto it = r.level.find({lo, hi});
            if (it == r.level.end())
                e["level"] = "UNREACHED";
            else
                e["level"] = it->second;
            levels.push_back(std::move(e));
        }
    j["levels"] = levels;
    return j;
}

std::string json_digest(const Json& j)
{
    const std::string dump = j.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json report_envelope(const Json& input_echo, Json payload)
{
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input_digest"] = json_digest(input_echo);
    j["input"] = input_echo;
    j["result"] = std::move(payload);
    return j;
}

} // namespace rdim
