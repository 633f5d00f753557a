// rdim-lab: certified Rouquier-dimension bounds for combinatorially
// presented categories, plus the geometric consequences that propagate
// through the fact database.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "rdim/errors.hpp"
#include "rdim/fppoly.hpp"
#include "rdim/json_io.hpp"
#include "rdim/parser.hpp"
#include "rdim/version.hpp"

using namespace rdim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitInconclusive = 3;

struct OutputOptions {
    std::string format = "text";
    std::string output_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts)
{
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("-o,--output", opts.output_path, "write the report to a file");
}

void emit(const OutputOptions& opts, const Json& report, const std::string& text)
{
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opts.output_path.empty()) {
        file.open(opts.output_path);
        if (!file)
            throw InputError("io.output", "cannot open '" + opts.output_path + "'");
        out = &file;
    }
    if (opts.format == "json")
        *out << report.dump(2) << "\n";
    else
        *out << text;
}

size_t trial_budget_from_env(size_t fallback)
{
    const char* env = std::getenv("RDIMLAB_TRIAL_BUDGET");
    if (!env)
        return fallback;
    long v = std::atol(env);
    return v > 0 ? static_cast<size_t>(v) : fallback;
}

std::string interval_text(const BoundInterval& b)
{
    std::string lo = b.lower ? std::to_string(*b.lower) : "NONE";
    std::string hi = b.upper ? std::to_string(*b.upper) : "INF";
    return "[" + lo + ", " + hi + "]";
}

std::string deduction_text(const PropagationResult& r)
{
    std::string text;
    for (const auto& [entity, qs] : r.intervals) {
        text += entity + ":\n";
        for (const auto& [q, b] : qs)
            text += "  " + quantity_name(q) + " " + interval_text(b) + "\n";
    }
    text += "derivation:\n";
    for (const auto& s : r.trace) {
        text += "  [" + s.rule + "] " + quantity_name(s.produced.quantity) + "(" +
                s.produced.entity + ")." + (s.produced.is_lower ? "lower" : "upper") +
                " := " + std::to_string(s.value);
        if (!s.note.empty())
            text += "   (" + s.note + ")";
        text += "\n";
    }
    return text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Rouquier-dimension bounds and their geometric consequences"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    // ring-dim
    auto* ring_cmd = app.add_subcommand("ring-dim", "Krull dimension of a presented ring");
    std::string ring_file, ring_order = "degrevlex";
    uint32_t ring_modp = 0;
    OutputOptions ring_out;
    ring_cmd->add_option("--file", ring_file, "ring JSON file")->required();
    ring_cmd->add_option("--order", ring_order, "term order for the basis computation")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    ring_cmd->add_option("--modp", ring_modp,
                         "fast uncertified pre-pass over F_p (p prime, p < 2^31)");
    add_output_flags(ring_cmd, ring_out);

    // module-dim
    auto* mod_cmd = app.add_subcommand("module-dim", "Krull dimension of a presented module");
    std::string mod_file, mod_method = "fitting";
    OutputOptions mod_out;
    mod_cmd->add_option("--file", mod_file, "module JSON file")->required();
    mod_cmd->add_option("--method", mod_method, "support ideal to use")
        ->check(CLI::IsMember({"fitting", "annihilator"}));
    add_output_flags(mod_cmd, mod_out);

    // reg-seq
    auto* reg_cmd = app.add_subcommand("reg-seq", "search for a regular sequence");
    std::string reg_file;
    size_t reg_target = 1;
    size_t reg_budget = trial_budget_from_env(200);
    OutputOptions reg_out;
    reg_cmd->add_option("--file", reg_file, "module JSON file")->required();
    reg_cmd->add_option("--target", reg_target, "sequence length to reach")->required();
    reg_cmd->add_option("--budget", reg_budget, "candidate evaluation budget");
    add_output_flags(reg_cmd, reg_out);

    // koszul-depth
    auto* kos_cmd = app.add_subcommand("koszul-depth", "depth along a sequence of elements");
    std::string kos_file;
    std::vector<std::string> kos_elements;
    OutputOptions kos_out;
    kos_cmd->add_option("--file", kos_file, "module JSON file")->required();
    kos_cmd->add_option("--element", kos_elements, "sequence element (repeatable)")->required();
    add_output_flags(kos_cmd, kos_out);

    // lower-bound
    auto* low_cmd = app.add_subcommand("lower-bound", "certified Rouquier-dimension lower bound");
    std::string low_file, low_preset, low_family, low_factors;
    long low_n = -1;
    size_t low_budget = trial_budget_from_env(200);
    OutputOptions low_out;
    low_cmd->add_option("--file", low_file, "problem JSON file");
    low_cmd->add_option("--preset", low_preset, "preset name");
    low_cmd->add_option("--n", low_n, "preset parameter n");
    low_cmd->add_option("--family", low_family, "Lie family for the lie_group preset");
    low_cmd->add_option("--factors", low_factors,
                        "factors for the product preset, e.g. odd_sphere:3,even_sphere:2");
    low_cmd->add_option("--budget", low_budget, "regular-sequence search budget");
    add_output_flags(low_cmd, low_out);

    // quiver
    auto* quiv_cmd = app.add_subcommand("quiver", "Dynkin class and Rouquier dimension");
    std::string quiv_file, tree_file;
    OutputOptions quiv_out;
    quiv_cmd->add_option("--file", quiv_file, "quiver JSON file");
    quiv_cmd->add_option("--tree", tree_file, "rooted signed tree JSON file");
    add_output_flags(quiv_cmd, quiv_out);

    // an-oracle
    auto* an_cmd = app.add_subcommand("an-oracle", "generation levels in the A_n oracle");
    std::string an_file, an_generator = "full";
    size_t an_n = 2, an_max_level = 4;
    OutputOptions an_out;
    an_cmd->add_option("--file", an_file, "interval object JSON file");
    an_cmd->add_option("--n", an_n, "path length when using a named generator");
    an_cmd->add_option("--generator", an_generator, "named generator")
        ->check(CLI::IsMember({"full", "projectives"}));
    an_cmd->add_option("--max-level", an_max_level, "level cap");
    add_output_flags(an_cmd, an_out);

    // skeleton-bound
    auto* skel_cmd = app.add_subcommand("skeleton-bound", "descent upper bound for a labeled skeleton");
    std::string skel_file;
    long skel_n = -1;
    bool skel_default = false, skel_close = false;
    OutputOptions skel_out;
    skel_cmd->add_option("--file", skel_file, "labeled complex JSON file");
    skel_cmd->add_option("--n", skel_n, "ambient half-dimension for --default-labels");
    skel_cmd->add_flag("--default-labels", skel_default,
                       "use the worst-case complex of dimension n");
    skel_cmd->add_flag("--close-faces", skel_close, "auto-complete missing faces");
    add_output_flags(skel_cmd, skel_out);

    // sod
    auto* sod_cmd = app.add_subcommand("sod", "semi-orthogonal decomposition bound");
    std::vector<size_t> sod_parts;
    OutputOptions sod_out;
    sod_cmd->add_option("--parts", sod_parts, "per-piece Rouquier dimensions")
        ->required()
        ->delimiter(',');
    add_output_flags(sod_cmd, sod_out);

    // resolution
    auto* res_cmd = app.add_subcommand("resolution", "diagonal resolution bound");
    size_t res_length = 1;
    OutputOptions res_out;
    res_cmd->add_option("--length", res_length, "resolution length")->required();
    add_output_flags(res_cmd, res_out);

    // deduce
    auto* ded_cmd = app.add_subcommand("deduce", "propagate a fact database");
    std::string ded_file, ded_explain;
    OutputOptions ded_out;
    ded_cmd->add_option("--file", ded_file, "database JSON file")->required();
    ded_cmd->add_option("--explain", ded_explain,
                        "entity:quantity to explain (quantity in rdim|lef_w|intersection)");
    add_output_flags(ded_cmd, ded_out);

    // catalog
    auto* cat_cmd = app.add_subcommand("catalog", "propagate the shipped catalog");
    std::string cat_explain;
    OutputOptions cat_out;
    cat_cmd->add_option("--explain", cat_explain, "entity:quantity to explain");
    add_output_flags(cat_cmd, cat_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ring_cmd) {
            Json input = load_json_file(ring_file);
            RingPresentation ring = ring_from_json(input);
            DimensionReport rep = ring_modp ? krull_dim_ideal_modp(ring, ring_modp)
                                  : ring_order == "lex"
                                      ? krull_dim_ideal(ring, MonomialOrder::lex())
                                      : krull_dim_ideal(ring);
            Json payload = dimension_report_to_json(rep, ring.ring());
            if (ring_modp) {
                payload["mode"] = "mod-p pre-pass (uncertified)";
                payload["p"] = ring_modp;
            }
            std::string text = rep.zero ? "dimension: ZERO_MODULE (1 lies in the ideal)\n"
                                        : "dimension: " + std::to_string(rep.dimension) + "\n";
            emit(ring_out, report_envelope(input, payload), text);
            return kExitOk;
        }
        if (*mod_cmd) {
            Json input = load_json_file(mod_file);
            FPModule M = module_from_json(input);
            DimMethod method =
                mod_method == "fitting" ? DimMethod::fitting : DimMethod::annihilator;
            DimensionReport rep = module_dim(M, method);
            Json payload = dimension_report_to_json(rep, M.ring().ring());
            std::string text = rep.zero ? "dimension: ZERO_MODULE\n"
                                        : "dimension: " + std::to_string(rep.dimension) + "\n";
            emit(mod_out, report_envelope(input, payload), text);
            return kExitOk;
        }
        if (*reg_cmd) {
            Json input = load_json_file(reg_file);
            FPModule M = module_from_json(input);
            RegSeqSearchResult search = find_regular_sequence(M, reg_target, reg_budget);
            Json payload;
            payload["evaluations"] = search.evaluations;
            if (search.certificate) {
                payload["found"] = true;
                payload["certificate"] = regseq_result_to_json(*search.certificate);
            } else {
                payload["found"] = false;
                payload["note"] = "NOT_FOUND: bounded search exhausted; inconclusive";
            }
            std::string text;
            if (search.certificate) {
                text = "regular sequence:";
                for (const auto& c : search.certificate->checks)
                    text += " " + c.element.str() + ";";
                text += "\n";
            } else {
                text = "NOT_FOUND (search budget exhausted; inconclusive)\n";
            }
            emit(reg_out, report_envelope(input, payload), text);
            return search.certificate ? kExitOk : kExitInconclusive;
        }
        if (*kos_cmd) {
            Json input = load_json_file(kos_file);
            FPModule M = module_from_json(input);
            std::vector<Polynomial> xs;
            for (const auto& e : kos_elements)
                xs.push_back(parse_polynomial(e, M.ring().ring()));
            size_t depth = koszul_depth(xs, M);
            Json payload;
            payload["depth"] = depth;
            Json echo = input;
            echo["elements"] = kos_elements;
            emit(kos_out, report_envelope(echo, payload),
                 "depth: " + std::to_string(depth) + "\n");
            return kExitOk;
        }
        if (*low_cmd) {
            Json input;
            if (!low_file.empty()) {
                input = load_json_file(low_file);
            } else if (!low_preset.empty()) {
                input["preset"] = low_preset;
                Json params = Json::object();
                if (low_n >= 0)
                    params["n"] = low_n;
                if (!low_family.empty())
                    params["family"] = low_family;
                if (!low_factors.empty())
                    params["factors"] = low_factors;
                input["params"] = params;
            } else {
                throw InputError("cli.lower_bound", "need --file or --preset");
            }
            SubringModuleProblem problem = problem_from_json(input);
            LowerBoundCertificate cert = lower_bound_from_generator(problem, low_budget);
            Json payload = lower_bound_certificate_to_json(cert, problem.subring.ring());
            emit(low_out, report_envelope(input, payload),
                 "lower_bound: " + std::to_string(cert.bound) + "\n");
            return kExitOk;
        }
        if (*quiv_cmd) {
            if (quiv_file.empty() == tree_file.empty())
                throw InputError("cli.quiver", "need exactly one of --file or --tree");
            Json input;
            Quiver q = [&] {
                if (!quiv_file.empty()) {
                    input = load_json_file(quiv_file);
                    return quiver_from_json(input);
                }
                input = load_json_file(tree_file);
                return tree_to_quiver(tree_from_json(input));
            }();
            DynkinClass cls = dynkin_classify(q);
            Json payload;
            payload["type"] = cls.name();
            payload["rdim"] = quiver_rdim(q);
            emit(quiv_out, report_envelope(input, payload),
                 "type: " + cls.name() + "\nrdim: " + std::to_string(quiver_rdim(q)) + "\n");
            return kExitOk;
        }
        if (*an_cmd) {
            Json input;
            IntervalObject gen;
            if (!an_file.empty()) {
                input = load_json_file(an_file);
                gen = interval_object_from_json(input);
            } else {
                gen = an_generator == "full" ? full_additive_generator(an_n)
                                             : projective_generator(an_n);
                input["n"] = an_n;
                input["generator"] = an_generator;
            }
            GenerationResult res = generation_time(gen, gen.n, an_max_level);
            Json payload = generation_result_to_json(res);
            std::string text;
            for (size_t lo = 1; lo <= res.n; ++lo)
                for (size_t hi = lo; hi <= res.n; ++hi) {
                    auto it = res.level.find({lo, hi});
                    text += "M[" + std::to_string(lo) + "," + std::to_string(hi) + "]: " +
                            (it == res.level.end() ? std::string("UNREACHED")
                                                   : std::to_string(it->second)) +
                            "\n";
                }
            emit(an_out, report_envelope(input, payload), text);
            return res.complete() ? kExitOk : kExitInconclusive;
        }
        if (*skel_cmd) {
            Json input;
            StratLabeledComplex s;
            if (skel_default) {
                if (skel_n < 1)
                    throw InputError("cli.skeleton", "--default-labels needs --n >= 1");
                s = default_labeled(SimplicialComplex::full_simplex(static_cast<size_t>(skel_n)),
                                    static_cast<size_t>(skel_n));
                input["n"] = skel_n;
                input["default_labels"] = true;
            } else {
                if (skel_file.empty())
                    throw InputError("cli.skeleton", "need --file or --default-labels with --n");
                input = load_json_file(skel_file);
                s = labeled_complex_from_json(input, skel_close);
            }
            CoverBoundReport rep = descent_upper_bound(s);
            Json payload = cover_report_to_json(rep);
            emit(skel_out, report_envelope(input, payload),
                 "bound: " + std::to_string(rep.bound) + "\n");
            return kExitOk;
        }
        if (*sod_cmd) {
            size_t bound = sod_bound(sod_parts);
            Json input;
            input["parts"] = sod_parts;
            Json payload;
            payload["bound"] = bound;
            emit(sod_out, report_envelope(input, payload),
                 "bound: " + std::to_string(bound) + "\n");
            return kExitOk;
        }
        if (*res_cmd) {
            size_t bound = resolution_bound(res_length);
            Json input;
            input["length"] = res_length;
            Json payload;
            payload["bound"] = bound;
            emit(res_out, report_envelope(input, payload),
                 "bound: " + std::to_string(bound) + "\n");
            return kExitOk;
        }
        if (*ded_cmd || *cat_cmd) {
            Json input;
            FactDatabase db;
            std::string explain_arg;
            OutputOptions out;
            if (*ded_cmd) {
                input = load_json_file(ded_file);
                db = database_from_json(input);
                explain_arg = ded_explain;
                out = ded_out;
            } else {
                db = ship_catalog();
                input["catalog"] = true;
                explain_arg = cat_explain;
                out = cat_out;
            }
            PropagationResult r = propagate(db);
            Json payload;
            payload["intervals"] = intervals_to_json(r.intervals);
            payload["trace"] = trace_to_json(r.trace);
            std::string text = deduction_text(r);
            if (!explain_arg.empty()) {
                auto colon = explain_arg.find(':');
                if (colon == std::string::npos)
                    throw InputError("cli.explain", "use entity:quantity");
                std::string entity = explain_arg.substr(0, colon);
                std::string qname = explain_arg.substr(colon + 1);
                Quantity q;
                if (qname == "rdim")
                    q = Quantity::rdim;
                else if (qname == "lef_w")
                    q = Quantity::lef_w;
                else if (qname == "intersection")
                    q = Quantity::intersection;
                else
                    throw InputError("cli.explain", "unknown quantity '" + qname + "'");
                if (!db.find(entity))
                    throw InputError("cli.explain", "unknown entity '" + entity + "'");
                auto chain = explain(r, entity, q);
                payload["explain"] = trace_to_json(chain);
                text += "explanation of " + qname + "(" + entity + "): " +
                        interval_text(r.interval(entity, q)) + "\n";
                for (const auto& s : chain)
                    text += "  [" + s.rule + "] " + quantity_name(s.produced.quantity) + "(" +
                            s.produced.entity + ")." +
                            (s.produced.is_lower ? "lower" : "upper") +
                            " := " + std::to_string(s.value) + "\n";
            }
            emit(out, report_envelope(input, payload), text);
            return kExitOk;
        }
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n" << e.trace_text();
        return kExitInconsistent;
    } catch (const InputError& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
