#include "rdim/descent.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rdim/errors.hpp"

namespace rdim {

namespace {

std::vector<size_t> sorted_unique_verts(std::vector<size_t> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string simplex_name(const std::vector<size_t>& s)
{
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace

SimplicialComplex::SimplicialComplex(size_t vertex_count,
                                     std::vector<std::vector<size_t>> simplices)
    : n_(vertex_count)
{
    std::set<std::vector<size_t>> seen;
    for (auto& s : simplices) {
        if (s.empty())
            throw InputError("complex.empty_simplex", "empty simplex");
        std::vector<size_t> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("complex.repeated_vertex",
                             "repeated vertex in simplex " + simplex_name(s));
        for (size_t v : sorted)
            if (v >= n_)
                throw InputError("complex.vertex_range",
                                 "vertex out of range in simplex " + simplex_name(s));
        if (!seen.insert(sorted).second)
            throw InputError("complex.duplicate", "duplicate simplex " + simplex_name(s));
    }
    simplices_.assign(seen.begin(), seen.end());
    std::sort(simplices_.begin(), simplices_.end(),
              [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
    if (simplices_.empty())
        throw InputError("complex.empty", "a complex needs at least one simplex");

    // face closure: every facet of every simplex must be present
    for (const auto& s : simplices_) {
        if (s.size() == 1)
            continue;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<size_t> face;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop)
                    face.push_back(s[i]);
            if (!seen.count(face))
                throw InputError("complex.face_missing", "missing face " + simplex_name(face) +
                                                             " of " + simplex_name(s));
        }
    }
}

SimplicialComplex SimplicialComplex::with_closed_faces(size_t vertex_count,
                                                       std::vector<std::vector<size_t>> simplices)
{
    std::set<std::vector<size_t>> closed;
    // breadth-first closure over facets
    std::vector<std::vector<size_t>> stack;
    for (auto& s : simplices)
        stack.push_back(sorted_unique_verts(s));
    while (!stack.empty()) {
        std::vector<size_t> s = stack.back();
        stack.pop_back();
        if (s.empty() || !closed.insert(s).second)
            continue;
        if (s.size() == 1)
            continue;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<size_t> face;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop)
                    face.push_back(s[i]);
            stack.push_back(face);
        }
    }
    return SimplicialComplex(vertex_count,
                             std::vector<std::vector<size_t>>(closed.begin(), closed.end()));
}

SimplicialComplex SimplicialComplex::full_simplex(size_t dimension)
{
    std::vector<size_t> top;
    for (size_t v = 0; v <= dimension; ++v)
        top.push_back(v);
    return with_closed_faces(dimension + 1, {top});
}

size_t SimplicialComplex::dimension() const
{
    size_t d = 0;
    for (const auto& s : simplices_)
        d = std::max(d, s.size() - 1);
    return d;
}

std::vector<std::vector<size_t>> SimplicialComplex::components() const
{
    // union-find over vertices, then group simplices
    std::vector<size_t> parent(n_);
    for (size_t v = 0; v < n_; ++v)
        parent[v] = v;
    std::function<size_t(size_t)> find = [&](size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& s : simplices_)
        for (size_t i = 1; i < s.size(); ++i)
            parent[find(s[i])] = find(s[0]);

    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < simplices_.size(); ++i)
        groups[find(simplices_[i][0])].push_back(i);
    std::vector<std::vector<size_t>> out;
    for (auto& [root, idxs] : groups)
        out.push_back(std::move(idxs));
    return out;
}

size_t star_poset_depth(const SimplicialComplex& k)
{
    return k.dimension() + 1;
}

void StratLabeledComplex::validate() const
{
    if (labels.size() != complex.simplices().size())
        throw InputError("strat.labels", "one label per simplex required");
    for (size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i])
            continue;
        size_t d = complex.simplices()[i].size() - 1;
        size_t allowed = ambient_half_dim >= d ? ambient_half_dim - d : 0;
        if (d > ambient_half_dim || labels[i]->non_root_vertices() > allowed)
            throw InputError("strat.label_dim",
                             "label on simplex " + simplex_name(complex.simplices()[i]) +
                                 " exceeds the dimension constraint");
    }
    if (complex.dimension() > ambient_half_dim)
        throw InputError("strat.dim", "complex dimension exceeds the ambient half-dimension");
}

int StratLabeledComplex::local_rdim(size_t simplex_index) const
{
    const auto& label = labels[simplex_index];
    if (label)
        return quiver_rdim(tree_to_quiver(*label));
    size_t d = complex.simplices()[simplex_index].size() - 1;
    // DEFAULT: worst tree allowed at this stratum has n-d non-root vertices
    return worst_case_tree_rdim(ambient_half_dim - d + 1);
}

StratLabeledComplex default_labeled(SimplicialComplex complex, size_t ambient_half_dim)
{
    StratLabeledComplex s;
    s.labels.assign(complex.simplices().size(), std::nullopt);
    s.complex = std::move(complex);
    s.ambient_half_dim = ambient_half_dim;
    s.validate();
    return s;
}

int level_rdim(const StratLabeledComplex& s, size_t level)
{
    s.validate();
    if (level == 0 || level > star_poset_depth(s.complex))
        throw InputError("strat.level", "level out of range");
    int best = -1;
    for (size_t i = 0; i < s.complex.simplices().size(); ++i) {
        if (s.complex.simplices()[i].size() != level)
            continue;
        best = std::max(best, s.local_rdim(i));
    }
    if (best < 0)
        throw InputError("strat.level", "no simplices at this level");
    return best;
}

CoverBoundReport descent_upper_bound(const StratLabeledComplex& s)
{
    s.validate();
    CoverBoundReport report;
    report.depth = star_poset_depth(s.complex);
    report.per_level_rdim.assign(report.depth, 0);

    // levelwise maxima with realizing simplices, for the whole complex
    std::vector<std::string> realizers(report.depth);
    for (size_t i = 0; i < s.complex.simplices().size(); ++i) {
        size_t level = s.complex.simplices()[i].size();
        int r = s.local_rdim(i);
        if (realizers[level - 1].empty() || r > report.per_level_rdim[level - 1]) {
            report.per_level_rdim[level - 1] = r;
            realizers[level - 1] = simplex_name(s.complex.simplices()[i]);
        }
    }
    for (size_t l = 0; l < report.depth; ++l)
        report.trace.push_back("level " + std::to_string(l + 1) + ": rdim " +
                               std::to_string(report.per_level_rdim[l]) + " at " + realizers[l]);

    // the certified bound is per connected component (orthogonal summands),
    // combined by max
    size_t best = 0;
    for (const auto& comp : s.complex.components()) {
        size_t comp_depth = 0;
        for (size_t idx : comp)
            comp_depth = std::max(comp_depth, s.complex.simplices()[idx].size());
        std::vector<int> lev(comp_depth, -1);
        for (size_t idx : comp) {
            size_t level = s.complex.simplices()[idx].size();
            lev[level - 1] = std::max(lev[level - 1], s.local_rdim(idx));
        }
        size_t sum = 0;
        for (int r : lev)
            sum += static_cast<size_t>(r < 0 ? 0 : r) + 1;
        best = std::max(best, sum - 1);
    }
    report.bound = best;

    // experimental refinement: max over maximal flags of the chain-local sum
    size_t chain_best = 0;
    const auto& simps = s.complex.simplices();
    std::vector<int> rdim_of(simps.size());
    for (size_t i = 0; i < simps.size(); ++i)
        rdim_of[i] = s.local_rdim(i);
    std::vector<size_t> memo(simps.size(), 0);
    std::vector<bool> done(simps.size(), false);
    std::function<size_t(size_t)> extend = [&](size_t i) -> size_t {
        if (done[i])
            return memo[i];
        size_t best_tail = 0;
        for (size_t j = 0; j < simps.size(); ++j) {
            if (simps[j].size() != simps[i].size() + 1)
                continue;
            if (std::includes(simps[j].begin(), simps[j].end(), simps[i].begin(),
                              simps[i].end()))
                best_tail = std::max(best_tail, extend(j));
        }
        memo[i] = static_cast<size_t>(rdim_of[i]) + 1 + best_tail;
        done[i] = true;
        return memo[i];
    };
    for (size_t i = 0; i < simps.size(); ++i)
        if (simps[i].size() == 1)
            chain_best = std::max(chain_best, extend(i));
    report.experimental_chain_bound = chain_best - 1;
    return report;
}

size_t arboreal_default_bound(size_t n)
{
    if (n == 0)
        throw InputError("arboreal.n", "n must be positive");
    return n <= 3 ? n : 2 * n - 3;
}

size_t sod_bound(const std::vector<size_t>& parts)
{
    if (parts.empty())
        throw InputError("sod.empty", "a semi-orthogonal decomposition needs parts");
    size_t sum = 0;
    for (size_t r : parts)
        sum += r + 1;
    return sum - 1;
}

size_t resolution_bound(size_t length)
{
    if (length == 0)
        throw InputError("resolution.zero", "zero category or contradiction");
    return length - 1;
}

} // namespace rdim
