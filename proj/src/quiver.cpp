#include "rdim/quiver.hpp"

#include <algorithm>
#include <set>

#include "rdim/errors.hpp"

namespace rdim {

namespace {

// Union of endpoints; validates connectivity and forest shape for an
// undirected edge list over explicit vertex ids.
void validate_tree_shape(const std::vector<std::pair<size_t, size_t>>& edges,
                         const std::set<size_t>& vertices, const char* what)
{
    if (vertices.empty())
        throw InputError("quiver.empty", std::string(what) + ": no vertices");
    std::set<std::pair<size_t, size_t>> seen;
    for (auto [a, b] : edges) {
        if (a == b)
            throw InputError("quiver.loop", std::string(what) + ": loop edge");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second)
            throw InputError("quiver.multi_edge", std::string(what) + ": repeated edge");
    }
    if (edges.size() + 1 != vertices.size())
        throw InputError("quiver.cycle_or_disconnected",
                         std::string(what) +
                             ": the underlying graph must be a tree (connected and acyclic)");
    // edge count matches a tree; connectivity still needs a scan
    std::map<size_t, std::vector<size_t>> adj;
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<size_t> seen_v;
    std::vector<size_t> stack = {*vertices.begin()};
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        if (!seen_v.insert(v).second)
            continue;
        for (size_t w : adj[v])
            stack.push_back(w);
    }
    if (seen_v.size() != vertices.size())
        throw InputError("quiver.disconnected", std::string(what) + ": graph is disconnected");
}

} // namespace

Quiver::Quiver(size_t vertex_count, std::vector<std::pair<size_t, size_t>> arrows)
    : n_(vertex_count), arrows_(std::move(arrows))
{
    std::set<size_t> vertices;
    for (size_t v = 1; v <= n_; ++v)
        vertices.insert(v);
    for (auto [a, b] : arrows_)
        if (a < 1 || a > n_ || b < 1 || b > n_)
            throw InputError("quiver.vertex_range", "arrow endpoint out of range");
    validate_tree_shape(arrows_, vertices, "quiver");
}

std::string DynkinClass::name() const
{
    switch (type) {
    case DynkinType::A:
        return "A" + std::to_string(rank);
    case DynkinType::D:
        return "D" + std::to_string(rank);
    case DynkinType::E6:
        return "E6";
    case DynkinType::E7:
        return "E7";
    case DynkinType::E8:
        return "E8";
    case DynkinType::NonDynkin:
        return "NonDynkin";
    }
    return "?";
}

DynkinClass dynkin_classify(const Quiver& q)
{
    const size_t n = q.vertex_count();
    std::vector<std::vector<size_t>> adj(n + 1);
    for (auto [a, b] : q.arrows()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    std::vector<size_t> branch_vertices;
    for (size_t v = 1; v <= n; ++v) {
        if (adj[v].size() >= 4)
            return {DynkinType::NonDynkin, 0};
        if (adj[v].size() == 3)
            branch_vertices.push_back(v);
    }
    if (branch_vertices.size() >= 2)
        return {DynkinType::NonDynkin, 0};
    if (branch_vertices.empty())
        return {DynkinType::A, n};

    // one degree-3 vertex: measure the three branch lengths
    size_t center = branch_vertices.front();
    std::vector<size_t> lengths;
    for (size_t start : adj[center]) {
        size_t len = 1;
        size_t prev = center, cur = start;
        while (true) {
            size_t next = 0;
            bool found = false;
            for (size_t w : adj[cur])
                if (w != prev) {
                    next = w;
                    found = true;
                    break;
                }
            if (!found)
                break;
            prev = cur;
            cur = next;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    const size_t a = lengths[0], b = lengths[1], c = lengths[2];
    if (a == 1 && b == 1)
        return {DynkinType::D, c + 3};
    if (a == 1 && b == 2 && c == 2)
        return {DynkinType::E6, 6};
    if (a == 1 && b == 2 && c == 3)
        return {DynkinType::E7, 7};
    if (a == 1 && b == 2 && c == 4)
        return {DynkinType::E8, 8};
    return {DynkinType::NonDynkin, 0};
}

int quiver_rdim(const Quiver& q)
{
    return dynkin_classify(q).type == DynkinType::NonDynkin ? 1 : 0;
}

RootedSignedTree::RootedSignedTree(std::vector<std::pair<size_t, size_t>> edges, size_t root,
                                   std::map<std::pair<size_t, size_t>, char> signs)
    : edges_(std::move(edges)), root_(root), signs_(std::move(signs))
{
    std::set<size_t> vertices;
    vertices.insert(root_);
    for (auto [a, b] : edges_) {
        vertices.insert(a);
        vertices.insert(b);
    }
    validate_tree_shape(edges_, vertices, "tree");
    vertices_.assign(vertices.begin(), vertices.end());

    // signs exist exactly on edges not adjacent to the root
    std::set<std::pair<size_t, size_t>> expected;
    for (auto [a, b] : edges_) {
        if (a == root_ || b == root_)
            continue;
        auto key = std::minmax(a, b);
        expected.insert({key.first, key.second});
    }
    std::set<std::pair<size_t, size_t>> given;
    for (const auto& [e, s] : signs_) {
        if (s != '+' && s != '-')
            throw InputError("tree.sign", "edge signs must be '+' or '-'");
        auto key = std::minmax(e.first, e.second);
        given.insert({key.first, key.second});
    }
    if (given != expected)
        throw InputError("tree.signs",
                         "signs must decorate exactly the edges not adjacent to the root");
}

Quiver tree_to_quiver(const RootedSignedTree& t)
{
    // compact ids to 1..n in sorted order
    std::set<size_t> vertex_set;
    vertex_set.insert(t.root());
    for (auto [a, b] : t.edges()) {
        vertex_set.insert(a);
        vertex_set.insert(b);
    }
    std::map<size_t, size_t> compact;
    size_t next = 1;
    for (size_t v : vertex_set)
        compact[v] = next++;

    // BFS from the root to find each vertex's parent direction
    std::map<size_t, std::vector<size_t>> adj;
    for (auto [a, b] : t.edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<size_t, size_t> parent;
    std::vector<size_t> frontier = {t.root()};
    std::set<size_t> seen = {t.root()};
    while (!frontier.empty()) {
        std::vector<size_t> next_frontier;
        for (size_t v : frontier)
            for (size_t w : adj[v])
                if (seen.insert(w).second) {
                    parent[w] = v;
                    next_frontier.push_back(w);
                }
        frontier = std::move(next_frontier);
    }

    std::vector<std::pair<size_t, size_t>> arrows;
    for (const auto& [child, par] : parent)
        arrows.push_back({compact[child], compact[par]});
    std::sort(arrows.begin(), arrows.end());
    return Quiver(vertex_set.size(), std::move(arrows));
}

int worst_case_tree_rdim(size_t size)
{
    return size >= 5 ? 1 : 0;
}

} // namespace rdim
