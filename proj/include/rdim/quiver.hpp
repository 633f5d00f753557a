#ifndef RDIM_QUIVER_HPP
#define RDIM_QUIVER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rdim {

/// Connected finite acyclic quiver: no loops, no multi-edges, no cycles in
/// the underlying undirected graph (so underlying graphs are trees).
/// Vertices are 1-based, matching the file format.
class Quiver {
public:
    Quiver(size_t vertex_count, std::vector<std::pair<size_t, size_t>> arrows);

    size_t vertex_count() const { return n_; }
    const std::vector<std::pair<size_t, size_t>>& arrows() const { return arrows_; }

private:
    size_t n_;
    std::vector<std::pair<size_t, size_t>> arrows_;
};

enum class DynkinType { A, D, E6, E7, E8, NonDynkin };

struct DynkinClass {
    DynkinType type = DynkinType::NonDynkin;
    size_t rank = 0; // n of A_n / D_n; 6/7/8 for E types; 0 for NonDynkin

    std::string name() const;
};

/// Classification of the underlying undirected graph by branch data.
DynkinClass dynkin_classify(const Quiver& q);

/// 0 for ADE type, 1 otherwise.
int quiver_rdim(const Quiver& q);

/// Rooted tree with sign decorations on the edges not adjacent to the root.
/// Vertex ids are arbitrary non-negative integers (files use 0-based ids).
class RootedSignedTree {
public:
    RootedSignedTree(std::vector<std::pair<size_t, size_t>> edges, size_t root,
                     std::map<std::pair<size_t, size_t>, char> signs);

    /// Single-vertex tree (the smooth local model).
    static RootedSignedTree trivial() { return RootedSignedTree({}, 0, {}); }

    const std::vector<std::pair<size_t, size_t>>& edges() const { return edges_; }
    size_t root() const { return root_; }
    const std::map<std::pair<size_t, size_t>, char>& signs() const { return signs_; }
    size_t vertex_count() const { return vertices_.size(); }
    /// Number of non-root vertices (the local-model dimension).
    size_t non_root_vertices() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }

private:
    std::vector<std::pair<size_t, size_t>> edges_;
    size_t root_;
    std::map<std::pair<size_t, size_t>, char> signs_;
    std::vector<size_t> vertices_;
};

/// Orient every edge toward the root. Signs are carried by the tree but do
/// not affect the result. Tree vertex ids are compacted to 1..n in sorted
/// order.
Quiver tree_to_quiver(const RootedSignedTree& t);

/// Worst-case local model on `size` vertices: non-Dynkin as soon as five or
/// more vertices are available (the four-branch star), Dynkin otherwise.
int worst_case_tree_rdim(size_t size);

} // namespace rdim

#endif
