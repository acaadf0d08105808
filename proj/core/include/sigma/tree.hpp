#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigma/color_set.hpp"
#include "sigma/errors.hpp"

namespace sigma {

struct Edge {
    int tail = 0;
    int head = 0;
    bool operator==(const Edge&) const = default;
};

// Colors of a reduced edge path, endpoints included.
using EdgePath = std::vector<int>;

// Tree on n+1 vertices whose n directed edges are labeled bijectively by a
// ColorSet. Vertex numbers carry no meaning beyond distinctness; the
// canonical form pins them down:
//   vertex 0 is the tail of the least-colored edge, and the remaining
//   vertices are numbered in BFS discovery order, expanding the edges
//   incident to each vertex in color order.
// Two trees are isomorphic (label- and direction-preserving) iff their
// canonical forms are equal.
class DirectedLabeledTree {
public:
    DirectedLabeledTree(ColorSet colors, std::vector<Edge> edges);

    const ColorSet& colors() const { return colors_; }
    int color_count() const { return colors_.size(); }
    int vertex_count() const { return colors_.size() + 1; }
    const Edge& edge(int color) const { return edges_[static_cast<size_t>(color)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Bitmask of the vertices in the head-side component after deleting `color`.
    std::uint64_t head_side(int color) const;

    // 1 iff edge d lies in the head-side component of edge c; requires c != d.
    int points_toward(int c, int d) const;

    // The unique reduced path of edges from a to b, both inclusive;
    // geodesic(a, a) = [a].
    EdgePath geodesic(int a, int b) const;

    std::vector<int> canonical_vertex_map() const; // old vertex -> canonical vertex
    DirectedLabeledTree canonical_form() const;
    bool is_canonical() const;
    bool isomorphic_to(const DirectedLabeledTree& other) const;

    // Text format; serialization always emits the canonical form with edges
    // in color order.
    std::string serialize() const;
    static DirectedLabeledTree parse(const std::string& text);

    std::string to_dot() const;

    bool operator==(const DirectedLabeledTree&) const = default;

private:
    ColorSet colors_;
    std::vector<Edge> edges_; // indexed by color

    // incident (color, other endpoint) lists per vertex, sorted by color
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

inline constexpr int kDefaultEnumCap = 5;

// All isomorphism classes of directed labeled trees over `colors`, one
// canonical representative each, sorted by edge list. There are
// 2^n (n+1)^(n-2) of them (1 when n = 1). Throws LimitError when
// colors.size() exceeds the cap.
std::vector<DirectedLabeledTree> enumerate_directed_trees(const ColorSet& colors,
                                                          int max_colors = kDefaultEnumCap);

} // namespace sigma
