#include "sigma/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sigma {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

// Discovery order of a BFS from root that expands the incident edges of each
// vertex in color order; adj lists must be sorted by color.
std::vector<int> bfs_order(const std::vector<std::vector<std::pair<int, int>>>& adj, int root) {
    std::vector<int> order(adj.size(), -1);
    std::vector<int> queue;
    queue.reserve(adj.size());
    order[static_cast<size_t>(root)] = 0;
    queue.push_back(root);
    int next = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (auto [color, other] : adj[static_cast<size_t>(v)]) {
            (void)color;
            if (order[static_cast<size_t>(other)] < 0) {
                order[static_cast<size_t>(other)] = next++;
                queue.push_back(other);
            }
        }
    }
    return order;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, const std::string& context) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer in " + context + ", got '" + token + "'");
    }
    if (pos != token.size())
        throw ParseError("expected an integer in " + context + ", got '" + token + "'");
    return value;
}

} // namespace

DirectedLabeledTree::DirectedLabeledTree(ColorSet colors, std::vector<Edge> edges)
    : colors_(std::move(colors)), edges_(std::move(edges)) {
    const int n = colors_.size();
    if (static_cast<int>(edges_.size()) != n)
        throw ValidationError("expected " + std::to_string(n) + " edges, got "
                              + std::to_string(edges_.size()));
    if (n + 1 > 64)
        throw ValidationError("at most 63 colors supported");
    for (int c = 0; c < n; ++c) {
        const Edge& e = edges_[static_cast<size_t>(c)];
        for (int v : {e.tail, e.head})
            if (v < 0 || v > n)
                throw ValidationError("edge '" + colors_.name(c) + "' endpoint "
                                      + std::to_string(v) + " out of range [0, "
                                      + std::to_string(n) + "]");
        if (e.tail == e.head)
            throw ValidationError("edge '" + colors_.name(c) + "' is a self-loop");
    }
    UnionFind uf(n + 1);
    for (int c = 0; c < n; ++c)
        if (!uf.unite(edges_[static_cast<size_t>(c)].tail, edges_[static_cast<size_t>(c)].head))
            throw ValidationError("edge '" + colors_.name(c)
                                  + "' closes a cycle; the graph is not a tree");
}

std::vector<std::vector<std::pair<int, int>>> DirectedLabeledTree::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(vertex_count()));
    for (int c = 0; c < color_count(); ++c) {
        const Edge& e = edges_[static_cast<size_t>(c)];
        adj[static_cast<size_t>(e.tail)].emplace_back(c, e.head);
        adj[static_cast<size_t>(e.head)].emplace_back(c, e.tail);
    }
    return adj;
}

std::uint64_t DirectedLabeledTree::head_side(int color) const {
    auto adj = adjacency();
    std::uint64_t mask = 0;
    std::vector<int> queue{edges_[static_cast<size_t>(color)].head};
    mask |= std::uint64_t(1) << queue[0];
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (auto [c, other] : adj[static_cast<size_t>(queue[qi])]) {
            if (c == color)
                continue;
            if (!(mask >> other & 1)) {
                mask |= std::uint64_t(1) << other;
                queue.push_back(other);
            }
        }
    }
    return mask;
}

int DirectedLabeledTree::points_toward(int c, int d) const {
    if (c == d)
        throw ValidationError("points_toward requires two distinct edges");
    return static_cast<int>(head_side(c) >> edges_[static_cast<size_t>(d)].tail & 1);
}

EdgePath DirectedLabeledTree::geodesic(int a, int b) const {
    if (a == b)
        return {a};
    // The path runs from the endpoint of a facing away from b to the
    // endpoint of b facing away from a, so that both edges are included.
    const Edge& ea = edges_[static_cast<size_t>(a)];
    const Edge& eb = edges_[static_cast<size_t>(b)];
    int far_a = (head_side(a) >> eb.tail & 1) ? ea.tail : ea.head;
    int far_b = (head_side(b) >> ea.tail & 1) ? eb.tail : eb.head;

    auto adj = adjacency();
    std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1}); // (vertex, color)
    std::vector<int> queue{far_a};
    parent[static_cast<size_t>(far_a)] = {far_a, -1};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (auto [c, other] : adj[static_cast<size_t>(queue[qi])]) {
            if (parent[static_cast<size_t>(other)].first < 0) {
                parent[static_cast<size_t>(other)] = {queue[qi], c};
                queue.push_back(other);
            }
        }
    }
    EdgePath path;
    for (int v = far_b; v != far_a; v = parent[static_cast<size_t>(v)].first)
        path.push_back(parent[static_cast<size_t>(v)].second);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> DirectedLabeledTree::canonical_vertex_map() const {
    return bfs_order(adjacency(), edges_[0].tail);
}

DirectedLabeledTree DirectedLabeledTree::canonical_form() const {
    auto map = canonical_vertex_map();
    std::vector<Edge> edges(edges_.size());
    for (size_t c = 0; c < edges_.size(); ++c)
        edges[c] = {map[static_cast<size_t>(edges_[c].tail)],
                    map[static_cast<size_t>(edges_[c].head)]};
    return DirectedLabeledTree(colors_, std::move(edges));
}

bool DirectedLabeledTree::is_canonical() const {
    auto map = canonical_vertex_map();
    for (size_t v = 0; v < map.size(); ++v)
        if (map[v] != static_cast<int>(v))
            return false;
    return true;
}

bool DirectedLabeledTree::isomorphic_to(const DirectedLabeledTree& other) const {
    return colors_ == other.colors_ && canonical_form() == other.canonical_form();
}

std::string DirectedLabeledTree::serialize() const {
    DirectedLabeledTree canon = canonical_form();
    std::string out = "colors: " + colors_.join() + "\n";
    out += "vertices: " + std::to_string(vertex_count()) + "\n";
    for (int c = 0; c < color_count(); ++c) {
        const Edge& e = canon.edges_[static_cast<size_t>(c)];
        out += "edge " + colors_.name(c) + ": " + std::to_string(e.tail) + " -> "
               + std::to_string(e.head) + "\n";
    }
    return out;
}

DirectedLabeledTree DirectedLabeledTree::parse(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (!line.empty() && line[0] != '#')
                lines.push_back(line);
        }
    }
    size_t li = 0;
    auto next_line = [&](const char* what) -> std::string {
        if (li >= lines.size())
            throw ParseError(std::string("unexpected end of input, expected ") + what);
        return lines[li++];
    };

    std::string colors_line = next_line("'colors:' line");
    if (colors_line.rfind("colors:", 0) != 0)
        throw ParseError("expected 'colors:' line, got '" + colors_line + "'");
    std::vector<std::string> names;
    {
        std::istringstream in(colors_line.substr(7));
        std::string tok;
        while (in >> tok)
            names.push_back(tok);
    }
    ColorSet colors(std::move(names));
    const int n = colors.size();

    std::string vertices_line = next_line("'vertices:' line");
    if (vertices_line.rfind("vertices:", 0) != 0)
        throw ParseError("expected 'vertices:' line, got '" + vertices_line + "'");
    int vertex_count = parse_int(trim(vertices_line.substr(9)), "'vertices:' line");
    if (vertex_count != n + 1)
        throw ValidationError("vertex count " + std::to_string(vertex_count)
                              + " does not equal color count + 1 = " + std::to_string(n + 1));

    std::vector<Edge> edges(static_cast<size_t>(n));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        std::string line = next_line("edge line");
        if (line.rfind("edge ", 0) != 0)
            throw ParseError("expected edge line, got '" + line + "'");
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("malformed edge line '" + line + "'");
        std::string name = trim(line.substr(5, colon - 5));
        int color = colors.index_of(name);
        if (seen[static_cast<size_t>(color)])
            throw ParseError("duplicate edge for color '" + name + "'");
        seen[static_cast<size_t>(color)] = true;

        std::istringstream rest(line.substr(colon + 1));
        std::string tail_tok, arrow, head_tok, extra;
        if (!(rest >> tail_tok >> arrow >> head_tok) || arrow != "->" || (rest >> extra))
            throw ParseError("malformed edge line '" + line + "'");
        edges[static_cast<size_t>(color)] = {parse_int(tail_tok, "edge line"),
                                             parse_int(head_tok, "edge line")};
    }
    if (li < lines.size())
        throw ParseError("unexpected line '" + lines[li] + "'");
    return DirectedLabeledTree(std::move(colors), std::move(edges));
}

std::string DirectedLabeledTree::to_dot() const {
    std::string out = "digraph {\n";
    for (int v = 0; v < vertex_count(); ++v)
        out += "  v" + std::to_string(v) + ";\n";
    for (int c = 0; c < color_count(); ++c) {
        const Edge& e = edges_[static_cast<size_t>(c)];
        out += "  v" + std::to_string(e.tail) + " -> v" + std::to_string(e.head) + " [label=\""
               + colors_.name(c) + "\"];\n";
    }
    out += "}\n";
    return out;
}

namespace {

// Labeled tree on m vertices from a Prufer sequence of length m-2;
// edges returned with endpoints in ascending order.
std::vector<std::pair<int, int>> decode_prufer(const std::vector<int>& seq, int m) {
    std::vector<int> degree(static_cast<size_t>(m), 1);
    for (int s : seq)
        ++degree[static_cast<size_t>(s)];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m - 1));
    int ptr = 0;
    while (degree[static_cast<size_t>(ptr)] != 1)
        ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[static_cast<size_t>(s)] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[static_cast<size_t>(ptr)] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, m - 1), std::max(leaf, m - 1));
    return edges;
}

std::uint64_t expected_tree_count(int n) {
    if (n == 1)
        return 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i)
        count *= 2;
    for (int i = 0; i < n - 2; ++i)
        count *= static_cast<std::uint64_t>(n + 1);
    return count;
}

} // namespace

std::vector<DirectedLabeledTree> enumerate_directed_trees(const ColorSet& colors,
                                                          int max_colors) {
    const int n = colors.size();
    if (n > max_colors)
        throw LimitError("color count " + std::to_string(n) + " exceeds enumeration cap "
                         + std::to_string(max_colors));
    if (n > 8)
        throw LimitError("tree enumeration supports at most 8 colors");
    const int m = n + 1; // vertices

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<size_t>(expected_tree_count(n) * 2));

    std::vector<int> prufer(static_cast<size_t>(std::max(0, m - 2)), 0);
    bool more_sequences = true;
    while (more_sequences) {
        auto base = decode_prufer(prufer, m);

        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // color c labels base edge perm[c]
            std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(m));
            for (int c = 0; c < n; ++c) {
                auto [u, v] = base[static_cast<size_t>(perm[static_cast<size_t>(c)])];
                adj[static_cast<size_t>(u)].emplace_back(c, v);
                adj[static_cast<size_t>(v)].emplace_back(c, u);
            }
            for (auto& list : adj)
                std::sort(list.begin(), list.end());

            // The canonical numbering depends only on which endpoint of the
            // least-colored edge is its tail, so two BFS passes cover all
            // 2^n orientations.
            auto [u0, v0] = base[static_cast<size_t>(perm[0])];
            auto map_u = bfs_order(adj, u0);
            auto map_v = bfs_order(adj, v0);

            for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
                const auto& map = (mask & 1) ? map_v : map_u;
                std::uint64_t enc = 0;
                for (int c = 0; c < n; ++c) {
                    auto [u, v] = base[static_cast<size_t>(perm[static_cast<size_t>(c)])];
                    int tail = (mask >> c & 1) ? v : u;
                    int head = (mask >> c & 1) ? u : v;
                    enc = enc << 8 | static_cast<std::uint64_t>(map[static_cast<size_t>(tail)]) << 4
                          | static_cast<std::uint64_t>(map[static_cast<size_t>(head)]);
                }
                seen.insert(enc);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        // odometer over Prufer sequences
        more_sequences = false;
        for (size_t i = 0; i < prufer.size(); ++i) {
            if (++prufer[i] < m) {
                more_sequences = true;
                break;
            }
            prufer[i] = 0;
        }
    }

    std::vector<std::uint64_t> encodings(seen.begin(), seen.end());
    std::sort(encodings.begin(), encodings.end());

    std::vector<DirectedLabeledTree> trees;
    trees.reserve(encodings.size());
    for (std::uint64_t enc : encodings) {
        std::vector<Edge> edges(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) {
            std::uint64_t byte = enc >> (8 * (n - 1 - c));
            edges[static_cast<size_t>(c)] = {static_cast<int>(byte >> 4 & 15),
                                             static_cast<int>(byte & 15)};
        }
        trees.emplace_back(colors, std::move(edges));
    }
    return trees;
}

} // namespace sigma
