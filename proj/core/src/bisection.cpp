#include "sigma/bisection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "table_io.hpp"

namespace sigma {

namespace detail {

std::string bit_rows(const ColorSet& colors, const std::vector<std::uint8_t>& table,
                     size_t columns) {
    std::string out = "colors: " + colors.join() + "\n";
    const auto n = static_cast<size_t>(colors.size());
    for (size_t a = 0; a < n; ++a) {
        for (size_t col = 0; col < columns; ++col) {
            if (col)
                out += ' ';
            out += static_cast<char>('0' + table[a * columns + col]);
        }
        out += '\n';
    }
    return out;
}

std::pair<ColorSet, std::vector<std::uint8_t>> parse_bit_rows(const std::string& text,
                                                              int extra_columns) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line[0] != '#')
            lines.push_back(line);
    }
    if (lines.empty() || lines[0].rfind("colors:", 0) != 0)
        throw ParseError("expected 'colors:' line");
    std::vector<std::string> names;
    {
        std::istringstream cs(lines[0].substr(7));
        std::string tok;
        while (cs >> tok)
            names.push_back(tok);
    }
    ColorSet colors(std::move(names));
    const int n = colors.size();
    const int columns = n + extra_columns;
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " rows, got "
                         + std::to_string(lines.size() - 1));
    std::vector<std::uint8_t> table;
    table.reserve(static_cast<size_t>(n) * static_cast<size_t>(columns));
    for (int a = 0; a < n; ++a) {
        std::istringstream row(lines[static_cast<size_t>(a) + 1]);
        std::string tok;
        int got = 0;
        while (row >> tok) {
            if (tok != "0" && tok != "1")
                throw ParseError("table entries must be 0 or 1, got '" + tok + "'");
            table.push_back(tok == "1");
            ++got;
        }
        if (got != columns)
            throw ParseError("row '" + colors.name(a) + "' has " + std::to_string(got)
                             + " entries, expected " + std::to_string(columns));
    }
    return {std::move(colors), std::move(table)};
}

} // namespace detail

namespace {

void check_shape(const ColorSet& colors, const std::vector<std::uint8_t>& table, size_t columns,
                 const char* what) {
    const auto n = static_cast<size_t>(colors.size());
    if (table.size() != n * columns)
        throw ValidationError(std::string(what) + " table has " + std::to_string(table.size())
                              + " entries, expected " + std::to_string(n * columns));
    for (auto v : table)
        if (v > 1)
            throw ValidationError(std::string(what) + " table entries must be 0 or 1");
}

} // namespace

ObStructure::ObStructure(ColorSet colors, std::vector<std::uint8_t> table)
    : colors_(std::move(colors)), table_(std::move(table)) {}

ObStructure ObStructure::unchecked(ColorSet colors, std::vector<std::uint8_t> table) {
    return ObStructure(std::move(colors), std::move(table));
}

ObStructure ObStructure::validated(ColorSet colors, std::vector<std::uint8_t> table) {
    check_shape(colors, table, static_cast<size_t>(colors.size()), "structure");
    const int n = colors.size();
    for (int a = 0; a < n; ++a)
        if (table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(a)])
            throw ValidationError("diagonal entry S[" + colors.name(a) + "]["
                                  + colors.name(a) + "] must be 0");
    if (auto v = find_law_violation(table, n))
        throw ValidationError("compatibility law fails at (" + colors.name(v->a) + ", "
                              + colors.name(v->b) + ", " + colors.name(v->c) + ")");
    return ObStructure(std::move(colors), std::move(table));
}

std::string ObStructure::serialize() const {
    return detail::bit_rows(colors_, table_, static_cast<size_t>(colors_.size()));
}

ObStructure ObStructure::parse(const std::string& text) {
    auto [colors, table] = detail::parse_bit_rows(text, 0);
    return validated(std::move(colors), std::move(table));
}

std::optional<LawViolation> find_law_violation(const std::vector<std::uint8_t>& table, int n) {
    auto at = [&](int a, int b) {
        return static_cast<int>(table[static_cast<size_t>(a) * static_cast<size_t>(n)
                                      + static_cast<size_t>(b)]);
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a)
                continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b)
                    continue;
                if ((at(a, b) - at(a, c)) * (at(b, a) - at(b, c)) != 0)
                    return LawViolation{a, b, c};
            }
        }
    return std::nullopt;
}

int law_failure_count(const std::vector<std::uint8_t>& table, int n, int x, int y, int z) {
    auto at = [&](int a, int b) {
        return static_cast<int>(table[static_cast<size_t>(a) * static_cast<size_t>(n)
                                      + static_cast<size_t>(b)]);
    };
    return (at(x, y) != at(x, z)) + (at(y, x) != at(y, z)) + (at(z, x) != at(z, y));
}

ObStructure obs_from_tree(const DirectedLabeledTree& tree) {
    const int n = tree.color_count();
    std::vector<std::uint8_t> table(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        std::uint64_t side = tree.head_side(a);
        for (int b = 0; b < n; ++b)
            if (b != a)
                table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                    static_cast<std::uint8_t>(side >> tree.edge(b).tail & 1);
    }
    return ObStructure::validated(tree.colors(), std::move(table));
}

DirectedLabeledTree tree_from_obs(const ObStructure& obs) {
    const int n = obs.color_count();
    // Vertices are classes of (color, side) pairs: adjacent colors x, y glue
    // (x, S[x][y]) to (y, S[y][x]); edge x runs from class (x,0) to (x,1).
    auto adjacent = [&](int x, int y) {
        for (int z = 0; z < n; ++z)
            if (z != x && z != y && obs.at(z, x) != obs.at(z, y))
                return false;
        return true;
    };
    std::vector<int> parent(static_cast<size_t>(2 * n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v)
            v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        return v;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (adjacent(x, y)) {
                int a = find(2 * x + obs.at(x, y));
                int b = find(2 * y + obs.at(y, x));
                if (a != b)
                    parent[static_cast<size_t>(a)] = b;
            }
    std::vector<int> vertex_of(static_cast<size_t>(2 * n), -1);
    int vertex_count = 0;
    for (int node = 0; node < 2 * n; ++node) {
        int root = find(node);
        if (vertex_of[static_cast<size_t>(root)] < 0)
            vertex_of[static_cast<size_t>(root)] = vertex_count++;
        vertex_of[static_cast<size_t>(node)] = vertex_of[static_cast<size_t>(root)];
    }
    if (vertex_count != n + 1)
        throw ValidationError("structure does not define a tree: expected "
                              + std::to_string(n + 1) + " vertices, got "
                              + std::to_string(vertex_count));
    std::vector<Edge> edges(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        edges[static_cast<size_t>(x)] = {vertex_of[static_cast<size_t>(2 * x)],
                                         vertex_of[static_cast<size_t>(2 * x + 1)]};
    return DirectedLabeledTree(obs.colors(), std::move(edges)).canonical_form();
}

std::vector<ObStructure> enumerate_obs(const ColorSet& colors, int max_colors) {
    const int n = colors.size();
    if (n > max_colors)
        throw LimitError("color count " + std::to_string(n) + " exceeds enumeration cap "
                         + std::to_string(max_colors));
    const int bit_count = n * (n - 1);
    std::vector<std::pair<int, int>> cells; // off-diagonal, row-major
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (b != a)
                cells.emplace_back(a, b);

    std::vector<ObStructure> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bit_count); ++mask) {
        std::vector<std::uint8_t> table(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (int k = 0; k < bit_count; ++k) {
            auto [a, b] = cells[static_cast<size_t>(k)];
            table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<std::uint8_t>(mask >> (bit_count - 1 - k) & 1);
        }
        if (!find_law_violation(table, n))
            out.push_back(ObStructure::unchecked(colors, std::move(table)));
    }
    return out;
}

UnorientedBisection::UnorientedBisection(ColorSet colors, std::vector<std::uint8_t> table)
    : colors_(std::move(colors)), table_(std::move(table)) {}

UnorientedBisection UnorientedBisection::unchecked(ColorSet colors,
                                                   std::vector<std::uint8_t> table) {
    return UnorientedBisection(std::move(colors), std::move(table));
}

UnorientedBisection UnorientedBisection::validated(ColorSet colors,
                                                   std::vector<std::uint8_t> table) {
    check_shape(colors, table, static_cast<size_t>(colors.size()), "structure");
    const int n = colors.size();
    auto at = [&](int a, int b) {
        return static_cast<int>(table[static_cast<size_t>(a) * static_cast<size_t>(n)
                                      + static_cast<size_t>(b)]);
    };
    for (int a = 0; a < n; ++a) {
        if (at(a, a))
            throw ValidationError("diagonal entry of row '" + colors.name(a) + "' must be 0");
        int first = (a == 0) ? 1 : 0;
        if (at(a, first))
            throw ValidationError("row '" + colors.name(a)
                                  + "' is not normalized: first off-diagonal entry must be 0");
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                if (law_failure_count(table, n, x, y, z) > 1)
                    throw ValidationError("triple condition fails at {" + colors.name(x) + ", "
                                          + colors.name(y) + ", " + colors.name(z) + "}");
    return UnorientedBisection(std::move(colors), std::move(table));
}

std::string UnorientedBisection::serialize() const {
    return detail::bit_rows(colors_, table_, static_cast<size_t>(colors_.size()));
}

UnorientedBisection forget_orientation(const ObStructure& obs) {
    const int n = obs.color_count();
    std::vector<std::uint8_t> table(obs.table());
    for (int a = 0; a < n; ++a) {
        int first = (a == 0) ? 1 : 0;
        if (obs.at(a, first))
            for (int b = 0; b < n; ++b)
                if (b != a)
                    table[static_cast<size_t>(a) * static_cast<size_t>(n)
                          + static_cast<size_t>(b)] ^= 1;
    }
    return UnorientedBisection::validated(obs.colors(), std::move(table));
}

std::vector<UnorientedBisection> enumerate_unoriented(const ColorSet& colors, int max_colors) {
    const int n = colors.size();
    if (n < 2)
        throw ValidationError("unoriented structures require at least 2 colors");
    if (n > max_colors)
        throw LimitError("color count " + std::to_string(n) + " exceeds enumeration cap "
                         + std::to_string(max_colors));
    std::vector<std::pair<int, int>> cells; // free cells: off-diagonal except first per row
    for (int a = 0; a < n; ++a) {
        bool skipped_first = false;
        for (int b = 0; b < n; ++b) {
            if (b == a)
                continue;
            if (!skipped_first) {
                skipped_first = true;
                continue;
            }
            cells.emplace_back(a, b);
        }
    }
    const int bit_count = static_cast<int>(cells.size());

    std::vector<UnorientedBisection> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bit_count); ++mask) {
        std::vector<std::uint8_t> table(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (int k = 0; k < bit_count; ++k) {
            auto [a, b] = cells[static_cast<size_t>(k)];
            table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<std::uint8_t>(mask >> (bit_count - 1 - k) & 1);
        }
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = x + 1; y < n && ok; ++y)
                for (int z = y + 1; z < n && ok; ++z)
                    ok = law_failure_count(table, n, x, y, z) <= 1;
        if (ok)
            out.push_back(UnorientedBisection::unchecked(colors, std::move(table)));
    }
    return out;
}

} // namespace sigma
