#include "sigma/line.hpp"

#include <optional>
#include <sstream>
#include <utility>

#include "sigma/errors.hpp"
#include "table_io.hpp"

namespace sigma {

namespace {

// First pair of distinct colors breaking the extension condition for the
// given column of an n x (n+2) table: S[a][b] != S[a][col] and
// S[b][a] != S[b][col]. The condition is symmetric in a, b.
std::optional<std::pair<int, int>> extension_violation(const std::vector<std::uint8_t>& table,
                                                       int n, int col) {
    const auto columns = static_cast<size_t>(n) + 2;
    auto at = [&](int r, int c) {
        return static_cast<int>(table[static_cast<size_t>(r) * columns + static_cast<size_t>(c)]);
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (at(a, b) != at(a, col) && at(b, a) != at(b, col))
                return std::pair{a, b};
    return std::nullopt;
}

std::vector<std::uint8_t> restriction_table(const std::vector<std::uint8_t>& table, int n) {
    const auto columns = static_cast<size_t>(n) + 2;
    std::vector<std::uint8_t> out(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                table[static_cast<size_t>(a) * columns + static_cast<size_t>(b)];
    return out;
}

} // namespace

LineEnd LineEnd::parse(std::string_view text, const ColorSet& colors) {
    if (text == "-inf")
        return minus_inf();
    if (text == "+inf")
        return plus_inf();
    return color(colors.index_of(text));
}

std::string LineEnd::to_string(const ColorSet& colors) const {
    if (is_minus_inf())
        return "-inf";
    if (is_plus_inf())
        return "+inf";
    return colors.name(v_);
}

PointedTree::PointedTree(DirectedLabeledTree tree, int x, int y)
    : tree_(tree.canonical_form()), x_(0), y_(0) {
    if (x < 0 || x >= tree.vertex_count() || y < 0 || y >= tree.vertex_count())
        throw ValidationError("marked vertices must lie in [0, "
                              + std::to_string(tree.vertex_count()) + ")");
    auto map = tree.canonical_vertex_map();
    x_ = map[static_cast<size_t>(x)];
    y_ = map[static_cast<size_t>(y)];
}

std::string PointedTree::serialize() const {
    return tree_.serialize() + "x: " + std::to_string(x_) + "\ny: " + std::to_string(y_) + "\n";
}

PointedTree PointedTree::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string tree_text;
    int x = -1, y = -1;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            tree_text += '\n';
            continue;
        }
        size_t e = line.find_last_not_of(" \t\r");
        std::string t = line.substr(b, e - b + 1);
        if (t.rfind("x:", 0) != 0 && t.rfind("y:", 0) != 0) {
            tree_text += line;
            tree_text += '\n';
            continue;
        }
        char which = t[0];
        std::string token = t.substr(2);
        size_t tb = token.find_first_not_of(" \t");
        token = (tb == std::string::npos) ? "" : token.substr(tb);
        int value = 0;
        size_t pos = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            pos = token.size() + 1;
        }
        if (pos != token.size())
            throw ParseError(std::string("expected a vertex number after '") + which + ":', got '"
                             + token + "'");
        int& slot = (which == 'x') ? x : y;
        if (slot >= 0)
            throw ParseError(std::string("duplicate '") + which + ":' line");
        slot = value;
    }
    if (x < 0)
        throw ParseError("missing 'x:' line");
    if (y < 0)
        throw ParseError("missing 'y:' line");
    return PointedTree(DirectedLabeledTree::parse(tree_text), x, y);
}

ExtendedStructure::ExtendedStructure(ColorSet colors, std::vector<std::uint8_t> table)
    : colors_(std::move(colors)), table_(std::move(table)) {}

ExtendedStructure ExtendedStructure::unchecked(ColorSet colors, std::vector<std::uint8_t> table) {
    return ExtendedStructure(std::move(colors), std::move(table));
}

ExtendedStructure ExtendedStructure::validated(ColorSet colors, std::vector<std::uint8_t> table) {
    const int n = colors.size();
    const auto columns = static_cast<size_t>(n) + 2;
    if (table.size() != static_cast<size_t>(n) * columns)
        throw ValidationError("extended table has " + std::to_string(table.size())
                              + " entries, expected " + std::to_string(static_cast<size_t>(n) * columns));
    for (auto v : table)
        if (v > 1)
            throw ValidationError("extended table entries must be 0 or 1");
    for (int a = 0; a < n; ++a)
        if (table[static_cast<size_t>(a) * columns + static_cast<size_t>(a)])
            throw ValidationError("diagonal entry S[" + colors.name(a) + "][" + colors.name(a)
                                  + "] must be 0");
    if (auto v = find_law_violation(restriction_table(table, n), n))
        throw ValidationError("compatibility law fails at (" + colors.name(v->a) + ", "
                              + colors.name(v->b) + ", " + colors.name(v->c) + ")");
    for (int col = n; col <= n + 1; ++col)
        if (auto p = extension_violation(table, n, col))
            throw ValidationError(std::string("extension condition fails for the ")
                                  + (col == n ? "-inf" : "+inf") + " column at ("
                                  + colors.name(p->first) + ", " + colors.name(p->second) + ")");
    return ExtendedStructure(std::move(colors), std::move(table));
}

ObStructure ExtendedStructure::restriction() const {
    return ObStructure::unchecked(colors_, restriction_table(table_, colors_.size()));
}

std::string ExtendedStructure::serialize() const {
    return detail::bit_rows(colors_, table_, static_cast<size_t>(colors_.size()) + 2);
}

ExtendedStructure ExtendedStructure::parse(const std::string& text) {
    auto [colors, table] = detail::parse_bit_rows(text, 2);
    return validated(std::move(colors), std::move(table));
}

ExtendedStructure extended_from_pointed(const PointedTree& pointed) {
    const DirectedLabeledTree& tree = pointed.tree();
    const int n = tree.color_count();
    const auto columns = static_cast<size_t>(n) + 2;
    std::vector<std::uint8_t> table(static_cast<size_t>(n) * columns, 0);
    for (int a = 0; a < n; ++a) {
        std::uint64_t side = tree.head_side(a);
        auto* row = table.data() + static_cast<size_t>(a) * columns;
        for (int b = 0; b < n; ++b)
            if (b != a)
                row[b] = static_cast<std::uint8_t>(side >> tree.edge(b).tail & 1);
        row[n] = static_cast<std::uint8_t>(side >> pointed.y() & 1);
        row[n + 1] = static_cast<std::uint8_t>(side >> pointed.x() & 1);
    }
    return ExtendedStructure::validated(tree.colors(), std::move(table));
}

PointedTree pointed_from_extended(const ExtendedStructure& extended) {
    const int n = extended.color_count();
    DirectedLabeledTree tree = tree_from_obs(extended.restriction());
    std::vector<std::uint64_t> side(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        side[static_cast<size_t>(a)] = tree.head_side(a);
    auto match = [&](int col, const char* name) {
        int found = -1;
        for (int v = 0; v < tree.vertex_count(); ++v) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                ok = static_cast<int>(side[static_cast<size_t>(a)] >> v & 1)
                     == extended.at(a, col);
            if (!ok)
                continue;
            if (found >= 0)
                throw ValidationError(std::string("multiple vertices match the ") + name
                                      + " column");
            found = v;
        }
        if (found < 0)
            throw ValidationError(std::string("no vertex matches the ") + name + " column");
        return found;
    };
    int x = match(extended.plus_inf_column(), "+inf");
    int y = match(extended.minus_inf_column(), "-inf");
    return PointedTree(std::move(tree), x, y);
}

std::vector<ExtendedStructure> enumerate_extended(const ColorSet& colors, int max_colors) {
    const int n = colors.size();
    if (n > max_colors)
        throw LimitError("color count " + std::to_string(n) + " exceeds enumeration cap "
                         + std::to_string(max_colors));
    if (n > 7)
        throw LimitError("extended enumeration supports at most 7 colors");
    const auto columns = static_cast<size_t>(n) + 2;
    const int bit_count = n * (n + 1);
    std::vector<std::pair<int, int>> cells; // non-diagonal, row-major
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n + 2; ++b)
            if (b != a)
                cells.emplace_back(a, b);

    std::vector<ExtendedStructure> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bit_count); ++mask) {
        std::vector<std::uint8_t> table(static_cast<size_t>(n) * columns, 0);
        for (int k = 0; k < bit_count; ++k) {
            auto [a, b] = cells[static_cast<size_t>(k)];
            table[static_cast<size_t>(a) * columns + static_cast<size_t>(b)] =
                static_cast<std::uint8_t>(mask >> (bit_count - 1 - k) & 1);
        }
        if (find_law_violation(restriction_table(table, n), n))
            continue;
        if (extension_violation(table, n, n) || extension_violation(table, n, n + 1))
            continue;
        out.push_back(ExtendedStructure::unchecked(colors, std::move(table)));
    }
    return out;
}

LineSymbol::LineSymbol(ColorSet colors, std::vector<std::int64_t> eta)
    : colors_(std::move(colors)), eta_(std::move(eta)) {
    const auto n = static_cast<size_t>(colors_.size());
    if (eta_.size() != (n + 1) * (n + 1) * n)
        throw ValidationError("line symbol table has " + std::to_string(eta_.size())
                              + " entries, expected " + std::to_string((n + 1) * (n + 1) * n));
}

namespace {

int left_index(const LineEnd& a, int n) {
    if (a.is_plus_inf())
        throw ValidationError("+inf cannot be a left endpoint");
    return a.is_color() ? a.color_index() : n;
}

int right_index(const LineEnd& b, int n) {
    if (b.is_minus_inf())
        throw ValidationError("-inf cannot be a right endpoint");
    return b.is_color() ? b.color_index() : n;
}

// nu over the slice w[begin..end); the right endpoint index shifts onto the
// consumed letter as the recursion peels letters off the right.
std::int64_t nu_range(const LineSymbol& symbol, int ai, int bi, const std::vector<int>& w,
                      size_t begin, size_t end) {
    if (end == begin)
        return 1;
    int last = w[end - 1];
    return symbol.eta_indexed(ai, bi, last) * nu_range(symbol, ai, last, w, begin, end - 1);
}

LineEnd left_end_of(int i, int n) {
    return i == n ? LineEnd::minus_inf() : LineEnd::color(i);
}

LineEnd right_end_of(int i, int n) {
    return i == n ? LineEnd::plus_inf() : LineEnd::color(i);
}

} // namespace

std::int64_t LineSymbol::eta(const LineEnd& a, const LineEnd& b, int c) const {
    const int n = colors_.size();
    return eta_indexed(left_index(a, n), right_index(b, n), c);
}

LineSymbol line_symbol(const ExtendedStructure& extended) {
    const int n = extended.color_count();
    // Left index n reads the -inf column, right index n the +inf column.
    auto sbar = [&](int c, int i, bool right) {
        if (i < n)
            return extended.at(c, i);
        return extended.at(c, right ? extended.plus_inf_column() : extended.minus_inf_column());
    };
    const auto un = static_cast<size_t>(n);
    std::vector<std::int64_t> eta((un + 1) * (un + 1) * un);
    for (int ai = 0; ai <= n; ++ai)
        for (int bi = 0; bi <= n; ++bi)
            for (int c = 0; c < n; ++c)
                eta[(static_cast<size_t>(ai) * (un + 1) + static_cast<size_t>(bi)) * un
                    + static_cast<size_t>(c)] =
                    sbar(c, ai, false) - sbar(c, bi, true) - (bi == c ? 1 : 0);
    return LineSymbol(extended.colors(), std::move(eta));
}

std::int64_t eval_line_measure(const LineSymbol& symbol, const LineEnd& a, const LineEnd& b,
                               const Word& w) {
    const int n = symbol.colors().size();
    return nu_range(symbol, left_index(a, n), right_index(b, n), w.letters(), 0,
                    w.letters().size());
}

std::int64_t eval_line_measure(const PointedTree& pointed, const LineEnd& a, const LineEnd& b,
                               const Word& w) {
    return eval_line_measure(line_symbol(extended_from_pointed(pointed)), a, b, w);
}

std::string LineSymbolViolation::describe(const ColorSet& colors) const {
    std::string inst = "(" + a.to_string(colors) + ", " + b.to_string(colors) + ", "
                       + colors.name(c) + ", " + colors.name(d) + ")";
    return "axiom " + std::to_string(axiom) + " fails at " + inst + ": " + std::to_string(lhs)
           + " != " + std::to_string(rhs);
}

std::vector<LineSymbolViolation> check_line_symbol_axioms(const LineSymbol& symbol) {
    const int n = symbol.colors().size();
    std::vector<LineSymbolViolation> violations;
    for (int ai = 0; ai <= n; ++ai)
        for (int bi = 0; bi <= n; ++bi)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    std::int64_t lhs1 = symbol.eta_indexed(ai, bi, c) * symbol.eta_indexed(c, bi, d);
                    std::int64_t rhs1 = symbol.eta_indexed(ai, bi, d) * symbol.eta_indexed(ai, d, c);
                    if (lhs1 != rhs1)
                        violations.push_back(
                            {1, left_end_of(ai, n), right_end_of(bi, n), c, d, lhs1, rhs1});
                    std::int64_t lhs2 = symbol.eta_indexed(ai, bi, c);
                    std::int64_t rhs2 = symbol.eta_indexed(ai, d, c)
                                        + symbol.eta_indexed(d, bi, c) + (c == d ? 1 : 0);
                    if (lhs2 != rhs2)
                        violations.push_back(
                            {2, left_end_of(ai, n), right_end_of(bi, n), c, d, lhs2, rhs2});
                }
    return violations;
}

std::string LineMeasureViolation::describe(const ColorSet& colors) const {
    std::string inst;
    if (axiom == 'b')
        inst = "nu[" + a.to_string(colors) + "][" + b.to_string(colors) + "](\""
               + w.to_string(colors) + "\" + " + colors.name(c) + " + \""
               + wprime.to_string(colors) + "\")";
    else
        inst = "nu[" + a.to_string(colors) + "][" + b.to_string(colors) + "](\""
               + w.to_string(colors) + "\") split at " + colors.name(c);
    return std::string("axiom (") + axiom + ") fails for " + inst + ": " + std::to_string(lhs)
           + " != " + std::to_string(rhs);
}

std::vector<LineMeasureViolation> verify_line_measure_axioms(const LineSymbol& symbol,
                                                             int max_len,
                                                             std::size_t max_violations) {
    const int n = symbol.colors().size();
    std::vector<LineMeasureViolation> violations;
    auto report = [&](LineMeasureViolation v) {
        violations.push_back(std::move(v));
        return violations.size() >= max_violations;
    };

    // (b) nu[a][b](w c w') = nu[a][b](w w') * nu[r][s](c); left index n is
    // -inf, right index n is +inf, interior letters are colors.
    for (int ai = 0; ai <= n; ++ai)
        for (int bi = 0; bi <= n; ++bi)
            for (int total = 0; total < max_len; ++total)
                for (int cut = 0; cut <= total; ++cut) {
                    bool stop = false;
                    for_each_word(n, total, [&](const std::vector<int>& u) {
                        if (stop)
                            return;
                        Word uw{std::vector<int>(u)};
                        Word w = uw.prefix(cut);
                        Word wp = uw.suffix(cut);
                        int r = w.empty() ? ai : w.at(w.size() - 1);
                        int s = wp.empty() ? bi : wp.at(0);
                        for (int c = 0; c < n; ++c) {
                            std::vector<int> spliced(u.begin(), u.begin() + cut);
                            spliced.push_back(c);
                            spliced.insert(spliced.end(), u.begin() + cut, u.end());
                            std::int64_t lhs =
                                nu_range(symbol, ai, bi, spliced, 0, spliced.size());
                            std::int64_t rhs = nu_range(symbol, ai, bi, u, 0, u.size())
                                               * symbol.eta_indexed(r, s, c);
                            if (lhs != rhs
                                && report({'b', left_end_of(ai, n), right_end_of(bi, n), w, wp,
                                           c, lhs, rhs})) {
                                stop = true;
                                return;
                            }
                        }
                    });
                    if (stop)
                        return violations;
                }

    if (violations.size() >= max_violations)
        return violations;

    // (c) nu[a][b](w) = sum_i nu[a][c](w[1..i]) nu[c][b](w(i..n])
    //                 + sum_{w_i = c} nu[a][c](w[1..i)) nu[c][b](w(i..n])
    for (int ai = 0; ai <= n; ++ai)
        for (int bi = 0; bi <= n; ++bi)
            for (int len = 0; len <= max_len; ++len) {
                bool stop = false;
                for_each_word(n, len, [&](const std::vector<int>& u) {
                    if (stop)
                        return;
                    std::int64_t lhs = nu_range(symbol, ai, bi, u, 0, u.size());
                    for (int c = 0; c < n; ++c) {
                        std::int64_t rhs = 0;
                        for (int i = 0; i <= len; ++i)
                            rhs += nu_range(symbol, ai, c, u, 0, static_cast<size_t>(i))
                                   * nu_range(symbol, c, bi, u, static_cast<size_t>(i), u.size());
                        for (int i = 1; i <= len; ++i)
                            if (u[static_cast<size_t>(i - 1)] == c)
                                rhs += nu_range(symbol, ai, c, u, 0, static_cast<size_t>(i - 1))
                                       * nu_range(symbol, c, bi, u, static_cast<size_t>(i),
                                                  u.size());
                        if (lhs != rhs
                            && report({'c', left_end_of(ai, n), right_end_of(bi, n),
                                       Word(std::vector<int>(u)), Word(), c, lhs, rhs})) {
                            stop = true;
                            return;
                        }
                    }
                });
                if (stop)
                    return violations;
            }
    return violations;
}

} // namespace sigma
