#include "sigma/measure.hpp"

#include <cstdio>

#include "sigma/bisection.hpp"
#include "sigma/errors.hpp"

namespace sigma {

namespace {

std::int64_t nu_recursive(const SigmaSymbol& symbol, int a, int b, const std::vector<int>& w,
                          size_t len) {
    if (len == 0)
        return 1;
    int last = w[len - 1];
    return symbol.eta(a, b, last) * nu_recursive(symbol, a, last, w, len - 1);
}

} // namespace

std::int64_t eval_recursive(const SigmaSymbol& symbol, int a, int b, const Word& w) {
    return nu_recursive(symbol, a, b, w.letters(), w.letters().size());
}

std::int64_t eval_product(const SigmaSymbol& symbol, int a, int b, const Word& w) {
    const int len = w.size();
    std::int64_t value = 1;
    for (int i = 0; i < len; ++i) {
        int left = (i == 0) ? a : w.at(i - 1);
        int right = (i == len - 1) ? b : w.at(i + 1);
        value *= symbol.eta(left, right, w.at(i));
    }
    return value;
}

WordClass classify_word(const DirectedLabeledTree& tree, int a, int b, const Word& w) {
    EdgePath path = tree.geodesic(a, b);
    std::vector<int> position(static_cast<size_t>(tree.color_count()), -1);
    for (size_t i = 0; i < path.size(); ++i)
        position[static_cast<size_t>(path[i])] = static_cast<int>(i);

    // Monotonic: every letter on the path, positions non-decreasing through
    // the augmented sequence a, w_1, ..., w_n, b (the endpoints hold the
    // extreme positions, so scanning w suffices).
    int prev = 0;
    for (int i = 0; i < w.size(); ++i) {
        int p = position[static_cast<size_t>(w.at(i))];
        if (p < 0 || p < prev)
            return {WordTag::not_monotonic, 0, 0};
        prev = p;
    }

    auto positive = [&](int x) {
        if (a == b)
            return true;
        if (x == a)
            return tree.points_toward(a, b) == 1;
        if (x == b)
            return tree.points_toward(b, a) == 0;
        return tree.points_toward(x, b) == 1;
    };

    std::vector<int> count(static_cast<size_t>(tree.color_count()), 0);
    ++count[static_cast<size_t>(a)];
    ++count[static_cast<size_t>(b)];
    for (int i = 0; i < w.size(); ++i)
        ++count[static_cast<size_t>(w.at(i))];
    for (int x = 0; x < tree.color_count(); ++x)
        if (count[static_cast<size_t>(x)] >= 2 && !positive(x))
            return {WordTag::repeated_negative, 0, 0};

    int m = 0;
    for (int i = 0; i < w.size(); ++i)
        if (positive(w.at(i)))
            ++m;
    return {WordTag::good, m, (m % 2 == 0) ? 1 : -1};
}

std::int64_t eval_closed_form(const DirectedLabeledTree& tree, int a, int b, const Word& w) {
    return classify_word(tree, a, b, w).sign;
}

std::string MeasureAxiomViolation::describe(const ColorSet& colors) const {
    std::string inst;
    if (axiom == 'b')
        inst = "nu[" + colors.name(a) + "][" + colors.name(b) + "](\""
               + w.to_string(colors) + "\" + " + colors.name(c) + " + \""
               + wprime.to_string(colors) + "\")";
    else
        inst = "nu[" + colors.name(a) + "][" + colors.name(b) + "](\"" + w.to_string(colors)
               + "\") split at " + colors.name(c);
    return std::string("axiom (") + axiom + ") fails for " + inst + ": " + std::to_string(lhs)
           + " != " + std::to_string(rhs);
}

std::vector<MeasureAxiomViolation> verify_measure_axioms(const SigmaSymbol& symbol, int max_len,
                                                         std::size_t max_violations) {
    const int n = symbol.color_count();
    std::vector<MeasureAxiomViolation> violations;
    auto report = [&](MeasureAxiomViolation v) {
        violations.push_back(std::move(v));
        return violations.size() >= max_violations;
    };

    // (b) nu[a][b](w c w') = nu[a][b](w w') * nu[r][s](c)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int total = 0; total < max_len; ++total)
                for (int cut = 0; cut <= total; ++cut) {
                    bool stop = false;
                    for_each_word(n, total, [&](const std::vector<int>& u) {
                        if (stop)
                            return;
                        Word uw{std::vector<int>(u)};
                        Word w = uw.prefix(cut);
                        Word wp = uw.suffix(cut);
                        int r = w.empty() ? a : w.at(w.size() - 1);
                        int s = wp.empty() ? b : wp.at(0);
                        for (int c = 0; c < n; ++c) {
                            std::vector<int> spliced(u.begin(), u.begin() + cut);
                            spliced.push_back(c);
                            spliced.insert(spliced.end(), u.begin() + cut, u.end());
                            std::int64_t lhs =
                                eval_recursive(symbol, a, b, Word(std::move(spliced)));
                            std::int64_t rhs = eval_recursive(symbol, a, b, uw)
                                               * symbol.eta(r, s, c);
                            if (lhs != rhs
                                && report({'b', a, b, w, wp, c, lhs, rhs})) {
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
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int len = 0; len <= max_len; ++len) {
                bool stop = false;
                for_each_word(n, len, [&](const std::vector<int>& u) {
                    if (stop)
                        return;
                    Word uw{std::vector<int>(u)};
                    std::int64_t lhs = eval_recursive(symbol, a, b, uw);
                    for (int c = 0; c < n; ++c) {
                        std::int64_t rhs = 0;
                        for (int i = 0; i <= len; ++i)
                            rhs += eval_recursive(symbol, a, c, uw.prefix(i))
                                   * eval_recursive(symbol, c, b, uw.suffix(i));
                        for (int i = 1; i <= len; ++i)
                            if (u[static_cast<size_t>(i - 1)] == c)
                                rhs += eval_recursive(symbol, a, c, uw.prefix(i - 1))
                                       * eval_recursive(symbol, c, b, uw.suffix(i));
                        if (lhs != rhs && report({'c', a, b, uw, Word(), c, lhs, rhs})) {
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

int default_axiom_word_length(int n) {
    return n <= 3 ? 4 : 3;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string UniversalVector::serialize() const {
    std::string out;
    char line[64];
    for (size_t i = 0; i < trees.size(); ++i) {
        std::snprintf(line, sizeof line, "%06zu-%016llx %lld\n", i,
                      static_cast<unsigned long long>(fnv1a64(trees[i].serialize())),
                      static_cast<long long>(values[i]));
        out += line;
    }
    return out;
}

UniversalVector universal_measure(const ColorSet& colors, int a, int b, const Word& w,
                                  int max_colors) {
    UniversalVector result;
    result.trees = enumerate_directed_trees(colors, max_colors);
    result.values.reserve(result.trees.size());
    for (const auto& tree : result.trees)
        result.values.push_back(eval_closed_form(tree, a, b, w));
    return result;
}

} // namespace sigma
