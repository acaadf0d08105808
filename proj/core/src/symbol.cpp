#include "sigma/symbol.hpp"

#include "sigma/errors.hpp"

namespace sigma {

SigmaSymbol::SigmaSymbol(ColorSet colors, std::vector<std::int64_t> eta)
    : colors_(std::move(colors)), eta_(std::move(eta)) {
    const auto n = static_cast<size_t>(colors_.size());
    if (eta_.size() != n * n * n)
        throw ValidationError("symbol table has " + std::to_string(eta_.size())
                              + " entries, expected " + std::to_string(n * n * n));
}

SigmaSymbol SigmaSymbol::with_entry(int a, int b, int c, std::int64_t value) const {
    const auto n = static_cast<size_t>(colors_.size());
    std::vector<std::int64_t> eta(eta_);
    eta[(static_cast<size_t>(a) * n + static_cast<size_t>(b)) * n + static_cast<size_t>(c)] =
        value;
    return SigmaSymbol(colors_, std::move(eta));
}

std::string SymbolAxiomViolation::describe(const ColorSet& colors) const {
    std::string inst = "(" + colors.name(a) + ", " + colors.name(b) + ", " + colors.name(c)
                       + ", " + colors.name(d) + ")";
    return "axiom " + std::to_string(axiom) + " fails at " + inst + ": "
           + std::to_string(lhs) + " != " + std::to_string(rhs);
}

std::vector<SymbolAxiomViolation> check_symbol_axioms(const SigmaSymbol& symbol) {
    const int n = symbol.color_count();
    std::vector<SymbolAxiomViolation> violations;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    std::int64_t lhs1 = symbol.eta(a, b, c) * symbol.eta(c, b, d);
                    std::int64_t rhs1 = symbol.eta(a, b, d) * symbol.eta(a, d, c);
                    if (lhs1 != rhs1)
                        violations.push_back({1, a, b, c, d, lhs1, rhs1});
                    std::int64_t lhs2 = symbol.eta(a, b, c);
                    std::int64_t rhs2 =
                        symbol.eta(a, d, c) + symbol.eta(d, b, c) + (c == d ? 1 : 0);
                    if (lhs2 != rhs2)
                        violations.push_back({2, a, b, c, d, lhs2, rhs2});
                }
    return violations;
}

SigmaSymbol symbol_from_obs(const ObStructure& obs) {
    const int n = obs.color_count();
    const auto un = static_cast<size_t>(n);
    std::vector<std::int64_t> eta(un * un * un);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                eta[(static_cast<size_t>(a) * un + static_cast<size_t>(b)) * un
                    + static_cast<size_t>(c)] =
                    obs.at(c, a) - obs.at(c, b) - (b == c ? 1 : 0);
    return SigmaSymbol(obs.colors(), std::move(eta));
}

ObStructure obs_from_symbol(const SigmaSymbol& symbol) {
    const ColorSet& colors = symbol.colors();
    const int n = symbol.color_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a)
                continue;
            std::int64_t v = symbol.eta(a, b, a);
            if (v != 0 && v != -1)
                throw ValidationError("eta[" + colors.name(a) + "][" + colors.name(b) + "]("
                                      + colors.name(a) + ") = " + std::to_string(v)
                                      + " lies outside {0,-1}; the symbol is not realizable"
                                        " over a connected ring");
        }
    auto violations = check_symbol_axioms(symbol);
    if (!violations.empty())
        throw ValidationError(violations.front().describe(colors));

    std::vector<std::uint8_t> table(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (b != a)
                table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                    static_cast<std::uint8_t>(-symbol.eta(a, b, a));
    ObStructure obs = ObStructure::validated(colors, std::move(table));
    if (symbol_from_obs(obs) != symbol)
        throw ValidationError("symbol does not arise from any structure");
    return obs;
}

} // namespace sigma
