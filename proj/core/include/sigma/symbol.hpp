#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigma/bisection.hpp"
#include "sigma/color_set.hpp"

namespace sigma {

// Integer table eta[a][b](c) subject to the two axioms
//   (1) eta[a][b](c) * eta[c][b](d) = eta[a][b](d) * eta[a][d](c)
//   (2) eta[a][b](c) = eta[a][d](c) + eta[d][b](c) + delta(c,d)
// over all colors. Valid symbols correspond bijectively to ObStructures via
//   eta[a][b](c) = S[c][a] - S[c][b] - delta(b,c),   S[a][b] = -eta[a][b](a).
class SigmaSymbol {
public:
    SigmaSymbol(ColorSet colors, std::vector<std::int64_t> eta);

    const ColorSet& colors() const { return colors_; }
    int color_count() const { return colors_.size(); }
    std::int64_t eta(int a, int b, int c) const {
        const auto n = static_cast<size_t>(colors_.size());
        return eta_[(static_cast<size_t>(a) * n + static_cast<size_t>(b)) * n
                    + static_cast<size_t>(c)];
    }
    const std::vector<std::int64_t>& entries() const { return eta_; }

    SigmaSymbol with_entry(int a, int b, int c, std::int64_t value) const;

    bool operator==(const SigmaSymbol&) const = default;

private:
    ColorSet colors_;
    std::vector<std::int64_t> eta_; // row-major n x n x n
};

struct SymbolAxiomViolation {
    int axiom = 0; // 1 or 2
    int a = 0, b = 0, c = 0, d = 0;
    std::int64_t lhs = 0, rhs = 0;

    std::string describe(const ColorSet& colors) const;
};

// Exhaustive scan of both axioms over all quadruples; empty result means the
// table is a valid symbol.
std::vector<SymbolAxiomViolation> check_symbol_axioms(const SigmaSymbol& symbol);

SigmaSymbol symbol_from_obs(const ObStructure& obs);

// Inverse of symbol_from_obs. Throws ValidationError when some eta[a][b](a)
// lies outside {0,-1} (not realizable over a connected ring) or when an
// axiom fails.
ObStructure obs_from_symbol(const SigmaSymbol& symbol);

} // namespace sigma
