#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma/color_set.hpp"
#include "sigma/errors.hpp"
#include "sigma/tree.hpp"

namespace sigma {

// Oriented bisection structure: S : Sigma x Sigma -> {0,1} with zero
// diagonal, subject to the compatibility law
//   (S[a][b] - S[a][c]) * (S[b][a] - S[b][c]) = 0
// for all ordered triples of distinct colors. These are exactly the
// structures arising from directed labeled trees via S[a][b] =
// points_toward(a, b), and the two maps below are mutually inverse.
class ObStructure {
public:
    static ObStructure validated(ColorSet colors, std::vector<std::uint8_t> table);
    static ObStructure unchecked(ColorSet colors, std::vector<std::uint8_t> table);

    const ColorSet& colors() const { return colors_; }
    int color_count() const { return colors_.size(); }
    int at(int a, int b) const {
        return table_[static_cast<size_t>(a) * colors_.size() + static_cast<size_t>(b)];
    }
    const std::vector<std::uint8_t>& table() const { return table_; }

    // "colors:" header line, then one row of space-separated bits per color.
    std::string serialize() const;
    static ObStructure parse(const std::string& text);

    bool operator==(const ObStructure&) const = default;

private:
    ObStructure(ColorSet colors, std::vector<std::uint8_t> table);

    ColorSet colors_;
    std::vector<std::uint8_t> table_; // row-major n x n
};

// First ordered triple (a,b,c) of distinct colors violating the law, if any.
struct LawViolation {
    int a = 0, b = 0, c = 0;
};
std::optional<LawViolation> find_law_violation(const std::vector<std::uint8_t>& table, int n);

// Number of failures among the three equalities
//   S[x][y]=S[x][z], S[y][x]=S[y][z], S[z][x]=S[z][y]
// for one unordered triple. The law holds iff every triple has at most one
// failure; the equivalence of the two phrasings is a tested property.
int law_failure_count(const std::vector<std::uint8_t>& table, int n, int x, int y, int z);

ObStructure obs_from_tree(const DirectedLabeledTree& tree);
DirectedLabeledTree tree_from_obs(const ObStructure& obs);

// All valid structures, sorted by table (row-major). Equinumerous with
// enumerate_directed_trees.
std::vector<ObStructure> enumerate_obs(const ColorSet& colors, int max_colors = kDefaultEnumCap);

// Orientation-forgotten bisection structure: per-color rows of {0,1} with
// zero diagonal, normalized so the first off-diagonal entry of every row is
// 0, and any two of the three row equalities above agreeing per triple.
// Requires n >= 2. Each class lifts to exactly 2^n oriented structures.
class UnorientedBisection {
public:
    static UnorientedBisection validated(ColorSet colors, std::vector<std::uint8_t> table);
    static UnorientedBisection unchecked(ColorSet colors, std::vector<std::uint8_t> table);

    const ColorSet& colors() const { return colors_; }
    int at(int a, int b) const {
        return table_[static_cast<size_t>(a) * colors_.size() + static_cast<size_t>(b)];
    }
    const std::vector<std::uint8_t>& table() const { return table_; }

    std::string serialize() const;

    bool operator==(const UnorientedBisection&) const = default;

private:
    UnorientedBisection(ColorSet colors, std::vector<std::uint8_t> table);

    ColorSet colors_;
    std::vector<std::uint8_t> table_;
};

UnorientedBisection forget_orientation(const ObStructure& obs);

// All unoriented structures, sorted by table; (n+1)^(n-2) of them.
std::vector<UnorientedBisection> enumerate_unoriented(const ColorSet& colors,
                                                      int max_colors = kDefaultEnumCap);

} // namespace sigma
