#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigma/bisection.hpp"
#include "sigma/color_set.hpp"
#include "sigma/tree.hpp"
#include "sigma/word.hpp"

namespace sigma {

// Endpoint on the line: a color, or one of the two ends at infinity.
// -inf may only stand on the left of a measure, +inf only on the right.
class LineEnd {
public:
    static LineEnd color(int c) { return LineEnd(c); }
    static LineEnd minus_inf() { return LineEnd(kMinus); }
    static LineEnd plus_inf() { return LineEnd(kPlus); }

    bool is_color() const { return v_ >= 0; }
    bool is_minus_inf() const { return v_ == kMinus; }
    bool is_plus_inf() const { return v_ == kPlus; }
    int color_index() const { return v_; }

    // "-inf", "+inf", or a color name.
    static LineEnd parse(std::string_view text, const ColorSet& colors);
    std::string to_string(const ColorSet& colors) const;

    bool operator==(const LineEnd&) const = default;

private:
    explicit LineEnd(int v) : v_(v) {}
    static constexpr int kMinus = -1;
    static constexpr int kPlus = -2;
    int v_;
};

// Tree with marked vertices: x corresponds to +inf, y to -inf (they may
// coincide). Stored in canonical form; construction canonicalizes and remaps
// the marks.
class PointedTree {
public:
    PointedTree(DirectedLabeledTree tree, int x, int y);

    const DirectedLabeledTree& tree() const { return tree_; }
    int x() const { return x_; }
    int y() const { return y_; }

    // Tree format plus trailing "x: <vertex>" and "y: <vertex>" lines.
    std::string serialize() const;
    static PointedTree parse(const std::string& text);

    bool operator==(const PointedTree&) const = default;

private:
    DirectedLabeledTree tree_;
    int x_;
    int y_;
};

// S : Sigma x (Sigma + {-inf, +inf}) -> {0,1}. Row a lists S[a][b] for the
// colors in order, then the -inf column, then the +inf column. The Sigma x
// Sigma restriction must be a valid ObStructure and each infinite column c
// must satisfy: for all distinct colors a, b, S[a][b] = S[a][c] or
// S[b][a] = S[b][c]. (For color columns that condition is implied by the
// compatibility law; the implication is a tested property.)
class ExtendedStructure {
public:
    static ExtendedStructure validated(ColorSet colors, std::vector<std::uint8_t> table);
    static ExtendedStructure unchecked(ColorSet colors, std::vector<std::uint8_t> table);

    const ColorSet& colors() const { return colors_; }
    int color_count() const { return colors_.size(); }

    // Column indices 0..n-1 are colors, n is -inf, n+1 is +inf.
    int minus_inf_column() const { return colors_.size(); }
    int plus_inf_column() const { return colors_.size() + 1; }
    int at(int a, int column) const {
        return table_[static_cast<size_t>(a) * (colors_.size() + 2)
                      + static_cast<size_t>(column)];
    }
    const std::vector<std::uint8_t>& table() const { return table_; }

    ObStructure restriction() const;

    std::string serialize() const;
    static ExtendedStructure parse(const std::string& text);

    bool operator==(const ExtendedStructure&) const = default;

private:
    ExtendedStructure(ColorSet colors, std::vector<std::uint8_t> table);

    ColorSet colors_;
    std::vector<std::uint8_t> table_; // row-major n x (n+2)
};

ExtendedStructure extended_from_pointed(const PointedTree& pointed);

// Inverse of extended_from_pointed: rebuilds the tree from the restriction
// and scans for the unique vertex matching each infinite column. Throws
// ValidationError naming the column when no vertex matches.
PointedTree pointed_from_extended(const ExtendedStructure& extended);

inline constexpr int kDefaultExtendedEnumCap = 3;

// Brute-force filter of all diagonal-zero tables; (2n+2)^n structures,
// sorted by table.
std::vector<ExtendedStructure> enumerate_extended(const ColorSet& colors,
                                                  int max_colors = kDefaultExtendedEnumCap);

// eta[a][b](c) for a in Sigma + {-inf}, b in Sigma + {+inf}, c in Sigma,
// by the same formula as the finite case with the infinite columns of S
// substituted and delta(b,c) = 0 for b = +inf.
class LineSymbol {
public:
    LineSymbol(ColorSet colors, std::vector<std::int64_t> eta);

    const ColorSet& colors() const { return colors_; }
    std::int64_t eta(const LineEnd& a, const LineEnd& b, int c) const;
    std::int64_t eta_indexed(int a, int b, int c) const { // a, b in 0..n; n = the infinity
        const auto n = static_cast<size_t>(colors_.size());
        return eta_[(static_cast<size_t>(a) * (n + 1) + static_cast<size_t>(b)) * n
                    + static_cast<size_t>(c)];
    }

    bool operator==(const LineSymbol&) const = default;

private:
    ColorSet colors_;
    std::vector<std::int64_t> eta_; // (n+1) x (n+1) x n
};

LineSymbol line_symbol(const ExtendedStructure& extended);

std::int64_t eval_line_measure(const LineSymbol& symbol, const LineEnd& a, const LineEnd& b,
                               const Word& w);
std::int64_t eval_line_measure(const PointedTree& pointed, const LineEnd& a, const LineEnd& b,
                               const Word& w);

struct LineSymbolViolation {
    int axiom = 0; // 1 or 2
    LineEnd a = LineEnd::minus_inf(), b = LineEnd::plus_inf();
    int c = 0, d = 0;
    std::int64_t lhs = 0, rhs = 0;

    std::string describe(const ColorSet& colors) const;
};

std::vector<LineSymbolViolation> check_line_symbol_axioms(const LineSymbol& symbol);

struct LineMeasureViolation {
    char axiom = 'b';
    LineEnd a = LineEnd::minus_inf(), b = LineEnd::plus_inf();
    Word w, wprime;
    int c = 0;
    std::int64_t lhs = 0, rhs = 0;

    std::string describe(const ColorSet& colors) const;
};

std::vector<LineMeasureViolation> verify_line_measure_axioms(
    const LineSymbol& symbol, int max_len,
    std::size_t max_violations = static_cast<std::size_t>(-1));

} // namespace sigma
