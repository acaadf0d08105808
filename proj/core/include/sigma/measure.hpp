#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigma/symbol.hpp"
#include "sigma/tree.hpp"
#include "sigma/word.hpp"

namespace sigma {

// The measure determined by a symbol assigns an integer nu[a][b](w) to
// endpoint colors a, b and a word w. Three equivalent evaluators:
//
//   eval_recursive    nu[a][b](empty) = 1,
//                     nu[a][b](w) = eta[a][b](w_n) * nu[a][w_n](w[1..n-1])
//   eval_product      product over i of eta[w_{i-1}][w_{i+1}](w_i), with
//                     w_0 = a and w_{n+1} = b
//   eval_closed_form  (-1)^m on good words, 0 otherwise, from the tree alone
std::int64_t eval_recursive(const SigmaSymbol& symbol, int a, int b, const Word& w);
std::int64_t eval_product(const SigmaSymbol& symbol, int a, int b, const Word& w);

enum class WordTag { good, not_monotonic, repeated_negative };

struct WordClass {
    WordTag tag = WordTag::good;
    int positive_count = 0; // m; 0 unless good
    int sign = 0;           // (-1)^m when good, else 0
};

// Walks the augmented sequence a, w_1, ..., w_n, b along geodesic(a, b):
// every letter must sit on the path with non-decreasing positions
// (not_monotonic otherwise), and letters occurring at least twice in the
// augmented sequence must be positively oriented (repeated_negative
// otherwise). A path edge is positively oriented when it points away from a
// and toward b, with endpoint conventions: the edge a itself needs
// S[a][b] = 1, the edge b needs S[b][a] = 0, and for a = b every occurrence
// of a counts as positive. m counts positively oriented letters of w.
WordClass classify_word(const DirectedLabeledTree& tree, int a, int b, const Word& w);

std::int64_t eval_closed_form(const DirectedLabeledTree& tree, int a, int b, const Word& w);

struct MeasureAxiomViolation {
    char axiom = 'b'; // 'b': insertion axiom, 'c': splitting axiom
    int a = 0, b = 0; // endpoints
    Word w, wprime;   // axiom 'b': the two factors around c; axiom 'c': w only
    int c = 0;        // inserted / splitting color
    std::int64_t lhs = 0, rhs = 0;

    std::string describe(const ColorSet& colors) const;
};

// Exhaustively checks, over all endpoint pairs and all words up to max_len
// (total letter count including the inserted color for axiom 'b'):
//   (b) nu[a][b](w c w') = nu[a][b](w w') * nu[r][s](c)
//       where r is the last letter of w (a if empty) and s the first of w'
//       (b if empty);
//   (c) nu[a][b](w) = sum_i nu[a][c](w[1..i]) nu[c][b](w(i..n])
//                   + sum_{w_i = c} nu[a][c](w[1..i)) nu[c][b](w(i..n]).
// Stops after max_violations findings.
std::vector<MeasureAxiomViolation> verify_measure_axioms(
    const SigmaSymbol& symbol, int max_len,
    std::size_t max_violations = static_cast<std::size_t>(-1));

// Default exhaustive-check depth: 4 letters for n <= 3, 3 above.
int default_axiom_word_length(int n);

// Value of nu[a][b](w) on every tree over the color set, in enumeration
// order. The empty word gives the all-ones vector.
struct UniversalVector {
    std::vector<DirectedLabeledTree> trees;
    std::vector<std::int64_t> values;

    // One line per tree: "<id> <value>", id = zero-padded enumeration index
    // "-" FNV-1a hash of the serialized canonical tree.
    std::string serialize() const;
};

UniversalVector universal_measure(const ColorSet& colors, int a, int b, const Word& w,
                                  int max_colors = kDefaultEnumCap);

std::uint64_t fnv1a64(std::string_view text);

} // namespace sigma
