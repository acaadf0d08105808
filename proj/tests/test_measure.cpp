#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include <sigma/bisection.hpp>
#include <sigma/errors.hpp>
#include <sigma/measure.hpp>
#include <sigma/symbol.hpp>
#include <sigma/word.hpp>

#include "test_util.hpp"

using namespace sigma;
using test::letters;
using test::six_color_tree;

namespace {

SigmaSymbol six_color_symbol() {
    return symbol_from_obs(obs_from_tree(six_color_tree()));
}

// nu[a][b](w) by all three evaluators, checking they agree.
std::int64_t eval_all(const DirectedLabeledTree& t, const SigmaSymbol& sym, int a, int b,
                      const Word& w) {
    std::int64_t closed = eval_closed_form(t, a, b, w);
    CHECK(eval_recursive(sym, a, b, w) == closed);
    CHECK(eval_product(sym, a, b, w) == closed);
    return closed;
}

} // namespace

TEST_SUITE("measures") {

TEST_CASE("word parsing") {
    ColorSet six = letters(6);
    Word w = Word::parse("cdf", six);
    CHECK(w.letters() == std::vector<int>{2, 3, 5});
    CHECK(Word::parse("c,d,f", six) == w);
    CHECK(Word::parse("", six).empty());
    CHECK(w.to_string(six) == "cdf");

    CHECK(w.prefix(0).empty());
    CHECK(w.prefix(2) == Word::parse("cd", six));
    CHECK(w.suffix(1) == Word::parse("df", six));
    CHECK(w.suffix(3).empty());
    CHECK(w.at(0) == 2);
    CHECK(w.size() == 3);

    ColorSet named({"red", "g"});
    CHECK(Word::parse("red", named).letters() == std::vector<int>{0});
    CHECK(Word::parse("red,g,red", named).letters() == std::vector<int>{0, 1, 0});
    CHECK(Word::parse("red,g", named).to_string(named) == "red,g");
    CHECK_THROWS_AS(Word::parse("rg", named), ParseError);
    CHECK_THROWS_AS(Word::parse("a,,b", six), ParseError);
    CHECK_THROWS_AS(Word::parse("z", six), ParseError);
}

TEST_CASE("empty word evaluates to one") {
    DirectedLabeledTree t = six_color_tree();
    SigmaSymbol sym = six_color_symbol();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(eval_all(t, sym, a, b, Word()) == 1);
}

TEST_CASE("equal endpoints count every letter as positive") {
    DirectedLabeledTree t = six_color_tree();
    SigmaSymbol sym = six_color_symbol();
    ColorSet cs = t.colors();
    int a = cs.index_of("a");
    CHECK(eval_all(t, sym, a, a, Word::parse("a", cs)) == -1);
    CHECK(eval_all(t, sym, a, a, Word::parse("aaa", cs)) == -1);
    CHECK(eval_all(t, sym, a, a, Word::parse("aa", cs)) == 1);
    CHECK(eval_all(t, sym, a, a, Word::parse("b", cs)) == 0);
}

TEST_CASE("six-color word values") {
    DirectedLabeledTree t = six_color_tree();
    SigmaSymbol sym = six_color_symbol();
    ColorSet cs = t.colors();
    int b = cs.index_of("b"), f = cs.index_of("f");

    CHECK(eval_all(t, sym, b, f, Word::parse("cdf", cs)) == 1);
    CHECK(eval_all(t, sym, b, f, Word::parse("e", cs)) == 0);
    CHECK(eval_all(t, sym, b, f, Word::parse("cc", cs)) == 1);
    CHECK(eval_all(t, sym, b, f, Word::parse("ccdf", cs)) == -1);
    CHECK(eval_all(t, sym, b, f, Word::parse("bc", cs)) == 0);
    CHECK(eval_all(t, sym, b, f, Word::parse("dd", cs)) == 0);
}

TEST_CASE("classification of words") {
    DirectedLabeledTree t = six_color_tree();
    ColorSet cs = t.colors();
    int b = cs.index_of("b"), f = cs.index_of("f");

    WordClass good = classify_word(t, b, f, Word::parse("cdf", cs));
    CHECK(good.tag == WordTag::good);
    CHECK(good.positive_count == 2);
    CHECK(good.sign == 1);

    WordClass three = classify_word(t, b, f, Word::parse("ccdf", cs));
    CHECK(three.tag == WordTag::good);
    CHECK(three.positive_count == 3);
    CHECK(three.sign == -1);

    WordClass empty = classify_word(t, b, f, Word());
    CHECK(empty.tag == WordTag::good);
    CHECK(empty.positive_count == 0);
    CHECK(empty.sign == 1);

    CHECK(classify_word(t, b, f, Word::parse("dd", cs)).tag == WordTag::repeated_negative);
    CHECK(classify_word(t, b, f, Word::parse("e", cs)).tag == WordTag::not_monotonic);
    CHECK(classify_word(t, b, f, Word::parse("fc", cs)).tag == WordTag::not_monotonic);
    CHECK(classify_word(t, b, f, Word::parse("dd", cs)).sign == 0);
}

TEST_CASE("nonzero words from b to f are c^i d^j f^l with j <= 1") {
    DirectedLabeledTree t = six_color_tree();
    SigmaSymbol sym = six_color_symbol();
    ColorSet cs = t.colors();
    int b = cs.index_of("b"), c = cs.index_of("c"), d = cs.index_of("d"), f = cs.index_of("f");

    for (int len = 0; len <= 4; ++len) {
        for_each_word(6, len, [&](const std::vector<int>& ls) {
            Word w(ls);
            int i = 0, j = 0, l = 0;
            size_t pos = 0;
            while (pos < ls.size() && ls[pos] == c) { ++i; ++pos; }
            while (pos < ls.size() && ls[pos] == d) { ++j; ++pos; }
            while (pos < ls.size() && ls[pos] == f) { ++l; ++pos; }
            bool shaped = pos == ls.size() && j <= 1;
            std::int64_t expected = shaped ? ((i + l) % 2 ? -1 : 1) : 0;
            CHECK(eval_all(t, sym, b, f, w) == expected);
        });
    }
}

TEST_CASE("evaluators agree on every tree up to two colors") {
    for (int n = 1; n <= 2; ++n) {
        ColorSet cs = letters(n);
        for (const auto& t : enumerate_directed_trees(cs)) {
            SigmaSymbol sym = symbol_from_obs(obs_from_tree(t));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int len = 0; len <= 4; ++len)
                        for_each_word(n, len, [&](const std::vector<int>& ls) {
                            eval_all(t, sym, a, b, Word(ls));
                        });
        }
    }
}

TEST_CASE("measure axioms hold on tree symbols") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_directed_trees(letters(n)))
            CHECK(verify_measure_axioms(symbol_from_obs(obs_from_tree(t)), 4).empty());
}

TEST_CASE("any single-entry corruption violates the axioms at depth two") {
    for (const auto& s : enumerate_obs(letters(2))) {
        SigmaSymbol sym = symbol_from_obs(s);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int delta : {1, -1}) {
                        SigmaSymbol mutated =
                            sym.with_entry(a, b, c, sym.eta(a, b, c) + delta);
                        CHECK(!verify_measure_axioms(mutated, 2, 1).empty());
                    }
    }
}

TEST_CASE("violation descriptions carry the axiom name") {
    SigmaSymbol sym = symbol_from_obs(enumerate_obs(letters(2)).front());
    SigmaSymbol mutated = sym.with_entry(0, 1, 1, sym.eta(0, 1, 1) + 1);
    auto violations = verify_measure_axioms(mutated, 2, 1);
    REQUIRE(!violations.empty());
    std::string text = violations.front().describe(letters(2));
    CHECK(text.find("axiom") != std::string::npos);
}

TEST_CASE("vanishing factor in the augmented word forces zero") {
    for (int n = 1; n <= 2; ++n) {
        ColorSet cs = letters(n);
        for (const auto& t : enumerate_directed_trees(cs)) {
            SigmaSymbol sym = symbol_from_obs(obs_from_tree(t));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int len = 1; len <= 4; ++len)
                        for_each_word(n, len, [&](const std::vector<int>& ls) {
                            std::vector<int> aug;
                            aug.push_back(a);
                            aug.insert(aug.end(), ls.begin(), ls.end());
                            aug.push_back(b);
                            bool zero_factor = false;
                            for (size_t i = 0; i + 2 < aug.size() && !zero_factor; ++i)
                                for (size_t j = i + 1; j + 1 < aug.size() && !zero_factor; ++j)
                                    for (size_t l = j + 1; l < aug.size(); ++l)
                                        if (sym.eta(aug[i], aug[l], aug[j]) == 0) {
                                            zero_factor = true;
                                            break;
                                        }
                            if (zero_factor)
                                CHECK(eval_recursive(sym, a, b, Word(ls)) == 0);
                        });
        }
    }
}

TEST_CASE("default exhaustive depth") {
    CHECK(default_axiom_word_length(1) == 4);
    CHECK(default_axiom_word_length(3) == 4);
    CHECK(default_axiom_word_length(4) == 3);
    CHECK(default_axiom_word_length(5) == 3);
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("universal vector") {
    ColorSet one = letters(1);
    UniversalVector empty = universal_measure(one, 0, 0, Word());
    CHECK(empty.values == std::vector<std::int64_t>{1});

    UniversalVector single = universal_measure(one, 0, 0, Word::parse("a", one));
    CHECK(single.values == std::vector<std::int64_t>{-1});
    CHECK(single.serialize() == "000000-617eab54fcee7a19 -1\n");

    ColorSet two = letters(2);
    UniversalVector pair = universal_measure(two, 0, 1, Word::parse("a", two));
    CHECK(pair.values == std::vector<std::int64_t>{0, -1, 0, -1});
    CHECK(pair.serialize() ==
          "000000-bde34116be21c0fe 0\n"
          "000001-8825629761624159 -1\n"
          "000002-f7bab4ccbd3626fa 0\n"
          "000003-f7be16ccbd390357 -1\n");

    UniversalVector ones = universal_measure(two, 0, 1, Word());
    CHECK(ones.values == std::vector<std::int64_t>(4, 1));

    CHECK_THROWS_AS(universal_measure(letters(6), 0, 1, Word()), LimitError);
}

} // TEST_SUITE
