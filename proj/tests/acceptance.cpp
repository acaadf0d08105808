#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <sigma/bisection.hpp>
#include <sigma/line.hpp>
#include <sigma/measure.hpp>
#include <sigma/symbol.hpp>
#include <sigma/tree.hpp>
#include <sigma/word.hpp>

using namespace sigma;

namespace {

std::string g_cli;
std::string g_data;

ColorSet letters(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.emplace_back(1, static_cast<char>('a' + i));
    return ColorSet(std::move(names));
}

std::string capture(const std::string& command, int& exit_code) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool counts_criterion(std::string& why) {
    const std::vector<size_t> directed = {1, 4, 32, 400, 6912};
    for (int n = 1; n <= 5; ++n) {
        size_t got = enumerate_directed_trees(letters(n)).size();
        if (got != directed[static_cast<size_t>(n - 1)]) {
            why = "directed trees n=" + std::to_string(n) + ": " + std::to_string(got);
            return false;
        }
    }
    const std::vector<size_t> unoriented = {1, 4, 25, 216};
    for (int n = 2; n <= 5; ++n) {
        size_t got = enumerate_unoriented(letters(n)).size();
        if (got != unoriented[static_cast<size_t>(n - 2)]) {
            why = "unoriented n=" + std::to_string(n) + ": " + std::to_string(got);
            return false;
        }
    }
    return true;
}

bool equivalence_criterion(std::string& why) {
    for (int n = 1; n <= 4; ++n) {
        auto trees = enumerate_directed_trees(letters(n));
        auto structures = enumerate_obs(letters(n));
        if (trees.size() != structures.size()) {
            why = "counts differ at n=" + std::to_string(n);
            return false;
        }
        for (const auto& t : trees)
            if (tree_from_obs(obs_from_tree(t)) != t) {
                why = "tree round-trip fails at n=" + std::to_string(n);
                return false;
            }
        for (const auto& s : structures)
            if (obs_from_tree(tree_from_obs(s)) != s) {
                why = "structure round-trip fails at n=" + std::to_string(n);
                return false;
            }
    }
    return true;
}

bool symbol_criterion(std::string& why) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : enumerate_obs(letters(n)))
            if (!check_symbol_axioms(symbol_from_obs(s)).empty()) {
                why = "axiom violation at n=" + std::to_string(n);
                return false;
            }
    for (int n = 1; n <= 3; ++n)
        for (const auto& s : enumerate_obs(letters(n)))
            if (obs_from_symbol(symbol_from_obs(s)) != s) {
                why = "inversion fails at n=" + std::to_string(n);
                return false;
            }
    return true;
}

bool measure_axiom_criterion(std::string& why) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate_directed_trees(letters(n))) {
            SigmaSymbol sym = symbol_from_obs(obs_from_tree(t));
            if (!verify_measure_axioms(sym, 4).empty()) {
                why = "axiom violation on a valid symbol, n=" + std::to_string(n);
                return false;
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int delta : {1, -1}) {
                            SigmaSymbol bad =
                                sym.with_entry(a, b, c, sym.eta(a, b, c) + delta);
                            if (verify_measure_axioms(bad, 4, 1).empty()) {
                                why = "undetected mutation at n=" + std::to_string(n);
                                return false;
                            }
                        }
        }
    }
    return true;
}

bool agreement_criterion(std::string& why) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate_directed_trees(letters(n))) {
            SigmaSymbol sym = symbol_from_obs(obs_from_tree(t));
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    for (int len = 0; len <= 5 && ok; ++len)
                        for_each_word(n, len, [&](const std::vector<int>& ls) {
                            if (!ok)
                                return;
                            Word w(ls);
                            std::int64_t closed = eval_closed_form(t, a, b, w);
                            if (eval_recursive(sym, a, b, w) != closed
                                || eval_product(sym, a, b, w) != closed)
                                ok = false;
                        });
            if (!ok) {
                why = "evaluators disagree at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool golden_criterion(std::string& why) {
    const std::string expected =
        "colors: a b c d e f\n"
        "0 1 1 1 1 1\n"
        "0 0 0 0 0 0\n"
        "0 0 0 1 1 1\n"
        "1 1 1 0 0 0\n"
        "0 0 0 0 0 0\n"
        "0 0 0 0 0 0\n";
    int code = 0;
    std::string out =
        capture("\"" + g_cli + "\" table --tree \"" + g_data + "/six_color.tree\"", code);
    if (code != 0) {
        why = "table command exited with " + std::to_string(code);
        return false;
    }
    if (out != expected) {
        why = "table output differs from the golden table";
        return false;
    }

    std::ifstream in(g_data + "/six_color.tree", std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    DirectedLabeledTree tree = DirectedLabeledTree::parse(text.str());
    SigmaSymbol sym = symbol_from_obs(obs_from_tree(tree));
    ColorSet cs = tree.colors();
    int b = cs.index_of("b"), c = cs.index_of("c"), d = cs.index_of("d"), f = cs.index_of("f");
    bool ok = true;
    for (int len = 0; len <= 4 && ok; ++len) {
        for_each_word(6, len, [&](const std::vector<int>& ls) {
            if (!ok)
                return;
            size_t pos = 0;
            int i = 0, j = 0, l = 0;
            while (pos < ls.size() && ls[pos] == c) { ++i; ++pos; }
            while (pos < ls.size() && ls[pos] == d) { ++j; ++pos; }
            while (pos < ls.size() && ls[pos] == f) { ++l; ++pos; }
            bool shaped = pos == ls.size() && j <= 1;
            std::int64_t expect = shaped ? ((i + l) % 2 ? -1 : 1) : 0;
            Word w(ls);
            if (eval_closed_form(tree, b, f, w) != expect
                || eval_recursive(sym, b, f, w) != expect)
                ok = false;
        });
    }
    if (!ok) {
        why = "word support from b to f is not c^i d^j f^l (j <= 1)";
        return false;
    }
    return true;
}

bool extended_criterion(std::string& why) {
    const std::vector<size_t> expected = {4, 36, 512};
    for (int n = 1; n <= 3; ++n) {
        auto structures = enumerate_extended(letters(n));
        size_t trees = enumerate_directed_trees(letters(n)).size();
        size_t want = expected[static_cast<size_t>(n - 1)];
        if (structures.size() != want
            || structures.size() != static_cast<size_t>((n + 1) * (n + 1)) * trees) {
            why = "extended count n=" + std::to_string(n) + ": "
                  + std::to_string(structures.size());
            return false;
        }
        for (const auto& e : structures)
            if (extended_from_pointed(pointed_from_extended(e)) != e) {
                why = "extended round-trip fails at n=" + std::to_string(n);
                return false;
            }
        for (const auto& t : enumerate_directed_trees(letters(n)))
            for (int x = 0; x <= n; ++x)
                for (int y = 0; y <= n; ++y) {
                    PointedTree p(t, x, y);
                    if (pointed_from_extended(extended_from_pointed(p)) != p) {
                        why = "pointed round-trip fails at n=" + std::to_string(n);
                        return false;
                    }
                }
    }
    return true;
}

bool line_criterion(std::string& why) {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& t : enumerate_directed_trees(letters(n))) {
            for (int x = 0; x <= n; ++x) {
                for (int y = 0; y <= n; ++y) {
                    PointedTree p(t, x, y);
                    LineSymbol sym = line_symbol(extended_from_pointed(p));
                    if (!check_line_symbol_axioms(sym).empty()) {
                        why = "line symbol axiom violation at n=" + std::to_string(n);
                        return false;
                    }
                    if (!verify_line_measure_axioms(sym, 4).empty()) {
                        why = "line measure axiom violation at n=" + std::to_string(n);
                        return false;
                    }
                    bool ok = true;
                    for (int a = 0; a < n && ok; ++a)
                        for (int b = 0; b < n && ok; ++b)
                            for (int len = 0; len <= 4 && ok; ++len)
                                for_each_word(n, len, [&](const std::vector<int>& ls) {
                                    if (!ok)
                                        return;
                                    Word w(ls);
                                    if (eval_line_measure(sym, LineEnd::color(a),
                                                          LineEnd::color(b), w)
                                        != eval_closed_form(t, a, b, w))
                                        ok = false;
                                });
                    if (!ok) {
                        why = "finite endpoints disagree with the circle at n="
                              + std::to_string(n);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli")
            g_cli = argv[i + 1];
        else if (flag == "--data")
            g_data = argv[i + 1];
    }
    if (g_cli.empty() || g_data.empty()) {
        std::cerr << "usage: sigma_acceptance --cli PATH --data DIR\n";
        return 2;
    }

    struct Criterion {
        const char* label;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria = {
        {"enumeration counts", counts_criterion},
        {"tree/structure equivalence", equivalence_criterion},
        {"symbol axioms and inversion", symbol_criterion},
        {"measure axioms and mutation detection", measure_axiom_criterion},
        {"evaluator agreement", agreement_criterion},
        {"six-color golden table and word support", golden_criterion},
        {"extended structure counts and bijection", extended_criterion},
        {"line axioms and restriction agreement", line_criterion},
    };

    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        bool ok = false;
        try {
            ok = criteria[i].check(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (ok) {
            std::cout << "PASS criterion " << i + 1 << ": " << criteria[i].label << "\n";
        } else {
            std::cout << "FAIL criterion " << i + 1 << ": " << criteria[i].label << " ("
                      << why << ")\n";
            all = false;
        }
    }
    return all ? 0 : 1;
}
