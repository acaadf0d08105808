#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sigma/bisection.hpp"
#include "sigma/errors.hpp"
#include "sigma/line.hpp"
#include "sigma/measure.hpp"
#include "sigma/symbol.hpp"
#include "sigma/tree.hpp"
#include "sigma/word.hpp"

namespace sigma::cli {

namespace {

constexpr size_t kMaxWitnessLines = 20;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DirectedLabeledTree tree_from_file(const std::string& path) {
    return DirectedLabeledTree::parse(read_file(path));
}

// Prints witnesses up to the cap; the caller prints the final count line.
class WitnessPrinter {
public:
    explicit WitnessPrinter(std::ostream& out) : out_(out) {}

    void emit(const std::string& label, const std::string& text) {
        if (count_ < kMaxWitnessLines)
            out_ << label << text << "\n";
        else if (count_ == kMaxWitnessLines)
            out_ << "(further witnesses suppressed)\n";
        ++count_;
    }

    size_t count() const { return count_; }

private:
    std::ostream& out_;
    size_t count_ = 0;
};

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::optional<int> env_cap;
    if (const char* env = std::getenv("SIGMEAS_MAX_N")) {
        try {
            size_t pos = 0;
            env_cap = std::stoi(env, &pos);
            if (pos != std::string(env).size())
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            err << "error: SIGMEAS_MAX_N must be an integer, got '" << env << "'\n";
            return 2;
        }
    }
    // --max-n beats SIGMEAS_MAX_N beats the library default.
    auto cap = [&env_cap](int flag, int fallback) {
        return flag >= 0 ? flag : env_cap.value_or(fallback);
    };

    CLI::App app{"Exact measures for the automorphism group of the colored circle and line"};
    app.name("sigmeas");
    app.require_subcommand(1);
    int status = 0;

    auto* enumerate =
        app.add_subcommand("enumerate", "Count structures of one kind, optionally listing them");
    std::string en_kind, en_colors;
    bool en_items = false;
    int en_max_n = -1;
    enumerate->add_option("kind", en_kind, "trees, obs, unoriented, or extended")
        ->required()
        ->check(CLI::IsMember({"trees", "obs", "unoriented", "extended"}));
    enumerate->add_option("--colors", en_colors, "comma-separated color names")->required();
    enumerate->add_flag("--items", en_items, "print each item after the count");
    enumerate->add_option("--max-n", en_max_n, "override the enumeration cap");
    enumerate->callback([&] {
        ColorSet colors = ColorSet::parse(en_colors);
        std::vector<std::string> items;
        size_t count = 0;
        if (en_kind == "trees") {
            auto all = enumerate_directed_trees(colors, cap(en_max_n, kDefaultEnumCap));
            count = all.size();
            if (en_items)
                for (const auto& t : all)
                    items.push_back(t.serialize());
        } else if (en_kind == "obs") {
            auto all = enumerate_obs(colors, cap(en_max_n, kDefaultEnumCap));
            count = all.size();
            if (en_items)
                for (const auto& s : all)
                    items.push_back(s.serialize());
        } else if (en_kind == "unoriented") {
            auto all = enumerate_unoriented(colors, cap(en_max_n, kDefaultEnumCap));
            count = all.size();
            if (en_items)
                for (const auto& s : all)
                    items.push_back(s.serialize());
        } else {
            auto all = enumerate_extended(colors, cap(en_max_n, kDefaultExtendedEnumCap));
            count = all.size();
            if (en_items)
                for (const auto& s : all)
                    items.push_back(s.serialize());
        }
        out << count << "\n";
        for (const auto& item : items)
            out << "\n" << item;
    });

    auto* eval = app.add_subcommand("eval", "Evaluate a measure three ways on one word");
    std::string ev_tree, ev_from, ev_to, ev_word;
    eval->add_option("--tree", ev_tree, "tree file")->required();
    eval->add_option("--from", ev_from, "left endpoint color")->required();
    eval->add_option("--to", ev_to, "right endpoint color")->required();
    eval->add_option("--word", ev_word, "interior word (default empty)");
    eval->callback([&] {
        DirectedLabeledTree tree = tree_from_file(ev_tree);
        int a = tree.colors().index_of(ev_from);
        int b = tree.colors().index_of(ev_to);
        Word w = Word::parse(ev_word, tree.colors());
        SigmaSymbol symbol = symbol_from_obs(obs_from_tree(tree));
        std::int64_t closed = eval_closed_form(tree, a, b, w);
        std::int64_t recursive = eval_recursive(symbol, a, b, w);
        std::int64_t product = eval_product(symbol, a, b, w);
        out << "closed=" << closed << " recursive=" << recursive << " product=" << product
            << "\n";
        if (closed != recursive || recursive != product) {
            err << "evaluators disagree\n";
            status = 1;
        }
    });

    auto* classify = app.add_subcommand("classify", "Classify a word against a tree");
    std::string cl_tree, cl_from, cl_to, cl_word;
    classify->add_option("--tree", cl_tree, "tree file")->required();
    classify->add_option("--from", cl_from, "left endpoint color")->required();
    classify->add_option("--to", cl_to, "right endpoint color")->required();
    classify->add_option("--word", cl_word, "interior word (default empty)");
    classify->callback([&] {
        DirectedLabeledTree tree = tree_from_file(cl_tree);
        int a = tree.colors().index_of(cl_from);
        int b = tree.colors().index_of(cl_to);
        Word w = Word::parse(cl_word, tree.colors());
        WordClass wc = classify_word(tree, a, b, w);
        switch (wc.tag) {
        case WordTag::good:
            out << "good m=" << wc.positive_count << " sign=" << wc.sign << "\n";
            break;
        case WordTag::not_monotonic:
            out << "not-monotonic sign=0\n";
            break;
        case WordTag::repeated_negative:
            out << "repeated-negative sign=0\n";
            break;
        }
    });

    auto* universal =
        app.add_subcommand("universal", "Evaluate one word against every tree over the colors");
    std::string un_colors, un_from, un_to, un_word;
    int un_max_n = -1;
    universal->add_option("--colors", un_colors, "comma-separated color names")->required();
    universal->add_option("--from", un_from, "left endpoint color")->required();
    universal->add_option("--to", un_to, "right endpoint color")->required();
    universal->add_option("--word", un_word, "interior word (default empty)");
    universal->add_option("--max-n", un_max_n, "override the enumeration cap");
    universal->callback([&] {
        ColorSet colors = ColorSet::parse(un_colors);
        int a = colors.index_of(un_from);
        int b = colors.index_of(un_to);
        Word w = Word::parse(un_word, colors);
        out << universal_measure(colors, a, b, w, cap(un_max_n, kDefaultEnumCap)).serialize();
    });

    auto* verify = app.add_subcommand("verify", "Run an exhaustive axiom suite");
    verify->require_subcommand(1);

    auto* vsym = verify->add_subcommand("symbols", "check the two symbol identities");
    std::string vs_colors, vs_tree;
    bool vs_all = false;
    int vs_max_n = -1;
    auto* vs_colors_opt = vsym->add_option("--colors", vs_colors, "comma-separated color names");
    vsym->add_flag("--all-trees", vs_all, "sweep every tree over --colors")
        ->needs(vs_colors_opt);
    vsym->add_option("--tree", vs_tree, "tree file")->excludes(vs_colors_opt);
    vsym->add_option("--max-n", vs_max_n, "override the enumeration cap");
    vsym->callback([&] {
        WitnessPrinter witness(out);
        if (!vs_tree.empty()) {
            SigmaSymbol symbol = symbol_from_obs(obs_from_tree(tree_from_file(vs_tree)));
            for (const auto& v : check_symbol_axioms(symbol))
                witness.emit("", v.describe(symbol.colors()));
        } else if (vs_all) {
            ColorSet colors = ColorSet::parse(vs_colors);
            auto trees = enumerate_directed_trees(colors, cap(vs_max_n, kDefaultEnumCap));
            for (size_t i = 0; i < trees.size(); ++i) {
                SigmaSymbol symbol = symbol_from_obs(obs_from_tree(trees[i]));
                for (const auto& v : check_symbol_axioms(symbol))
                    witness.emit("tree " + std::to_string(i) + ": ", v.describe(colors));
            }
        } else {
            throw ParseError("pass either --tree FILE or --colors LIST --all-trees");
        }
        out << witness.count() << " violations\n";
        if (witness.count())
            status = 1;
    });

    auto* vmeas = verify->add_subcommand("measures", "check the two measure identities");
    std::string vm_colors, vm_tree;
    bool vm_all = false;
    int vm_max_n = -1, vm_depth = -1;
    auto* vm_colors_opt = vmeas->add_option("--colors", vm_colors, "comma-separated color names");
    vmeas->add_flag("--all-trees", vm_all, "sweep every tree over --colors")
        ->needs(vm_colors_opt);
    vmeas->add_option("--tree", vm_tree, "tree file")->excludes(vm_colors_opt);
    vmeas->add_option("--depth", vm_depth, "maximum word length (default by color count)");
    vmeas->add_option("--max-n", vm_max_n, "override the enumeration cap");
    vmeas->callback([&] {
        WitnessPrinter witness(out);
        auto check = [&](const SigmaSymbol& symbol, const std::string& label) {
            int depth = vm_depth >= 0 ? vm_depth
                                      : default_axiom_word_length(symbol.color_count());
            for (const auto& v : verify_measure_axioms(symbol, depth))
                witness.emit(label, v.describe(symbol.colors()));
        };
        if (!vm_tree.empty()) {
            check(symbol_from_obs(obs_from_tree(tree_from_file(vm_tree))), "");
        } else if (vm_all) {
            ColorSet colors = ColorSet::parse(vm_colors);
            auto trees = enumerate_directed_trees(colors, cap(vm_max_n, kDefaultEnumCap));
            for (size_t i = 0; i < trees.size(); ++i)
                check(symbol_from_obs(obs_from_tree(trees[i])),
                      "tree " + std::to_string(i) + ": ");
        } else {
            throw ParseError("pass either --tree FILE or --colors LIST --all-trees");
        }
        out << witness.count() << " violations\n";
        if (witness.count())
            status = 1;
    });

    auto* vline = verify->add_subcommand("line", "check the line symbol and measure identities");
    std::string vl_colors;
    int vl_max_n = -1, vl_depth = -1;
    vline->add_option("--colors", vl_colors, "comma-separated color names")->required();
    vline->add_option("--depth", vl_depth, "maximum word length (default by color count)");
    vline->add_option("--max-n", vl_max_n, "override the enumeration cap");
    vline->callback([&] {
        ColorSet colors = ColorSet::parse(vl_colors);
        const int n = colors.size();
        int depth = vl_depth >= 0 ? vl_depth : default_axiom_word_length(n);
        auto trees =
            enumerate_directed_trees(colors, cap(vl_max_n, kDefaultExtendedEnumCap));
        WitnessPrinter witness(out);
        for (size_t i = 0; i < trees.size(); ++i)
            for (int x = 0; x < trees[i].vertex_count(); ++x)
                for (int y = 0; y < trees[i].vertex_count(); ++y) {
                    PointedTree pointed(trees[i], x, y);
                    LineSymbol symbol = line_symbol(extended_from_pointed(pointed));
                    std::string label = "tree " + std::to_string(i) + " x=" + std::to_string(x)
                                        + " y=" + std::to_string(y) + ": ";
                    for (const auto& v : check_line_symbol_axioms(symbol))
                        witness.emit(label, v.describe(colors));
                    for (const auto& v : verify_line_measure_axioms(symbol, depth))
                        witness.emit(label, v.describe(colors));
                    // On color endpoints the line measure must restrict to
                    // the circle one.
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            for (int len = 0; len <= depth; ++len)
                                for_each_word(n, len, [&](const std::vector<int>& u) {
                                    Word w{std::vector<int>(u)};
                                    std::int64_t lv = eval_line_measure(
                                        symbol, LineEnd::color(a), LineEnd::color(b), w);
                                    std::int64_t cv =
                                        eval_closed_form(pointed.tree(), a, b, w);
                                    if (lv != cv)
                                        witness.emit(
                                            label, "restriction mismatch for nu["
                                                       + colors.name(a) + "][" + colors.name(b)
                                                       + "](\"" + w.to_string(colors) + "\"): "
                                                       + std::to_string(lv) + " != "
                                                       + std::to_string(cv));
                                });
                }
        out << witness.count() << " violations\n";
        if (witness.count())
            status = 1;
    });

    auto* export_dot = app.add_subcommand("export-dot", "Write a tree in DOT format");
    std::string xd_tree;
    export_dot->add_option("--tree", xd_tree, "tree file")->required();
    export_dot->callback([&] { out << tree_from_file(xd_tree).to_dot(); });

    auto* table = app.add_subcommand("table", "Print the structure table of a tree");
    std::string tb_tree, tb_pointed;
    bool tb_symbol = false;
    auto* tb_tree_opt = table->add_option("--tree", tb_tree, "tree file");
    table->add_option("--pointed", tb_pointed, "pointed tree file")->excludes(tb_tree_opt);
    table->add_flag("--symbol", tb_symbol, "print the symbol tables instead")
        ->needs(tb_tree_opt);
    table->callback([&] {
        if (!tb_tree.empty()) {
            DirectedLabeledTree tree = tree_from_file(tb_tree);
            if (!tb_symbol) {
                out << obs_from_tree(tree).serialize();
                return;
            }
            SigmaSymbol symbol = symbol_from_obs(obs_from_tree(tree));
            const ColorSet& colors = tree.colors();
            const int n = colors.size();
            for (int c = 0; c < n; ++c) {
                if (c)
                    out << "\n";
                out << "eta(" << colors.name(c) << "):\n";
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b)
                        out << (b ? " " : "") << symbol.eta(a, b, c);
                    out << "\n";
                }
            }
        } else if (!tb_pointed.empty()) {
            out << extended_from_pointed(PointedTree::parse(read_file(tb_pointed))).serialize();
        } else {
            throw ParseError("pass --tree FILE or --pointed FILE");
        }
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

} // namespace sigma::cli
