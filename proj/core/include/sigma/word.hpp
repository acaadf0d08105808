#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigma/color_set.hpp"

namespace sigma {

// Finite sequence of colors. Positions are 1-based in the slicing helpers,
// matching the identities they are used in: prefix(i) is w[1..i] and
// suffix(i) is w(i..n].
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

    // Concatenated single characters when every color name has length 1 and
    // the text has no comma; comma-separated color names otherwise. Empty
    // text is the empty word.
    static Word parse(std::string_view text, const ColorSet& colors);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int at(int i) const { return letters_[static_cast<size_t>(i)]; } // 0-based
    const std::vector<int>& letters() const { return letters_; }

    Word prefix(int i) const; // first i letters
    Word suffix(int i) const; // all but the first i letters

    std::string to_string(const ColorSet& colors) const;

    bool operator==(const Word&) const = default;

private:
    std::vector<int> letters_;
};

// Calls fn(letters) for every word of exactly `length` letters over
// `color_count` colors (at least one), in lexicographic order.
template <typename Fn>
void for_each_word(int color_count, int length, Fn&& fn) {
    std::vector<int> letters(static_cast<size_t>(length), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(letters));
        int i = length - 1;
        while (i >= 0 && letters[static_cast<size_t>(i)] == color_count - 1)
            letters[static_cast<size_t>(i--)] = 0;
        if (i < 0)
            return;
        ++letters[static_cast<size_t>(i)];
    }
}

} // namespace sigma
