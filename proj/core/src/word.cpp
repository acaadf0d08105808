#include "sigma/word.hpp"

#include "sigma/errors.hpp"

namespace sigma {

Word Word::parse(std::string_view text, const ColorSet& colors) {
    if (text.empty())
        return Word();
    std::vector<int> letters;
    if (text.find(',') != std::string_view::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            size_t comma = text.find(',', start);
            if (comma == std::string_view::npos)
                comma = text.size();
            std::string_view tok = text.substr(start, comma - start);
            if (tok.empty())
                throw ParseError("empty letter in word");
            letters.push_back(colors.index_of(tok));
            start = comma + 1;
        }
    } else if (colors.all_single_char()) {
        for (char ch : text)
            letters.push_back(colors.index_of(std::string_view(&ch, 1)));
    } else {
        letters.push_back(colors.index_of(text));
    }
    return Word(std::move(letters));
}

Word Word::prefix(int i) const {
    return Word(std::vector<int>(letters_.begin(), letters_.begin() + i));
}

Word Word::suffix(int i) const {
    return Word(std::vector<int>(letters_.begin() + i, letters_.end()));
}

std::string Word::to_string(const ColorSet& colors) const {
    if (letters_.empty())
        return "";
    if (colors.all_single_char()) {
        std::string out;
        for (int c : letters_)
            out += colors.name(c);
        return out;
    }
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i)
            out += ',';
        out += colors.name(letters_[i]);
    }
    return out;
}

} // namespace sigma
