#include "sigma/color_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "sigma/errors.hpp"

namespace sigma {

ColorSet::ColorSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw ParseError("color set must not be empty");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty())
            throw ParseError("empty color name");
        if (name.find_first_of(", \t\r\n") != std::string::npos)
            throw ParseError("color name '" + name + "' contains a separator character");
        if (name == "-inf" || name == "+inf")
            throw ParseError("color name '" + name + "' is reserved for line endpoints");
        if (!seen.insert(name).second)
            throw ParseError("duplicate color name '" + name + "'");
    }
}

ColorSet ColorSet::parse(std::string_view text) {
    std::vector<std::string> names;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        names.emplace_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    if (names.size() == 1 && names[0].empty())
        throw ParseError("color set must not be empty");
    return ColorSet(std::move(names));
}

std::optional<int> ColorSet::find(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

int ColorSet::index_of(std::string_view name) const {
    if (auto i = find(name))
        return *i;
    throw ParseError("unknown color '" + std::string(name) + "'");
}

bool ColorSet::all_single_char() const {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

std::string ColorSet::join(char sep) const {
    std::string out;
    for (size_t i = 0; i < names_.size(); ++i) {
        if (i)
            out += sep;
        out += names_[i];
    }
    return out;
}

} // namespace sigma
