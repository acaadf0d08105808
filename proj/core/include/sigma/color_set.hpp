#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

// Ordered alphabet of edge colors. The order is fixed at construction and
// defines the least color, all table layouts, and enumeration order.
// Colors are referred to by index everywhere else in the library.
class ColorSet {
public:
    explicit ColorSet(std::vector<std::string> names);

    // Comma-separated list, e.g. "a,b,c".
    static ColorSet parse(std::string_view text);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int c) const { return names_[static_cast<size_t>(c)]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(std::string_view name) const;
    int index_of(std::string_view name) const; // throws ParseError if unknown

    bool all_single_char() const;
    std::string join(char sep = ' ') const;

    bool operator==(const ColorSet&) const = default;

private:
    std::vector<std::string> names_;
};

} // namespace sigma
