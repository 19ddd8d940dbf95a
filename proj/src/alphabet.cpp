#include "rsgs/alphabet.hpp"

#include <unordered_set>

namespace rsgs {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) {
            throw InvalidInputError("empty generator name");
        }
        if (!seen.insert(n).second) {
            throw InvalidInputError("duplicate generator name \"" + n + "\"");
        }
    }
}

Letter Alphabet::letter(std::size_t rank) const {
    if (rank >= names_.size()) {
        throw InvalidInputError("letter rank out of range");
    }
    return Letter{static_cast<std::uint32_t>(rank)};
}

const std::string& Alphabet::name(Letter l) const {
    if (l.rank >= names_.size()) {
        throw InvalidInputError("letter rank out of range");
    }
    return names_[l.rank];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return Letter{static_cast<std::uint32_t>(i)};
    }
    return std::nullopt;
}

std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> out;
    out.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        out.push_back(Letter{static_cast<std::uint32_t>(i)});
    }
    return out;
}

}  // namespace rsgs
