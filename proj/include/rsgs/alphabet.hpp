#ifndef RSGS_ALPHABET_HPP
#define RSGS_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsgs/errors.hpp"

namespace rsgs {

// A generator symbol, identified by its position in the declared alphabet
// order.  Smaller rank means smaller letter.  Letters from different
// alphabets must not be mixed; the alphabet itself owns the names.
struct Letter {
    std::uint32_t rank = 0;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A finite ordered set of generator names.  Declaration order is the total
// order: the first declared name is the least letter.
class Alphabet {
public:
    Alphabet() = default;

    // Throws InvalidInputError on empty or duplicate names.
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    Letter letter(std::size_t rank) const;
    const std::string& name(Letter l) const;
    std::optional<Letter> find(std::string_view name) const;

    std::vector<Letter> letters() const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

}  // namespace rsgs

#endif  // RSGS_ALPHABET_HPP
