#ifndef RSGS_GOOD_WORD_HPP
#define RSGS_GOOD_WORD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rsgs/word.hpp"

namespace rsgs {

// ============================================================================
// good_word.hpp — canonical form of good words
// ============================================================================
//
// Every good word is uniquely a head letter with a nondecreasing sequence of
// good right multipliers:
//
//     [w] = x . R_[w1] . R_[w2] ... R_[wn],   [w1] <= [w2] <= ... <= [wn],
//
// whose tree form is the left fold ((..(x [w1]) [w2]) ... [wn]).  GoodWord
// stores that canonical pair, which makes uniqueness structural; the tree
// form is derived on demand.  Construction rejects out-of-order multiplier
// sequences, so a GoodWord is good by construction.
// ============================================================================

class GoodWord {
public:
    GoodWord() = default;  // empty handle

    explicit GoodWord(Letter head);

    // Throws NotGoodError if the multipliers are not nondecreasing.
    static GoodWord make(Letter head, std::vector<GoodWord> multipliers);

    bool valid() const noexcept { return node_ != nullptr; }
    Letter head() const noexcept;
    std::span<const GoodWord> multipliers() const noexcept;
    std::size_t length() const noexcept;
    bool is_letter() const noexcept;
    const GoodWord& last_multiplier() const;

    // Head plus the first `count` multipliers.
    GoodWord prefix(std::size_t count) const;

    friend bool operator==(const GoodWord& a, const GoodWord& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct GoodWord::Node {
    Letter head{};
    std::vector<GoodWord> multipliers;
    std::uint32_t length = 1;
};

inline Letter GoodWord::head() const noexcept { return node_->head; }
inline std::span<const GoodWord> GoodWord::multipliers() const noexcept {
    return node_->multipliers;
}
inline std::size_t GoodWord::length() const noexcept { return node_->length; }
inline bool GoodWord::is_letter() const noexcept {
    return node_->multipliers.empty();
}
inline const GoodWord& GoodWord::last_multiplier() const {
    return node_->multipliers.back();
}

// Deg-lex order evaluated directly on the canonical form; agrees with
// compare() on tree forms.
std::strong_ordering compare(const GoodWord& a, const GoodWord& b);

// Canonical decomposition of a good word.  Throws NotGoodError when
// is_good(u) fails.
GoodWord decompose(const Word& u);

// The left fold ((..(head m1) m2) ... mn); inverse of decompose.
Word tree_form(const GoodWord& g);

std::string to_string(const GoodWord& g, const Alphabet& alphabet);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// All good words of length <= max_len, each exactly once, ascending under
// the deg-lex order.  Throws ResourceBoundError past `cap` words.
std::vector<GoodWord> enumerate_good(const Alphabet& alphabet,
                                     std::size_t max_len,
                                     std::size_t cap = kDefaultEnumerationCap);

// All good words strictly below `bound`: every shorter good word plus the
// equal-length ones that compare less.  Ascending.
std::vector<GoodWord> good_below(const GoodWord& bound,
                                 const Alphabet& alphabet,
                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace rsgs

#endif  // RSGS_GOOD_WORD_HPP
