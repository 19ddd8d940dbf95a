#ifndef RSGS_WORD_HPP
#define RSGS_WORD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include "rsgs/alphabet.hpp"

namespace rsgs {

// ============================================================================
// word.hpp — fully bracketed (non-associative) words and the deg-lex order
// ============================================================================
//
// A Word is a binary tree whose leaves are letters.  Words are immutable and
// share structure; copying a Word is a refcount bump.  The length of a word
// is its number of leaves.
//
// The deg-lex order compares two words by
//   1. length (longer is greater),
//   2. for equal-length letters, the letter rank,
//   3. for equal-length composite words, the left subwords, then the right
//      subwords.
// It is a total order, and words of bounded length form a finite chain, so
// every strictly decreasing sequence at bounded degree terminates.
//
// A word is "good" when every composite left factor has its second component
// bounded by the sibling on the right: ((v1 v2) w) requires v2 <= w.  Good
// words are the monomial basis of the free right-symmetric algebra.
// ============================================================================

class Word {
public:
    Word() = default;  // empty handle; only comparison with null is valid

    static Word leaf(Letter l);
    static Word node(Word left, Word right);

    bool valid() const noexcept { return node_ != nullptr; }
    bool is_letter() const noexcept;
    Letter letter() const noexcept;

    const Word& left() const noexcept;
    const Word& right() const noexcept;

    std::size_t length() const noexcept;

    // Structural equality with a shared-subtree fast path.
    friend bool operator==(const Word& a, const Word& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct Word::Node {
    Word left;
    Word right;
    Letter head{};  // meaningful only for leaves
    std::uint32_t length = 0;
};

inline bool Word::is_letter() const noexcept { return node_->length == 1; }
inline Letter Word::letter() const noexcept { return node_->head; }
inline const Word& Word::left() const noexcept { return node_->left; }
inline const Word& Word::right() const noexcept { return node_->right; }
inline std::size_t Word::length() const noexcept { return node_->length; }

// The deg-lex order.  Total on all words over one alphabet; EQ exactly for
// structurally equal words.
std::strong_ordering compare(const Word& u, const Word& v);

// Goodness test, by induction on length.
bool is_good(const Word& u);

// Fully parenthesized rendering, e.g. "((a a) b)".
std::string to_string(const Word& u, const Alphabet& alphabet);

}  // namespace rsgs

#endif  // RSGS_WORD_HPP
