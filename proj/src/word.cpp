#include "rsgs/word.hpp"

#include <cassert>

namespace rsgs {

Word Word::leaf(Letter l) {
    Word w;
    auto n = std::make_shared<Node>();
    n->head = l;
    n->length = 1;
    w.node_ = std::move(n);
    return w;
}

Word Word::node(Word left, Word right) {
    assert(left.valid() && right.valid());
    Word w;
    auto n = std::make_shared<Node>();
    n->length = static_cast<std::uint32_t>(left.length() + right.length());
    n->left = std::move(left);
    n->right = std::move(right);
    w.node_ = std::move(n);
    return w;
}

bool operator==(const Word& a, const Word& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.length() != b.length()) return false;
    if (a.is_letter()) return a.letter() == b.letter();
    return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering compare(const Word& u, const Word& v) {
    if (u == v) return std::strong_ordering::equal;
    if (u.length() != v.length()) return u.length() <=> v.length();
    if (u.is_letter()) return u.letter().rank <=> v.letter().rank;
    auto c = compare(u.left(), v.left());
    if (c != std::strong_ordering::equal) return c;
    return compare(u.right(), v.right());
}

bool is_good(const Word& u) {
    if (u.is_letter()) return true;
    const Word& v = u.left();
    const Word& w = u.right();
    if (!is_good(v) || !is_good(w)) return false;
    if (v.is_letter()) return true;
    return compare(v.right(), w) <= 0;
}

std::string to_string(const Word& u, const Alphabet& alphabet) {
    if (u.is_letter()) return alphabet.name(u.letter());
    return "(" + to_string(u.left(), alphabet) + " " +
           to_string(u.right(), alphabet) + ")";
}

}  // namespace rsgs
