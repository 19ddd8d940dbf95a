#include "rsgs/good_word.hpp"

#include <algorithm>
#include <cassert>

#include "rsgs/errors.hpp"

namespace rsgs {

GoodWord::GoodWord(Letter head) {
    auto n = std::make_shared<Node>();
    n->head = head;
    n->length = 1;
    node_ = std::move(n);
}

GoodWord GoodWord::make(Letter head, std::vector<GoodWord> multipliers) {
    std::size_t len = 1;
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        assert(multipliers[i].valid());
        len += multipliers[i].length();
        if (i > 0 && compare(multipliers[i - 1], multipliers[i]) > 0) {
            throw NotGoodError("multiplier sequence is not nondecreasing");
        }
    }
    GoodWord g;
    auto n = std::make_shared<Node>();
    n->head = head;
    n->multipliers = std::move(multipliers);
    n->length = static_cast<std::uint32_t>(len);
    g.node_ = std::move(n);
    return g;
}

GoodWord GoodWord::prefix(std::size_t count) const {
    assert(count <= multipliers().size());
    if (count == multipliers().size()) return *this;
    std::vector<GoodWord> mults(multipliers().begin(),
                                multipliers().begin() + count);
    return make(head(), std::move(mults));
}

bool operator==(const GoodWord& a, const GoodWord& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.length() != b.length() || a.head() != b.head()) return false;
    if (a.multipliers().size() != b.multipliers().size()) return false;
    for (std::size_t i = 0; i < a.multipliers().size(); ++i) {
        if (!(a.multipliers()[i] == b.multipliers()[i])) return false;
    }
    return true;
}

namespace {

// A prefix slice: head(g) with the first `count` multipliers.  Slices are
// exactly the left subwords along the tree-form spine, which lets the
// deg-lex recursion run on canonical forms without materializing trees.
struct Slice {
    const GoodWord* word;
    std::size_t count;

    std::size_t length() const {
        std::size_t len = word->length();
        auto mults = word->multipliers();
        for (std::size_t i = count; i < mults.size(); ++i) {
            len -= mults[i].length();
        }
        return len;
    }
};

std::strong_ordering compare_slices(Slice a, Slice b) {
    std::size_t la = a.length();
    std::size_t lb = b.length();
    if (la != lb) return la <=> lb;
    if (a.count == 0 && b.count == 0) {
        return a.word->head().rank <=> b.word->head().rank;
    }
    // Equal length > 1, so both slices are composite.
    auto c = compare_slices(Slice{a.word, a.count - 1},
                            Slice{b.word, b.count - 1});
    if (c != std::strong_ordering::equal) return c;
    return compare(a.word->multipliers()[a.count - 1],
                   b.word->multipliers()[b.count - 1]);
}

}  // namespace

std::strong_ordering compare(const GoodWord& a, const GoodWord& b) {
    if (a == b) return std::strong_ordering::equal;
    return compare_slices(Slice{&a, a.multipliers().size()},
                          Slice{&b, b.multipliers().size()});
}

namespace {

GoodWord decompose_unchecked(const Word& u) {
    if (u.is_letter()) return GoodWord(u.letter());
    std::vector<GoodWord> mults;
    const Word* cur = &u;
    while (!cur->is_letter()) {
        mults.push_back(decompose_unchecked(cur->right()));
        cur = &cur->left();
    }
    std::reverse(mults.begin(), mults.end());
    return GoodWord::make(cur->letter(), std::move(mults));
}

}  // namespace

GoodWord decompose(const Word& u) {
    if (!is_good(u)) {
        throw NotGoodError("decompose() requires a good word");
    }
    return decompose_unchecked(u);
}

Word tree_form(const GoodWord& g) {
    Word w = Word::leaf(g.head());
    for (const GoodWord& m : g.multipliers()) {
        w = Word::node(std::move(w), tree_form(m));
    }
    return w;
}

std::string to_string(const GoodWord& g, const Alphabet& alphabet) {
    std::string out = alphabet.name(g.head());
    for (const GoodWord& m : g.multipliers()) {
        out = "(" + out + " " + to_string(m, alphabet) + ")";
    }
    return out;
}

namespace {

// Nondecreasing multiplier sequences with a prescribed total length, drawn
// from the ascending pool of shorter good words.
void emit_multiplier_sequences(const std::vector<GoodWord>& pool,
                               std::size_t start, std::size_t remaining,
                               std::vector<GoodWord>& current,
                               Letter head,
                               std::vector<GoodWord>& out,
                               std::size_t cap, std::size_t& produced) {
    if (remaining == 0) {
        if (++produced > cap) {
            throw ResourceBoundError("good-word enumeration exceeded cap of " +
                                     std::to_string(cap));
        }
        out.push_back(GoodWord::make(head, current));
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i].length() > remaining) continue;
        current.push_back(pool[i]);
        emit_multiplier_sequences(pool, i, remaining - pool[i].length(),
                                  current, head, out, cap, produced);
        current.pop_back();
    }
}

}  // namespace

std::vector<GoodWord> enumerate_good(const Alphabet& alphabet,
                                     std::size_t max_len, std::size_t cap) {
    std::vector<GoodWord> all;
    std::size_t produced = 0;
    std::vector<GoodWord> pool;  // ascending, lengths < current n
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<GoodWord> level;
        if (n == 1) {
            for (Letter l : alphabet.letters()) {
                if (++produced > cap) {
                    throw ResourceBoundError(
                        "good-word enumeration exceeded cap of " +
                        std::to_string(cap));
                }
                level.emplace_back(l);
            }
        } else {
            std::vector<GoodWord> current;
            for (Letter l : alphabet.letters()) {
                emit_multiplier_sequences(pool, 0, n - 1, current, l, level,
                                          cap, produced);
            }
            std::sort(level.begin(), level.end(),
                      [](const GoodWord& a, const GoodWord& b) {
                          return compare(a, b) < 0;
                      });
        }
        all.insert(all.end(), level.begin(), level.end());
        pool.insert(pool.end(), level.begin(), level.end());
    }
    return all;
}

std::vector<GoodWord> good_below(const GoodWord& bound,
                                 const Alphabet& alphabet, std::size_t cap) {
    std::vector<GoodWord> all = enumerate_good(alphabet, bound.length(), cap);
    std::vector<GoodWord> out;
    for (GoodWord& g : all) {
        if (compare(g, bound) < 0) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace rsgs
