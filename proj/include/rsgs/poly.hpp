#ifndef RSGS_POLY_HPP
#define RSGS_POLY_HPP

#include <map>
#include <string>

#include "rsgs/good_word.hpp"
#include "rsgs/rational.hpp"

namespace rsgs {

// ============================================================================
// poly.hpp — the free right-symmetric algebra over the rationals
// ============================================================================
//
// A Poly is a finite rational linear combination of good words, stored as an
// ordered map keyed descending so the leading term is the first entry.  The
// product of two good words u = (u' um) and v expands through the defining
// identity
//
//     (u' um) v = (u' v) um + u' (um v) - u' (v um)
//
// whenever appending v to u breaks goodness (um > v); every replacement word
// is strictly smaller in deg-lex at equal length, so the rewriting
// terminates regardless of strategy.  normalize() applies it
// leftmost-innermost: subtrees first, then the root.
// ============================================================================

struct GoodWordDescending {
    bool operator()(const GoodWord& a, const GoodWord& b) const {
        return compare(a, b) > 0;
    }
};

class Poly {
public:
    using TermMap = std::map<GoodWord, Rational, GoodWordDescending>;

    Poly() = default;  // zero

    static Poly monomial(GoodWord w, Rational coefficient = Rational(1));

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    // Merges a term in, dropping it if the coefficient sums to zero.
    void add_term(const GoodWord& w, const Rational& c);

    const GoodWord& leading() const;              // throws ZeroPolynomialError
    const Rational& leading_coefficient() const;  // throws ZeroPolynomialError
    std::size_t degree() const { return leading().length(); }

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

// Spec-style accessors.
inline const GoodWord& leading(const Poly& p) { return p.leading(); }
inline const Rational& lc(const Poly& p) { return p.leading_coefficient(); }
Poly monic(const Poly& p);

// Expansion of an arbitrary bracketed word in the good-word basis.  Good
// words map to themselves with coefficient 1.
Poly normalize(const Word& u);

// Product of two good words, expanded into the good-word basis.
Poly multiply(const GoodWord& u, const GoodWord& v);

// Bilinear extension.
Poly multiply(const Poly& p, const Poly& q);

// Leading word of multiply(u, v) without computing the product: v is
// inserted into u's multiplier sequence after the block of multipliers <= v.
GoodWord leading_product(const GoodWord& u, const GoodWord& v);

// (uv)w - u(vw) - (uw)v + u(wv); identically zero in a right-symmetric
// algebra.
Poly right_symmetry_defect(const Poly& u, const Poly& v, const Poly& w);

std::string to_string(const Poly& p, const Alphabet& alphabet);

}  // namespace rsgs

#endif  // RSGS_POLY_HPP
