#include "rsgs/poly.hpp"

#include <algorithm>
#include <cassert>

#include "rsgs/errors.hpp"

namespace rsgs {

Poly Poly::monomial(GoodWord w, Rational coefficient) {
    Poly p;
    if (coefficient != 0) {
        p.terms_.emplace(std::move(w), std::move(coefficient));
    }
    return p;
}

void Poly::add_term(const GoodWord& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const GoodWord& Poly::leading() const {
    if (terms_.empty()) {
        throw ZeroPolynomialError("leading term of the zero polynomial");
    }
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) {
        throw ZeroPolynomialError("leading coefficient of the zero polynomial");
    }
    return terms_.begin()->second;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scalar;
    return *this;
}

Poly operator-(Poly a) {
    for (auto& [w, c] : a.terms_) c = -c;
    return a;
}

Poly monic(const Poly& p) {
    Rational inv = 1 / lc(p);
    return p * inv;
}

GoodWord leading_product(const GoodWord& u, const GoodWord& v) {
    auto span = u.multipliers();
    std::vector<GoodWord> mults(span.begin(), span.end());
    auto pos = std::upper_bound(mults.begin(), mults.end(), v,
                                [](const GoodWord& value, const GoodWord& elem) {
                                    return compare(value, elem) < 0;
                                });
    mults.insert(pos, v);
    return GoodWord::make(u.head(), std::move(mults));
}

Poly multiply(const GoodWord& u, const GoodWord& v) {
    if (u.is_letter() || compare(u.last_multiplier(), v) <= 0) {
        auto span = u.multipliers();
        std::vector<GoodWord> mults(span.begin(), span.end());
        mults.push_back(v);
        return Poly::monomial(GoodWord::make(u.head(), std::move(mults)));
    }
    // (u' um) v with um > v.
    const GoodWord& um = u.last_multiplier();
    GoodWord up = u.prefix(u.multipliers().size() - 1);

    Poly result;
    Poly left_swapped = multiply(up, v);
    for (const auto& [w, c] : left_swapped.terms()) {
        result += c * multiply(w, um);
    }
    Poly inner = multiply(um, v);
    for (const auto& [w, c] : inner.terms()) {
        result += c * multiply(up, w);
    }
    Poly inner_swapped = multiply(v, um);
    for (const auto& [w, c] : inner_swapped.terms()) {
        result -= c * multiply(up, w);
    }
    return result;
}

Poly multiply(const Poly& p, const Poly& q) {
    Poly result;
    for (const auto& [u, cu] : p.terms()) {
        for (const auto& [v, cv] : q.terms()) {
            result += (cu * cv) * multiply(u, v);
        }
    }
    return result;
}

Poly normalize(const Word& u) {
    if (u.is_letter()) return Poly::monomial(GoodWord(u.letter()));
    return multiply(normalize(u.left()), normalize(u.right()));
}

Poly right_symmetry_defect(const Poly& u, const Poly& v, const Poly& w) {
    return multiply(multiply(u, v), w) - multiply(u, multiply(v, w)) -
           multiply(multiply(u, w), v) + multiply(u, multiply(w, v));
}

std::string to_string(const Poly& p, const Alphabet& alphabet) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += rational_to_string(mag) + " ";
        out += to_string(w, alphabet);
    }
    return out;
}

}  // namespace rsgs
