#include "rsgs/rational.hpp"

#include <cctype>

namespace rsgs {

Rational rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw ZeroDenominatorError("rational with zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_integer_token(den)) {
            throw SyntaxError("malformed rational \"" + std::string(text) + "\"", 0);
        }
    }
    if (!is_integer_token(num)) {
        throw SyntaxError("malformed rational \"" + std::string(text) + "\"", 0);
    }
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) {
        throw ZeroDenominatorError("rational with zero denominator: \"" +
                                   std::string(text) + "\"");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

}  // namespace rsgs
