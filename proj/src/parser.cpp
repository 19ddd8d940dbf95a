#include "rsgs/parser.hpp"

#include <cctype>
#include <string>

#include "rsgs/errors.hpp"

namespace rsgs {

namespace {

bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Poly parse_poly() {
        skip_ws();
        Poly result;
        Rational sign(1);
        if (peek() == '-') {
            ++pos_;
            sign = -1;
        }
        parse_term(sign, result);
        skip_ws();
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') {
                throw SyntaxError("expected '+' or '-'", pos_);
            }
            ++pos_;
            parse_term(op == '-' ? Rational(-1) : Rational(1), result);
            skip_ws();
        }
        return result;
    }

    Word parse_single_word() {
        Word w = parse_word();
        skip_ws();
        if (!at_end()) {
            throw SyntaxError("unexpected trailing input", pos_);
        }
        return w;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view scan_integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Rational parse_rational() {
        std::string_view num = scan_integer();
        skip_ws();
        if (peek() != '/') {
            return rational_from_string(num);
        }
        std::size_t slash = pos_;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw SyntaxError("expected denominator digits", pos_);
        }
        std::string_view den = scan_integer();
        if (rational_from_string(den) == 0) {
            throw ZeroDenominatorError("zero denominator at offset " +
                                       std::to_string(slash));
        }
        return rational_from_string(std::string(num) + "/" + std::string(den));
    }

    void parse_term(const Rational& sign, Poly& result) {
        skip_ws();
        bool has_coefficient = std::isdigit(static_cast<unsigned char>(peek()));
        Rational coefficient(1);
        if (has_coefficient) {
            coefficient = parse_rational();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        if (peek() == '(' || name_start(peek())) {
            Word w = parse_word();
            result += (sign * coefficient) * normalize(w);
            return;
        }
        if (has_coefficient && coefficient == 0) {
            return;  // a lone 0 term, e.g. the zero polynomial
        }
        throw SyntaxError("expected word", pos_);
    }

    Word parse_word() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            Word left = parse_word();
            Word right = parse_word();
            skip_ws();
            if (peek() != ')') {
                throw SyntaxError("expected ')'", pos_);
            }
            ++pos_;
            return Word::node(std::move(left), std::move(right));
        }
        if (!name_start(peek())) {
            throw SyntaxError("expected word", pos_);
        }
        std::size_t start = pos_;
        while (!at_end() && name_char(text_[pos_])) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto letter = alphabet_.find(name);
        if (!letter) {
            throw UnknownGeneratorError("unknown generator \"" +
                                        std::string(name) + "\" at offset " +
                                        std::to_string(start));
        }
        return Word::leaf(*letter);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expression(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse_poly();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse_single_word();
}

std::vector<std::string> extract_generator_names(std::string_view text) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (name_start(text[pos])) {
            std::size_t start = pos;
            while (pos < text.size() && name_char(text[pos])) ++pos;
            std::string name(text.substr(start, pos - start));
            bool seen = false;
            for (const std::string& n : names) {
                if (n == name) {
                    seen = true;
                    break;
                }
            }
            if (!seen) names.push_back(std::move(name));
        } else {
            ++pos;
        }
    }
    return names;
}

}  // namespace rsgs
