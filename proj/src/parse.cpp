#include "quatnorm/parse.hpp"

#include <cctype>

#include "quatnorm/errors.hpp"

namespace quatnorm {

namespace {

class Parser {
public:
    Parser(std::string_view text, const AlphabetConfig& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Polynomial parse_expr_top() {
        Polynomial p = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return p;
    }

    Word parse_word_top() {
        skip_ws();
        if (peek() == '1') {
            ++pos_;
            skip_ws();
            if (!at_end()) fail("unexpected input after the unit word");
            return Word();
        }
        Word w = parse_word();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return w;
    }

private:
    std::string_view text_;
    const AlphabetConfig& alphabet_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    Polynomial parse_expr() {
        skip_ws();
        bool neg = accept('-');
        Polynomial acc = parse_term();
        if (neg) acc = acc.scaled(Rat(-1));
        for (;;) {
            skip_ws();
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (at_end()) fail("expected a factor");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            expect(')', "')'");
            return p;
        }
        if (c == '[') {
            ++pos_;
            Polynomial p = bracket(parse_word());
            expect(']', "']'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return parse_factor().scaled(Rat(-1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(parse_rational());
        if (c == 'q' || c == 'i' || c == 'j' || c == 'k')
            return Polynomial::monomial(Word({parse_letter()}));
        fail("expected a rational, a letter, '[', or '('");
    }

    Rat parse_rational() {
        long num = parse_digits();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
            long den = parse_digits();
            if (den == 0) fail("zero denominator");
            return rat_of(num, den);
        }
        return rat_of(num);
    }

    long parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        long value = 0;
        for (std::size_t t = start; t < pos_; ++t) {
            value = value * 10 + (text_[t] - '0');
            if (value > 1000000000L) fail("numeric literal too large");
        }
        return value;
    }

    Letter parse_letter() {
        skip_ws();
        char c = peek();
        if (c == 'i' || c == 'j' || c == 'k') {
            ++pos_;
            return c == 'i' ? Letter::i() : c == 'j' ? Letter::j() : Letter::k();
        }
        if (c != 'q') fail("expected a letter");
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a variable index after 'q'");
        long index = parse_digits();
        bool conj = false;
        if (peek() == '\'') {
            ++pos_;
            conj = true;
        }
        if (index < 1 || index > alphabet_.n)
            throw IndexOutOfRange(static_cast<int>(index), alphabet_.n);
        return conj ? Letter::conj_var(static_cast<int>(index))
                    : Letter::var(static_cast<int>(index));
    }

    // letter ('*' letter)* — a pure word, as required inside brackets
    Word parse_word() {
        std::vector<Letter> letters;
        letters.push_back(parse_letter());
        while (true) {
            std::size_t save = pos_;
            if (!accept('*')) break;
            skip_ws();
            char c = peek();
            if (c == 'q' || c == 'i' || c == 'j' || c == 'k') {
                letters.push_back(parse_letter());
            } else {
                pos_ = save; // the '*' belongs to the enclosing product
                break;
            }
        }
        return Word(std::move(letters));
    }
};

} // namespace

Polynomial parse_expression(std::string_view text, const AlphabetConfig& alphabet) {
    return Parser(text, alphabet).parse_expr_top();
}

Word parse_word(std::string_view text, const AlphabetConfig& alphabet) {
    return Parser(text, alphabet).parse_word_top();
}

} // namespace quatnorm
