#include "qid/expr.hpp"

#include <cctype>

#include "qid/errors.hpp"

namespace qid {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size())
            throw SyntaxError(pos_, "operator or end of input");
        return p;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    std::string_view digits()
    {
        const std::size_t start = pos_;
        while (at_digit())
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    MultiPoly expr()
    {
        MultiPoly p = term();
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    MultiPoly term()
    {
        MultiPoly p = factor();
        while (accept('*'))
            p *= factor();
        return p;
    }

    MultiPoly factor()
    {
        if (accept('-'))
            return -factor();
        MultiPoly base = atom();
        if (!accept('^'))
            return base;
        skip_space();
        const std::size_t exp_pos = pos_;
        const bool negative = accept('-');
        skip_space();
        if (!at_digit())
            throw SyntaxError(pos_, "integer exponent");
        const std::string_view d = digits();
        if (d.size() > 6)
            throw SyntaxError(exp_pos, "exponent of at most 6 digits");
        int e = std::stoi(std::string(d));
        if (negative)
            e = -e;
        if (e < 0 && !base.is_unit())
            throw SyntaxError(exp_pos, "non-negative exponent");
        try {
            return base.pow(e);
        } catch (const Error&) {
            throw SyntaxError(exp_pos, "non-negative exponent");
        }
    }

    MultiPoly atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            throw SyntaxError(pos_, "number, symbol or '('");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!accept(')'))
                throw SyntaxError(pos_, "')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string literal(digits());
            const std::size_t save = pos_;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                if (!at_digit())
                    throw SyntaxError(pos_, "denominator");
                const std::size_t den_pos = pos_;
                const std::string_view den = digits();
                if (den.find_first_not_of('0') == std::string_view::npos)
                    throw SyntaxError(den_pos, "nonzero denominator");
                literal += "/";
                literal += den;
            } else {
                pos_ = save;
            }
            return MultiPoly(Rational::parse(literal));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return MultiPoly::var(Symbol::intern(text_.substr(start, pos_ - start)));
        }
        throw SyntaxError(pos_, "number, symbol or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expr(std::string_view text)
{
    return Parser(text).parse();
}

}  // namespace qid
