#include "wdvvkit/parser.hpp"

#include <cctype>
#include <string>

#include "wdvvkit/errors.hpp"

namespace wdvvkit {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text; // Int and Ident payload
};

class Parser {
public:
    Parser(std::string_view text, const VarCtxPtr& ctx) : text_(text), ctx_(ctx) { advance(); }

    Poly parse() {
        Poly p = parse_expr();
        if (cur_.kind != Tok::End)
            throw ParseError("unexpected trailing input", cur_.offset);
        return p;
    }

private:
    std::string_view text_;
    const VarCtxPtr& ctx_;
    std::size_t pos_ = 0;
    Token cur_;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            cur_ = {Tok::End, start, {}};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            cur_ = {Tok::Int, start, std::string(text_.substr(start, pos_ - start))};
            return;
        }
        if (c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   (text_[pos_] == '_' || std::isalnum(static_cast<unsigned char>(text_[pos_]))))
                ++pos_;
            cur_ = {Tok::Ident, start, std::string(text_.substr(start, pos_ - start))};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': cur_ = {Tok::Plus, start, {}}; return;
            case '-': cur_ = {Tok::Minus, start, {}}; return;
            case '*': cur_ = {Tok::Star, start, {}}; return;
            case '/': cur_ = {Tok::Slash, start, {}}; return;
            case '^': cur_ = {Tok::Caret, start, {}}; return;
            case '(': cur_ = {Tok::LParen, start, {}}; return;
            case ')': cur_ = {Tok::RParen, start, {}}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    Poly parse_expr() {
        Poly lhs = parse_term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool plus = cur_.kind == Tok::Plus;
            advance();
            Poly rhs = parse_term();
            if (plus)
                lhs += rhs;
            else
                lhs -= rhs;
        }
        return lhs;
    }

    Poly parse_term() {
        Poly lhs = parse_factor();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const bool mul = cur_.kind == Tok::Star;
            const std::size_t op_at = cur_.offset;
            advance();
            Poly rhs = parse_factor();
            if (mul) {
                lhs = lhs * rhs;
            } else {
                if (!rhs.is_constant())
                    throw ParseError("division by non-constant expression", op_at);
                const Rat d = rhs.constant_value();
                if (d.is_zero()) throw ParseError("division by zero", op_at);
                lhs = lhs * d.inv();
            }
        }
        return lhs;
    }

    Poly parse_factor() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return -parse_factor();
        }
        return parse_power();
    }

    Poly parse_power() {
        Poly base = parse_primary();
        if (cur_.kind != Tok::Caret) return base;
        advance();
        if (cur_.kind == Tok::Minus)
            throw ParseError("negative exponent not allowed", cur_.offset);
        if (cur_.kind != Tok::Int)
            throw ParseError("exponent must be a non-negative integer literal", cur_.offset);
        mpz_class e(cur_.text);
        if (!e.fits_uint_p())
            throw ParseError("exponent too large", cur_.offset);
        advance();
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    Poly parse_primary() {
        switch (cur_.kind) {
            case Tok::Int: {
                Poly p = Poly::constant(ctx_, Rat(BigInt(cur_.text)));
                advance();
                return p;
            }
            case Tok::Ident: {
                auto idx = ctx_->index_of(cur_.text);
                if (!idx) throw ParseError("unknown variable '" + cur_.text + "'", cur_.offset);
                Poly p = Poly::variable(ctx_, *idx);
                advance();
                return p;
            }
            case Tok::LParen: {
                advance();
                Poly p = parse_expr();
                if (cur_.kind != Tok::RParen)
                    throw ParseError("expected ')'", cur_.offset);
                advance();
                return p;
            }
            case Tok::End:
                throw ParseError("unexpected end of input", cur_.offset);
            default:
                throw ParseError("unexpected token", cur_.offset);
        }
    }
};

} // namespace

Poly parse_expr(std::string_view text, const VarCtxPtr& ctx) {
    return Parser(text, ctx).parse();
}

} // namespace wdvvkit
