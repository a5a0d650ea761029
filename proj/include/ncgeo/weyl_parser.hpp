#ifndef NCGEO_WEYL_PARSER_HPP
#define NCGEO_WEYL_PARSER_HPP

#include <cctype>
#include <string>

#include "ncgeo/weyl_algebra.hpp"

namespace ncgeo {

// Recursive-descent parser for expressions like "(1+2i)*x1^2*xi2 + x2".
// Factors are joined with explicit '*'; '^' takes a nonnegative integer
// exponent; 'i' is the imaginary unit; generators are x<k> and xi<k>, 1-based.
template <class K>
class WeylParser {
  public:
    using Elem = WeylElement<K>;
    using Ctx = typename Elem::Ctx;

    static Elem parse(const std::string& text, const Ctx& ctx) {
        WeylParser p(text, ctx);
        Elem e = p.parse_expr();
        p.skip_ws();
        if (p.pos_ != p.text_.size()) p.fail("trailing input");
        return e;
    }

  private:
    WeylParser(std::string text, Ctx ctx) : text_(std::move(text)), ctx_(std::move(ctx)) {}

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Elem parse_expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Elem acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    Elem parse_term() {
        Elem acc = parse_factor();
        while (eat('*')) acc = weyl_mul(acc, parse_factor());
        return acc;
    }

    Elem parse_factor() {
        Elem base = parse_atom();
        if (eat('^')) {
            int n = parse_uint();
            Elem r = Elem::one(ctx_);
            for (int k = 0; k < n; ++k) r = weyl_mul(r, base);
            return r;
        }
        return base;
    }

    Elem parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Elem e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'i') {
            ++pos_;
            return Elem::constant(ctx_, ScalarOps<K>::i());
        }
        if (c == 'x') {
            ++pos_;
            bool is_xi = false;
            if (pos_ < text_.size() && text_[pos_] == 'i') {
                is_xi = true;
                ++pos_;
            }
            int j = parse_uint();
            if (j < 1 || j > ctx_->dim()) fail("generator index out of range");
            return is_xi ? Elem::xi(ctx_, j) : Elem::x(ctx_, j);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string num = parse_number();
            K v = ScalarOps<K>::parse_real(num);
            if (pos_ < text_.size() && text_[pos_] == 'i') {
                ++pos_;
                v = v * ScalarOps<K>::i();
            }
            return Elem::constant(ctx_, v);
        }
        fail("unexpected character");
    }

    std::string parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ == start) fail("expected number");
        return text_.substr(start, pos_ - start);
    }

    int parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    std::string text_;
    std::size_t pos_ = 0;
    Ctx ctx_;
};

} // namespace ncgeo

#endif
