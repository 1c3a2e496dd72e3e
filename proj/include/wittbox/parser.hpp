#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "wittbox/counting.hpp"
#include "wittbox/errors.hpp"
#include "wittbox/int_poly.hpp"

namespace wittbox {

// Grammar shared by every polynomial literal:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*' power)*
//   power   := primary ['^' integer]
//   primary := integer | identifier | '(' expr ')'
// Identifiers are [A-Za-z_][A-Za-z0-9_]* followed by any number of `[digits]`
// groups, so `x[0][1]` is a single identifier.
template <CoefficientRing R>
class PolyParser {
public:
    using Poly = MultiPoly<R>;
    using Resolver = std::function<std::optional<Poly>(const std::string&)>;
    using Number = std::function<typename R::value_type(const mpz_class&)>;

    PolyParser(R ring, Variables vars, Number number, Resolver extra = {}, int line = 0)
        : ring_(std::move(ring)), vars_(std::move(vars)), number_(std::move(number)), extra_(std::move(extra)),
          line_(line) {}

    Poly parse(std::string_view text) {
        text_ = text;
        pos_ = 0;
        Poly out = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(line_, why + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly expr() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = power();
        while (accept('*')) acc *= power();
        return acc;
    }

    Poly power() {
        Poly base = primary();
        if (accept('^')) {
            const std::string e = digits();
            if (e.size() > 9) fail("exponent too large");
            return base.pow(std::stoull(e));
        }
        return base;
    }

    Poly primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Poly::constant(ring_, vars_, number_(mpz_class(digits())));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Poly identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        while (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            const std::size_t d = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (d == pos_ || pos_ >= text_.size() || text_[pos_] != ']') fail("malformed index");
            ++pos_;
        }
        const std::string name(text_.substr(start, pos_ - start));
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if ((*vars_)[i] == name) return Poly::variable(ring_, vars_, i);
        }
        if (extra_) {
            if (auto p = extra_(name)) return *p;
        }
        pos_ = start;
        fail("unknown identifier '" + name + "'");
    }

    R ring_;
    Variables vars_;
    Number number_;
    Resolver extra_;
    int line_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Field element literal: an integer or a polynomial in t, e.g. `1+2*t`.
FqElem parse_fq_literal(const Field& field, std::string_view text, int line = 0);

// Modulus polynomial in t with integer coefficients, reduced mod p into
// ascending coefficients in [0, p).
std::vector<unsigned> parse_modulus(std::uint64_t p, std::string_view text, int line = 0);

// Integer polynomial in x1..xn.
IntPoly parse_int_poly(unsigned n, std::string_view text, int line = 0);

// Box generator expression over F_q in the variables x[i][j] (i < m), with t
// standing for the field generator.
FqPoly parse_box_poly(std::shared_ptr<const Field> field, unsigned n, unsigned m, std::string_view text,
                      int line = 0);

// System polynomial over GR in x1..xn; integers embed via Z -> GR and t is the
// image of the field generator.
GRPoly parse_gr_poly(std::shared_ptr<const GaloisRing> ring, unsigned n, std::string_view text, int line = 0);

// Instance file:
//   [ring]    p = <prime>, h = <degree> (default 1), modulus = <poly in t> (optional)
//   [problem] n = <vars>, m = <box level>
//   [system]  f<k> = <expr> mod p^<m_k>
//   [box]     g[<i>][<j>] = <expr in x[i][j]>   (optional; absent = Teichmueller box)
// `#` starts a comment. Syntax errors throw ParseError with the line number;
// semantic failures are rethrown as ValidationError naming the line.
ProblemInstance parse_instance(std::string_view text);

}  // namespace wittbox

namespace wittbox {

// Renders an instance in the file format accepted by parse_instance.
std::string format_instance(const ProblemInstance& inst);

}  // namespace wittbox
