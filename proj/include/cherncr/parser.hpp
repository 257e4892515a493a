#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cherncr/charclass.hpp"
#include "cherncr/invariants.hpp"
#include "cherncr/poly.hpp"

namespace cherncr {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

namespace detail {

// Recursive-descent parser for invariant polynomials over ch1..ch_{n+1}
// and c1..c{n+1}. Precedence: ^  >  unary -  >  * /  >  + -.
// Division is only allowed by a nonzero constant. Chern-class variables
// c_k are rewritten into the ch basis via the Newton identities.
class InvPolyParser {
  public:
    InvPolyParser(std::string_view text, int n) : text_(text), n_(n), ring_(chern_character_ring(n)) {
        // c_k as polynomials in ch: the elementary symmetric functions of
        // the formal Chern roots, from p_k = k! ch_k.
        std::vector<Poly> ch_vars;
        for (int k = 1; k <= n + 1; ++k) ch_vars.push_back(Poly::variable(ring_, k - 1));
        RingPtr r = ring_;
        std::vector<Poly> entries;
        entries.push_back(Poly::constant(ring_, 0));  // rank placeholder, unused
        for (auto& v : ch_vars) entries.push_back(std::move(v));
        chern_images_ = ch_to_chern(ChVector(std::move(r), std::move(entries)));
    }

    Poly parse() {
        Poly result = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return result;
    }

  private:
    Poly parse_sum() {
        Poly acc = parse_product();
        for (;;) {
            skip_ws();
            if (accept('+')) acc += parse_product();
            else if (accept('-')) acc -= parse_product();
            else return acc;
        }
    }

    Poly parse_product() {
        Poly acc = parse_unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = acc * parse_unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Poly divisor = parse_unary();
                if (!divisor.is_constant())
                    throw ParseError("division only by a constant", at);
                Rational value = divisor.constant_value();
                if (value == 0) throw ParseError("division by zero", at);
                acc = (Rational(1) / value) * acc;
            } else {
                return acc;
            }
        }
    }

    Poly parse_unary() {
        skip_ws();
        if (accept('-')) return -parse_unary();
        return parse_power();
    }

    Poly parse_power() {
        Poly base = parse_primary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            long e = parse_integer();
            if (e < 0) throw ParseError("exponent must be a nonnegative integer", at);
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Poly parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly inner = parse_sum();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            long value = parse_integer();
            return Poly::constant(ring_, Rational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) return parse_variable();
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }

    Poly parse_variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        bool is_ch = (name == "ch");
        if (!is_ch && name != "c") throw ParseError("unknown variable '" + std::string(name) + "'", start);
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("variable '" + std::string(name) + "' needs an index", pos_);
        long index = parse_integer();
        if (index < 1 || index > n_ + 1)
            throw ParseError("variable index " + std::to_string(index) + " out of range 1.." +
                                 std::to_string(n_ + 1),
                             start);
        if (is_ch) return Poly::variable(ring_, static_cast<std::size_t>(index - 1));
        return chern_images_[static_cast<std::size_t>(index)];
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", start);
        long value = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            value = value * 10 + (text_[i] - '0');
            if (value < 0) throw ParseError("integer literal too large", start);
        }
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    int n_;
    RingPtr ring_;
    std::vector<Poly> chern_images_;  // chern_images_[k] = c_k in the ch basis
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses an invariant polynomial; throws ParseError on syntax errors and
// std::invalid_argument when the weighted degree exceeds n.
inline InvPoly parse_invariant_poly(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("parse_invariant_poly: n must be positive");
    detail::InvPolyParser parser(text, n);
    return InvPoly(parser.parse(), n);
}

}  // namespace cherncr
