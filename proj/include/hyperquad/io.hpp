#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "fp.hpp"
#include "projective.hpp"
#include "ratfunc.hpp"
#include "symrat.hpp"
#include "upoly.hpp"

namespace hyperquad {

// ---------------------------------------------------------------------------
// Canonical printing. Parse(print(x)) == x for every value in canonical form.

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

inline std::string to_string(const UPoly<Fp>& p, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Fp& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c.value());
            continue;
        }
        if (!c.is_one()) {
            out += std::to_string(c.value());
            out += '*';
        }
        out += var;
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

inline std::string to_string(const RatFuncT& x) {
    if (x.den().is_one()) return to_string(x.num(), "T");
    return "(" + to_string(x.num(), "T") + ")/(" + to_string(x.den(), "T") + ")";
}

inline std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        const Rat ac = abs(c);
        std::string vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += p.table()->name(i);
            if (e[i] > 1) {
                vars += '^';
                vars += std::to_string(e[i]);
            }
        }
        std::string piece;
        if (vars.empty()) piece = rat_to_string(ac);
        else if (ac == 1) piece = vars;
        else piece = rat_to_string(ac) + "*" + vars;
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? "-" : "+") + piece;
    }
    return out;
}

inline std::string to_string(const SymRat& x) {
    if (x.den().is_one()) return to_string(x.num());
    return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

namespace detail {

// Polynomial over a fraction-like field prints its coefficients as
// parenthesized atoms, matching the input grammar's coefficient atoms.
template <class K, class AtomFn>
std::string poly_with_atoms(const UPoly<K>& p, AtomFn atom, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const K& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += atom(c);
            continue;
        }
        if (!c.is_one()) {
            out += atom(c);
            out += '*';
        }
        out += var;
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

}  // namespace detail

inline std::string to_string(const UPoly<RatFuncT>& p, std::string_view var = "x") {
    return detail::poly_with_atoms(
        p, [](const RatFuncT& c) { return "(" + to_string(c) + ")"; }, var);
}

inline std::string to_string(const UPoly<SymRat>& p, std::string_view var = "x") {
    return detail::poly_with_atoms(
        p, [](const SymRat& c) { return "(" + to_string(c) + ")"; }, var);
}

// ---------------------------------------------------------------------------
// Parsing. Grammar (whitespace-insensitive, case-sensitive):
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' nat]
//   atom   := integer | 'x' | symbol | '(' poly ')'
//
// Division is restricted to coefficient values: both operands must be free of
// the polynomial variable. Which symbols exist depends on the field: none over
// F_p, only T over F_p(T), the declared table over the symbolic field.

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    std::string_view s_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, {}, 0};

    static bool ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }
    static bool ident_char(char c) {
        return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
    }

    void advance() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' ||
                                  s_[i_] == '\r'))
            ++i_;
        const std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::End, {}, start};
            return;
        }
        const char c = s_[i_];
        if (c >= '0' && c <= '9') {
            while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
            tok_ = {Tok::Integer, s_.substr(start, i_ - start), start};
            return;
        }
        if (ident_start(c)) {
            while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
            tok_ = {Tok::Ident, s_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, s_.substr(start, 1), start}; return;
            case '-': tok_ = {Tok::Minus, s_.substr(start, 1), start}; return;
            case '*': tok_ = {Tok::Star, s_.substr(start, 1), start}; return;
            case '/': tok_ = {Tok::Slash, s_.substr(start, 1), start}; return;
            case '^': tok_ = {Tok::Caret, s_.substr(start, 1), start}; return;
            case '(': tok_ = {Tok::LParen, s_.substr(start, 1), start}; return;
            case ')': tok_ = {Tok::RParen, s_.substr(start, 1), start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
};

template <ScalarField K>
class PolyParser {
  public:
    using Resolver = std::function<std::optional<K>(std::string_view)>;

    PolyParser(std::string_view text, const K& sample, Resolver resolve, bool allow_x)
        : lex_(text), sample_(sample), resolve_(std::move(resolve)), allow_x_(allow_x) {}

    UPoly<K> parse() {
        UPoly<K> r = parse_sum();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return r;
    }

  private:
    Lexer lex_;
    K sample_;
    Resolver resolve_;
    bool allow_x_;

    UPoly<K> parse_sum() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        UPoly<K> acc = parse_term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const bool minus = lex_.take().kind == Tok::Minus;
            const UPoly<K> rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    UPoly<K> parse_term() {
        UPoly<K> acc = parse_factor();
        for (;;) {
            const Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                acc = acc * parse_factor();
            } else if (k == Tok::Slash) {
                const Token t = lex_.take();
                const UPoly<K> rhs = parse_factor();
                if (!acc.is_constant() || !rhs.is_constant())
                    throw ParseError("division is only allowed between coefficients", t.pos);
                if (rhs.coeff(0).is_zero()) throw ParseError("division by zero", t.pos);
                acc = UPoly<K>(acc.coeff(0) / rhs.coeff(0));
            } else {
                break;
            }
        }
        return acc;
    }

    UPoly<K> parse_factor() {
        UPoly<K> base = parse_atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        const Token caret = lex_.take();
        if (lex_.peek().kind != Tok::Integer)
            throw ParseError("expected a nonnegative integer exponent", caret.pos);
        const Token e = lex_.take();
        std::uint64_t exp = 0;
        for (char c : e.text) {
            exp = exp * 10 + static_cast<std::uint64_t>(c - '0');
            if (exp > 1000000) throw ParseError("exponent too large", e.pos);
        }
        // binary power on the polynomial
        UPoly<K> result = UPoly<K>::one(sample_);
        UPoly<K> b = base;
        std::uint64_t n = exp;
        while (n) {
            if (n & 1) result = result * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return result;
    }

    UPoly<K> parse_atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Integer: {
                lex_.take();
                K acc = sample_.zero();
                const K ten = sample_.from_int(10);
                for (char c : t.text) acc = acc * ten + sample_.from_int(c - '0');
                return UPoly<K>(acc);
            }
            case Tok::Ident: {
                lex_.take();
                if (allow_x_ && t.text == "x") return UPoly<K>::x(sample_);
                if (auto val = resolve_(t.text)) return UPoly<K>(*val);
                throw ParseError("unknown symbol '" + std::string(t.text) + "'", t.pos);
            }
            case Tok::LParen: {
                lex_.take();
                UPoly<K> inner = parse_sum();
                if (lex_.peek().kind != Tok::RParen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return inner;
            }
            default:
                throw ParseError("expected a number, symbol or '('", t.pos);
        }
    }
};

}  // namespace detail

template <ScalarField K>
UPoly<K> parse_poly(std::string_view text, const K& sample,
                    std::function<std::optional<K>(std::string_view)> symbols) {
    return detail::PolyParser<K>(text, sample, std::move(symbols), true).parse();
}

template <ScalarField K>
K parse_scalar(std::string_view text, const K& sample,
               std::function<std::optional<K>(std::string_view)> symbols) {
    UPoly<K> p = detail::PolyParser<K>(text, sample, std::move(symbols), false).parse();
    return p.coeff(0);
}

inline UPoly<Fp> parse_poly_fp(std::string_view text, std::uint64_t p) {
    const FpField field(p);
    return parse_poly<Fp>(text, field.zero(),
                          [](std::string_view) { return std::optional<Fp>{}; });
}

inline UPoly<RatFuncT> parse_poly_ratfunc(std::string_view text, std::uint64_t p) {
    const FpField field(p);
    const RatFuncT zero = RatFuncT::constant(field.zero());
    auto symbols = [p](std::string_view name) -> std::optional<RatFuncT> {
        if (name == "T") return RatFuncT::t(p);
        return std::nullopt;
    };
    return parse_poly<RatFuncT>(text, zero, symbols);
}

inline RatFuncT parse_scalar_ratfunc(std::string_view text, std::uint64_t p) {
    const FpField field(p);
    const RatFuncT zero = RatFuncT::constant(field.zero());
    auto symbols = [p](std::string_view name) -> std::optional<RatFuncT> {
        if (name == "T") return RatFuncT::t(p);
        return std::nullopt;
    };
    return parse_scalar<RatFuncT>(text, zero, symbols);
}

inline UPoly<SymRat> parse_poly_sym(std::string_view text, const SymTableRef& tab) {
    const SymRat zero = SymRat::constant(tab, Rat(0));
    auto symbols = [tab](std::string_view name) -> std::optional<SymRat> {
        if (auto idx = tab->find(name)) return SymRat::variable(tab, *idx);
        return std::nullopt;
    };
    return parse_poly<SymRat>(text, zero, symbols);
}

inline SymRat parse_scalar_sym(std::string_view text, const SymTableRef& tab) {
    const SymRat zero = SymRat::constant(tab, Rat(0));
    auto symbols = [tab](std::string_view name) -> std::optional<SymRat> {
        if (auto idx = tab->find(name)) return SymRat::variable(tab, *idx);
        return std::nullopt;
    };
    return parse_scalar<SymRat>(text, zero, symbols);
}

// ---------------------------------------------------------------------------
// Machine-readable table rows, one JSON object per row:
// {"p":..,"a":..,"b":..,"c":..,"H":{"u":..,"v":..,"w":..,"z":..}|null,
//  "degenerate":..,"P_shape":"..","H_shape":".."|null}

inline nlohmann::ordered_json table_row_json(const TableRow& row) {
    nlohmann::ordered_json j;
    j["p"] = row.p;
    j["a"] = row.a;
    j["b"] = row.b;
    j["c"] = row.c;
    if (row.has_h)
        j["H"] = nlohmann::ordered_json{{"u", row.u}, {"v", row.v}, {"w", row.w}, {"z", row.z}};
    else
        j["H"] = nullptr;
    j["degenerate"] = row.degenerate;
    j["P_shape"] = row.p_shape;
    if (row.has_h)
        j["H_shape"] = row.h_shape;
    else
        j["H_shape"] = nullptr;
    return j;
}

}  // namespace hyperquad
