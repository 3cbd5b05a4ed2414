#include "reccalc/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "reccalc/errors.hpp"

namespace reccalc {

namespace {

// Caps on coefficient expressions keep arbitrary (fuzzed) input from
// requesting astronomically large dense polynomials.
constexpr int kMaxExprDegree = 2048;
constexpr unsigned long kMaxExponent = 100000;

enum class Tok {
    Int, X, Plus, Minus, Star, Slash, Caret, LParen, RParen,
    Fn,     // f[n]
    FnRef,  // f[n-lag]
    FInit,  // f[index]
    Equals, Sep, End,
};

struct Token {
    Tok kind;
    int line = 1;
    int col = 1;
    std::string text;        // Int literal
    unsigned long value = 0; // FnRef lag / FInit index
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blanks();
            Token t = next();
            out.push_back(t);
            if (t.kind == Tok::End) break;
        }
        return out;
    }

private:
    [[noreturn]] void fail(int line, int col, const std::string& msg) const {
        throw ParseError(line, col, msg);
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_blanks() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }

    Token make(Tok kind, int line, int col) { return Token{kind, line, col, {}, 0}; }

    std::string read_digits() {
        std::string d;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) d += advance();
        return d;
    }

    Token next() {
        if (eof()) return make(Tok::End, line_, col_);
        const int line = line_, col = col_;
        const char c = peek();
        if (c == '\n' || c == ';') {
            advance();
            return make(Tok::Sep, line, col);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Token t = make(Tok::Int, line, col);
            t.text = read_digits();
            if (t.text.size() > 1000) fail(line, col, "integer literal too long");
            return t;
        }
        switch (c) {
            case '+': advance(); return make(Tok::Plus, line, col);
            case '-': advance(); return make(Tok::Minus, line, col);
            case '*': advance(); return make(Tok::Star, line, col);
            case '/': advance(); return make(Tok::Slash, line, col);
            case '^': advance(); return make(Tok::Caret, line, col);
            case '(': advance(); return make(Tok::LParen, line, col);
            case ')': advance(); return make(Tok::RParen, line, col);
            case '=': advance(); return make(Tok::Equals, line, col);
            case 'x': advance(); return make(Tok::X, line, col);
            case 'f': return lex_f_ref(line, col);
            default: break;
        }
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\x" + std::to_string(static_cast<unsigned char>(c));
        fail(line, col, "unexpected character '" + shown + "'");
    }

    Token lex_f_ref(int line, int col) {
        advance(); // f
        skip_blanks();
        if (eof() || peek() != '[') fail(line_, col_, "expected '[' after 'f'");
        advance();
        skip_blanks();
        if (eof()) fail(line_, col_, "unterminated f[...] reference");
        if (peek() == 'n') {
            advance();
            skip_blanks();
            if (!eof() && peek() == ']') {
                advance();
                return make(Tok::Fn, line, col);
            }
            if (eof() || peek() != '-')
                fail(line_, col_, "expected ']' or '-lag' inside f[n...]");
            advance();
            skip_blanks();
            const int dl = line_, dc = col_;
            std::string digits = read_digits();
            if (digits.empty()) fail(dl, dc, "expected a lag after 'n-'");
            unsigned long lag = parse_small_uint(digits, dl, dc, "lag");
            if (lag == 0) fail(dl, dc, "lag must be at least 1");
            skip_blanks();
            if (eof() || peek() != ']') fail(line_, col_, "expected ']' to close f[n-lag]");
            advance();
            Token t = make(Tok::FnRef, line, col);
            t.value = lag;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const int dl = line_, dc = col_;
            std::string digits = read_digits();
            unsigned long idx = parse_small_uint(digits, dl, dc, "initial-value index");
            skip_blanks();
            if (eof() || peek() != ']') fail(line_, col_, "expected ']' to close f[index]");
            advance();
            Token t = make(Tok::FInit, line, col);
            t.value = idx;
            return t;
        }
        fail(line_, col_, "expected 'n' or an index inside f[...]");
    }

    unsigned long parse_small_uint(const std::string& digits, int line, int col,
                                   const std::string& what) const {
        if (digits.size() > 6) fail(line, col, what + " is too large");
        return std::stoul(digits);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    LinearRecurrence parse() {
        while (true) {
            while (at(Tok::Sep)) ++pos_;
            if (at(Tok::End)) break;
            if (at(Tok::Fn)) {
                parse_relation();
            } else if (at(Tok::FInit)) {
                parse_initial();
            } else {
                fail(cur(), "expected a statement: f[n] = ... or f[index] = ...");
            }
            if (!at(Tok::Sep) && !at(Tok::End))
                fail(cur(), "expected ';' or end of line after statement");
        }
        return finish();
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        throw ParseError(t.line, t.col, msg);
    }

    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t ahead) const {
        const std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(Tok k) const { return cur().kind == k; }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail(cur(), "expected " + what);
        return toks_[pos_++];
    }

    void parse_relation() {
        const Token head = toks_[pos_++];
        if (relation_seen_) fail(head, "duplicate recurrence relation f[n] = ...");
        relation_seen_ = true;
        relation_pos_ = head;
        expect(Tok::Equals, "'=' after f[n]");
        bool negate = false;
        if (at(Tok::Minus)) {
            ++pos_;
            negate = true;
        } else if (at(Tok::Plus)) {
            ++pos_;
        }
        while (true) {
            parse_term(negate);
            if (at(Tok::Plus)) {
                ++pos_;
                negate = false;
            } else if (at(Tok::Minus)) {
                ++pos_;
                negate = true;
            } else {
                break;
            }
        }
    }

    void parse_term(bool negate) {
        XRatFunc coeff{Rational{1}};
        if (!at(Tok::FnRef)) {
            coeff = parse_mul_expr(/*stop_before_fnref=*/true);
            if (!at(Tok::Star)) fail(cur(), "expected '*' between coefficient and f[n-lag]");
            ++pos_;
        }
        const Token ref = expect(Tok::FnRef, "a recurrence term f[n-lag]");
        if (negate) coeff = -coeff;
        auto [it, inserted] = lags_.try_emplace(ref.value, coeff);
        if (!inserted) it->second += coeff; // repeated lags accumulate
    }

    void parse_initial() {
        const Token head = toks_[pos_++];
        expect(Tok::Equals, "'=' after f[index]");
        XRatFunc value = parse_additive();
        if (!inits_.emplace(head.value, std::pair<Token, XRatFunc>{head, value}).second)
            fail(head, "duplicate initial value f[" + std::to_string(head.value) + "]");
    }

    // Full additive expression (used inside parentheses and initial values).
    XRatFunc parse_additive() {
        XRatFunc v = parse_mul_expr(false);
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const bool minus = at(Tok::Minus);
            ++pos_;
            XRatFunc rhs = parse_mul_expr(false);
            v = minus ? v - rhs : v + rhs;
        }
        return v;
    }

    // Multiplicative chain. In coefficient position a '*' directly followed
    // by f[n-lag] belongs to the enclosing term, so we stop before it.
    XRatFunc parse_mul_expr(bool stop_before_fnref) {
        XRatFunc v = parse_unary();
        while (true) {
            if (at(Tok::Star)) {
                if (stop_before_fnref && peek(1).kind == Tok::FnRef) break;
                ++pos_;
                v *= parse_unary();
            } else if (at(Tok::Slash)) {
                const Token op = toks_[pos_++];
                XRatFunc rhs = parse_unary();
                if (rhs.is_zero())
                    fail(op, "division by zero in coefficient expression");
                v /= rhs;
            } else {
                break;
            }
            check_degree(v);
        }
        return v;
    }

    XRatFunc parse_unary() {
        if (at(Tok::Minus)) {
            ++pos_;
            return -parse_unary();
        }
        if (at(Tok::Plus)) {
            ++pos_;
            return parse_unary();
        }
        return parse_power();
    }

    XRatFunc parse_power() {
        XRatFunc base = parse_atom();
        while (at(Tok::Caret)) {
            const Token op = toks_[pos_++];
            const Token e = expect(Tok::Int, "an integer exponent after '^'");
            unsigned long exp = 0;
            if (e.text.size() > 6) fail(e, "exponent too large");
            exp = std::stoul(e.text);
            if (exp > kMaxExponent) fail(e, "exponent too large");
            const int base_size =
                std::max(base.num().degree(), 0) + std::max(base.den().degree(), 0);
            if (static_cast<unsigned long>(base_size) * exp >
                static_cast<unsigned long>(kMaxExprDegree))
                fail(op, "expression degree exceeds the supported limit");
            XRatFunc r{Rational{1}};
            XRatFunc b = base;
            unsigned long n = exp;
            while (n > 0) {
                if (n & 1ul) r *= b;
                b *= b;
                n >>= 1ul;
            }
            base = r;
        }
        return base;
    }

    XRatFunc parse_atom() {
        if (at(Tok::Int)) {
            const Token t = toks_[pos_++];
            return XRatFunc(Rational::from_string(t.text));
        }
        if (at(Tok::X)) {
            ++pos_;
            return XRatFunc::x();
        }
        if (at(Tok::LParen)) {
            ++pos_;
            XRatFunc v = parse_additive();
            expect(Tok::RParen, "')'");
            return v;
        }
        if (at(Tok::Fn) || at(Tok::FnRef) || at(Tok::FInit))
            fail(cur(), "recurrence reference is not allowed inside a coefficient expression");
        fail(cur(), "expected an integer, 'x', or a parenthesized expression");
    }

    void check_degree(const XRatFunc& v) const {
        if (std::max(v.num().degree(), 0) > kMaxExprDegree ||
            std::max(v.den().degree(), 0) > kMaxExprDegree)
            fail(cur(), "expression degree exceeds the supported limit");
    }

    LinearRecurrence finish() {
        if (!relation_seen_)
            throw ParseError(1, 1, "no recurrence relation (f[n] = ...) given");
        const unsigned long k = lags_.rbegin()->first;
        std::vector<XRatFunc> coeffs(k);
        for (const auto& [lag, c] : lags_) coeffs[lag - 1] = c;
        if (coeffs.back().is_zero())
            fail(relation_pos_, "coefficient of f[n-" + std::to_string(k) +
                                    "] vanishes after simplification; the stated order is wrong");
        std::optional<std::vector<XRatFunc>> init;
        if (!inits_.empty()) {
            for (const auto& [idx, entry] : inits_)
                if (idx >= k)
                    fail(entry.first, "initial value f[" + std::to_string(idx) +
                                          "] lies beyond the recurrence order " +
                                          std::to_string(k));
            std::vector<XRatFunc> values(k);
            for (unsigned long i = 0; i < k; ++i) {
                auto it = inits_.find(i);
                if (it == inits_.end())
                    fail(relation_pos_,
                         "missing initial value f[" + std::to_string(i) + "]");
                values[i] = it->second.second;
            }
            init = std::move(values);
        }
        return LinearRecurrence(std::move(coeffs), std::move(init));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool relation_seen_ = false;
    Token relation_pos_;
    std::map<unsigned long, XRatFunc> lags_;
    std::map<unsigned long, std::pair<Token, XRatFunc>> inits_;
};

} // namespace

LinearRecurrence parse_spec(const std::string& text) {
    return Parser(Lexer(text).run()).parse();
}

std::string print_relation(const LinearRecurrence& rec) {
    std::string out = "f[n] = ";
    bool first = true;
    for (std::size_t l = 1; l <= rec.coeffs().size(); ++l) {
        const XRatFunc& c = rec.coeffs()[l - 1];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const XRatFunc mag = neg ? -c : c;
        if (!mag.is_one()) out += format_coefficient(mag) + "*";
        out += "f[n-" + std::to_string(l) + "]";
    }
    return out;
}

std::string print_recurrence(const LinearRecurrence& rec) {
    std::string out = print_relation(rec);
    if (rec.has_initial_values()) {
        const auto& init = rec.initial_values();
        for (std::size_t i = 0; i < init.size(); ++i)
            out += "; f[" + std::to_string(i) + "] = " + init[i].to_string();
    }
    return out;
}

} // namespace reccalc
