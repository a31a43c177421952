#include "opalg/parser.hpp"

#include "opalg/algebras.hpp"

#include <cctype>
#include <sstream>

namespace opalg {

namespace {

struct Token {
    enum Type { Number, Ident, Op, End } type;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
        tok_.pos = p_;
        if (p_ >= s_.size()) {
            tok_ = {Token::End, "", p_};
            return;
        }
        char c = s_[p_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t q = p_;
            while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
            if (q < s_.size() && s_[q] == '/' && q + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[q + 1]))) {
                ++q;
                while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
            }
            tok_ = {Token::Number, s_.substr(p_, q - p_), p_};
            p_ = q;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t q = p_;
            while (q < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[q])) || s_[q] == '_'))
                ++q;
            tok_ = {Token::Ident, s_.substr(p_, q - p_), p_};
            p_ = q;
            return;
        }
        static const std::string ops = "+-*.^(),";
        if (ops.find(c) != std::string::npos) {
            tok_ = {Token::Op, std::string(1, c), p_};
            ++p_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", p_);
    }

    const std::string& s_;
    size_t p_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, const AlgebraSpec& alg) : lex_(text), alg_(alg) {}

    Expr parse() {
        Expr e = expr();
        if (lex_.peek().type != Token::End)
            throw ParseError("trailing input after expression", lex_.peek().pos);
        return e;
    }

private:
    bool accept_op(const char* op) {
        if (lex_.peek().type == Token::Op && lex_.peek().text == op) {
            lex_.next();
            return true;
        }
        return false;
    }

    void expect_op(const char* op) {
        if (!accept_op(op))
            throw ParseError(std::string("expected '") + op + "'", lex_.peek().pos);
    }

    Expr expr() {
        bool neg = accept_op("-");
        Expr e = term();
        if (neg) e = -e;
        for (;;) {
            if (accept_op("+"))
                e = e + term();
            else if (accept_op("-"))
                e = e - term();
            else
                return e;
        }
    }

    Expr term() {
        Expr e = factor();
        for (;;) {
            if (accept_op("*"))
                e = e * factor();
            else if (accept_op("."))
                e = sym_product(e, factor());
            else
                return e;
        }
    }

    Expr factor() {
        Expr base = atom();
        while (accept_op("^")) {
            Token t = lex_.next();
            if (t.type != Token::Number || t.text.find('/') != std::string::npos)
                throw ParseError("expected a natural-number exponent", t.pos);
            unsigned long n = std::stoul(t.text);
            Expr p = Expr::unit();
            for (unsigned long j = 0; j < n; ++j) p = p * base;
            base = p;
        }
        return base;
    }

    Expr atom() {
        Token t = lex_.peek();
        if (t.type == Token::Number) {
            lex_.next();
            size_t slash = t.text.find('/');
            if (slash == std::string::npos)
                return Expr::scalar(Scalar::rational(Rational(t.text)));
            Rational num(t.text.substr(0, slash)), den(t.text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator", t.pos);
            return Expr::scalar(Scalar::rational(num / den));
        }
        if (t.type == Token::Op && t.text == "(") {
            lex_.next();
            Expr e = expr();
            expect_op(")");
            return e;
        }
        if (t.type == Token::Ident) {
            lex_.next();
            if (t.text == "i") return Expr::scalar(Scalar::i());
            if (t.text == "hbar") return Expr::scalar(Scalar::hbar());
            if (t.text == "comm" || t.text == "sym") {
                expect_op("(");
                Expr a = expr();
                expect_op(",");
                Expr b = expr();
                expect_op(")");
                // brackets need core letters; derived symbols expand first.
                // The result is normalized to keep nested comm() forms small.
                if (t.text == "comm")
                    return normalize(
                        commutator(expand_derived(a, alg_), expand_derived(b, alg_), alg_), alg_);
                return sym_product(a, b);
            }
            if (t.text == "inv") {
                expect_op("(");
                Token s = lex_.next();
                if (s.type != Token::Ident) throw ParseError("expected a symbol in inv()", s.pos);
                expect_op(")");
                return inverse_symbol(s);
            }
            return symbol(t);
        }
        throw ParseError("expected a factor", t.pos);
    }

    Expr inverse_symbol(const Token& t) {
        const std::string inv_name = "inv" + t.text;
        if (alg_.has_letter(inv_name)) return alg_.letter_expr(inv_name);
        // inverse of a composite designated element, e.g. inv(Psq) -> Q
        if (t.text == "Psq" && alg_.has_letter("Q")) return alg_.letter_expr("Q");
        throw ParseError("'" + t.text + "' is not a designated invertible element of algebra " +
                             alg_.name(),
                         t.pos);
    }

    Expr symbol(const Token& t) {
        if (alg_.has_letter(t.text)) {
            letter_t l = alg_.letter(t.text);
            if (alg_.info(l).kind == LetterKind::Derived && !alg_.has_derived(l))
                throw ParseError("'" + t.text + "' is representation-level only and has no "
                                 "expression form", t.pos);
            return Expr::letter(l);
        }
        // Antisymmetric two-index symbols stored for mu < nu only.
        if (t.text.size() == 3 && (t.text[0] == 'J' || t.text[0] == 'S') &&
            std::isdigit(static_cast<unsigned char>(t.text[1])) &&
            std::isdigit(static_cast<unsigned char>(t.text[2]))) {
            if (t.text[1] == t.text[2])
                throw ParseError("'" + t.text + "': equal index pair is rejected", t.pos);
            std::string flipped = {t.text[0], t.text[2], t.text[1]};
            if (alg_.has_letter(flipped)) return -alg_.letter_expr(flipped);
        }
        throw ParseError("unknown symbol '" + t.text + "' for algebra " + alg_.name(), t.pos);
    }

    Lexer lex_;
    const AlgebraSpec& alg_;
};

void print_rational_factor(std::ostream& os, const Rational& q) {
    if (denominator(q) == 1)
        os << numerator(q);
    else
        os << "(" << numerator(q) << "/" << denominator(q) << ")";
}

}  // namespace

Expr parse_expr(const std::string& text, const AlgebraSpec& alg) {
    return Parser(text, alg).parse();
}

std::string print_expr(const Expr& e, const AlgebraSpec& alg) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& q, bool imag, unsigned hpow, const Word& w) {
        if (q == 0) return;
        Rational a = q;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        if (a < 0) a = -a;
        bool lead = false;  // whether some factor was already printed
        if (a != 1 || (!imag && hpow == 0 && w.empty())) {
            print_rational_factor(os, a);
            lead = true;
        }
        if (imag) os << (lead ? "*" : "") << "i", lead = true;
        if (hpow == 1)
            os << (lead ? "*" : "") << "hbar", lead = true;
        else if (hpow > 1)
            os << (lead ? "*" : "") << "hbar^" << hpow, lead = true;
        for (letter_t l : w) {
            const std::string& n = alg.info(l).name;
            os << (lead ? "*" : "");
            if (alg.info(l).kind == LetterKind::Inverse && n.rfind("inv", 0) == 0)
                os << "inv(" << n.substr(3) << ")";
            else
                os << n;
            lead = true;
        }
    };
    for (const auto& [w, s] : e.terms()) {
        for (const Scalar::Term& t : s.terms()) {
            emit(t.c.re, false, t.hpow, w);
            emit(t.c.im, true, t.hpow, w);
        }
    }
    return os.str();
}

}  // namespace opalg
