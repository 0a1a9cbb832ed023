#include "albtwist/parser.hpp"

#include <cctype>
#include <set>

namespace albtwist {

namespace {

struct Token {
    enum Kind { Number, Ident, Zeta, Plus, Minus, Star, Caret, LParen, RParen, Slash, End } kind;
    std::string text;
    size_t column;  // 1-based
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        size_t col = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i), col});
            i = j;
        } else if (std::islower(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                                    std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string name = s.substr(i, j - i);
            out.push_back({name == "zeta" ? Token::Zeta : Token::Ident, name, col});
            i = j;
        } else {
            Token::Kind k;
            switch (c) {
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                case '*': k = Token::Star; break;
                case '^': k = Token::Caret; break;
                case '(': k = Token::LParen; break;
                case ')': k = Token::RParen; break;
                case '/': k = Token::Slash; break;
                default: throw parse_error(std::string("unexpected character '") + c + "'", col);
            }
            out.push_back({k, std::string(1, c), col});
            ++i;
        }
    }
    out.push_back({Token::End, "", s.size() + 1});
    return out;
}

struct Parser {
    const std::vector<Token>& toks;
    size_t pos = 0;
    RingPtr ring;
    unsigned n;

    const Token& peek() const { return toks[pos]; }
    Token next() { return toks[pos++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) { ++pos; return true; }
        return false;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (!accept(k)) throw parse_error("expected " + what, peek().column);
    }

    MultiPoly expr() {
        bool neg = false;
        if (accept(Token::Minus)) neg = true;
        else accept(Token::Plus);
        MultiPoly p = term();
        if (neg) p = -p;
        while (true) {
            if (accept(Token::Plus)) p += term();
            else if (accept(Token::Minus)) p -= term();
            else return p;
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (accept(Token::Star)) p *= factor();
        return p;
    }

    MultiPoly factor() {
        MultiPoly p = base();
        if (accept(Token::Caret)) {
            const Token& t = peek();
            if (t.kind != Token::Number) throw parse_error("expected exponent", t.column);
            next();
            p = p.pow(static_cast<unsigned>(std::stoul(t.text)));
        }
        return p;
    }

    MultiPoly base() {
        const Token t = next();
        switch (t.kind) {
            case Token::Number: {
                Integer num(t.text);
                if (accept(Token::Slash)) {
                    const Token d = next();
                    if (d.kind != Token::Number) throw parse_error("expected denominator", d.column);
                    Rational r(num, Integer(d.text));
                    if (r.get_den() == 0) throw parse_error("zero denominator", d.column);
                    r.canonicalize();
                    return MultiPoly::constant(ring, r);
                }
                return MultiPoly::constant(ring, Rational(num));
            }
            case Token::Zeta:
                if (n < 1) throw parse_error("'zeta' requires an ambient order n", t.column);
                return MultiPoly::constant(ring, CycloNum::zeta(n));
            case Token::Ident:
                return MultiPoly::variable(ring, t.text);
            case Token::LParen: {
                MultiPoly p = expr();
                expect(Token::RParen, "')'");
                return p;
            }
            default:
                throw parse_error("unexpected token '" + t.text + "'", t.column);
        }
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, unsigned n) {
    auto toks = lex(text);
    // collect variables up front so the ring is canonical (alphabetical)
    std::set<std::string> names;
    for (const auto& t : toks)
        if (t.kind == Token::Ident) names.insert(t.text);
    RingPtr ring = make_ring(std::vector<std::string>(names.begin(), names.end()));
    if (n < 1) n = 1;
    Parser p{toks, 0, ring, n};
    MultiPoly result = p.expr();
    if (p.peek().kind != Token::End)
        throw parse_error("unexpected trailing input '" + p.peek().text + "'", p.peek().column);
    return result;
}

}  // namespace albtwist
