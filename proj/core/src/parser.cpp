#include "hornmodal/parser.hpp"

#include <algorithm>
#include <cctype>

namespace hornmodal {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// ── Modal formula parser ────────────────────────────────────────────────────

enum class Tok { Ident, Tilde, Diamond, Box, Amp, Pipe, Arrow, LParen, RParen, End };

struct ModalLexer {
    const std::string& text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    std::size_t tok_pos = 0;

    explicit ModalLexer(const std::string& t) : text(t) { next(); }

    void next() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (ident_start(c)) {
            std::size_t start = pos;
            while (pos < text.size() && ident_char(text[pos])) ++pos;
            ident = text.substr(start, pos - start);
            tok = Tok::Ident;
            return;
        }
        switch (c) {
        case '~': ++pos; tok = Tok::Tilde; return;
        case '&': ++pos; tok = Tok::Amp; return;
        case '|': ++pos; tok = Tok::Pipe; return;
        case '(': ++pos; tok = Tok::LParen; return;
        case ')': ++pos; tok = Tok::RParen; return;
        case '<':
            if (pos + 1 < text.size() && text[pos + 1] == '>') {
                pos += 2;
                tok = Tok::Diamond;
                return;
            }
            throw ParseError("expected '<>'", pos);
        case '[':
            if (pos + 1 < text.size() && text[pos + 1] == ']') {
                pos += 2;
                tok = Tok::Box;
                return;
            }
            throw ParseError("expected '[]'", pos);
        case '-':
            if (pos + 1 < text.size() && text[pos + 1] == '>') {
                pos += 2;
                tok = Tok::Arrow;
                return;
            }
            throw ParseError("expected '->'", pos);
        default:
            throw ParseError(std::string("unknown token '") + c + "'", pos);
        }
    }
};

struct ModalParser {
    ModalLexer lex;

    explicit ModalParser(const std::string& t) : lex(t) {}

    FormulaPtr parse() {
        FormulaPtr f = implication();
        if (lex.tok != Tok::End) throw ParseError("trailing input", lex.tok_pos);
        return f;
    }

    FormulaPtr implication() {
        FormulaPtr a = disjunction();
        if (lex.tok == Tok::Arrow) {
            lex.next();
            FormulaPtr b = implication();
            return Formula::implies(a, b);
        }
        return a;
    }

    FormulaPtr disjunction() {
        FormulaPtr a = conjunction();
        while (lex.tok == Tok::Pipe) {
            lex.next();
            a = Formula::mk_or(a, conjunction());
        }
        return a;
    }

    FormulaPtr conjunction() {
        FormulaPtr a = unary();
        while (lex.tok == Tok::Amp) {
            lex.next();
            a = Formula::mk_and(a, unary());
        }
        return a;
    }

    FormulaPtr unary() {
        switch (lex.tok) {
        case Tok::Tilde:
            lex.next();
            return Formula::mk_not(unary());
        case Tok::Diamond:
            lex.next();
            return Formula::diamond(unary());
        case Tok::Box:
            lex.next();
            return Formula::box(unary());
        default:
            return atom();
        }
    }

    FormulaPtr atom() {
        if (lex.tok == Tok::Ident) {
            std::string name = lex.ident;
            lex.next();
            return Formula::var(name);
        }
        if (lex.tok == Tok::LParen) {
            lex.next();
            FormulaPtr f = implication();
            if (lex.tok != Tok::RParen) throw ParseError("expected ')'", lex.tok_pos);
            lex.next();
            return f;
        }
        throw ParseError("expected formula", lex.tok_pos);
    }
};

// ── Frame-condition parser ──────────────────────────────────────────────────

enum class HTok { Ident, Comma, Arrow, Sep, End };

struct HornLexer {
    const std::string& text;
    std::size_t pos = 0;
    HTok tok = HTok::End;
    std::string ident;
    std::size_t tok_pos = 0;

    explicit HornLexer(const std::string& t) : text(t) { next(); }

    void next() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = HTok::End;
            return;
        }
        char c = text[pos];
        if (c == '\n' || c == ';') {
            ++pos;
            tok = HTok::Sep;
            return;
        }
        if (c == ',') {
            ++pos;
            tok = HTok::Comma;
            return;
        }
        if (c == '-') {
            if (pos + 1 < text.size() && text[pos + 1] == '>') {
                pos += 2;
                tok = HTok::Arrow;
                return;
            }
            throw ParseError("expected '->'", pos);
        }
        if (ident_start(c)) {
            std::size_t start = pos;
            while (pos < text.size() && ident_char(text[pos])) ++pos;
            ident = text.substr(start, pos - start);
            tok = HTok::Ident;
            return;
        }
        throw ParseError(std::string("unknown token '") + c + "'", pos);
    }
};

struct HornParser {
    HornLexer lex;

    explicit HornParser(const std::string& t) : lex(t) {}

    std::string var_name() {
        if (lex.tok != HTok::Ident) throw ParseError("expected variable name", lex.tok_pos);
        if (lex.ident == "R") throw ParseError("'R' is the relation symbol, not a variable", lex.tok_pos);
        if (lex.ident == "false") throw ParseError("'false' is reserved", lex.tok_pos);
        std::string name = lex.ident;
        lex.next();
        return name;
    }

    std::pair<std::string, std::string> atom() {
        std::string a = var_name();
        if (lex.tok != HTok::Ident || lex.ident != "R")
            throw ParseError("expected 'R'", lex.tok_pos);
        lex.next();
        std::string b = var_name();
        return {a, b};
    }

    void add_var(HornClause& c, const std::string& v) {
        if (c.var_index(v) < 0) c.variables.push_back(v);
    }

    HornClause clause() {
        HornClause c;
        if (lex.tok == HTok::Ident) {
            for (;;) {
                auto [a, b] = atom();
                add_var(c, a);
                add_var(c, b);
                auto e = std::make_pair(a, b);
                if (std::find(c.preq_edges.begin(), c.preq_edges.end(), e) == c.preq_edges.end())
                    c.preq_edges.push_back(e);
                if (lex.tok == HTok::Comma) {
                    lex.next();
                    continue;
                }
                break;
            }
        }
        if (lex.tok != HTok::Arrow) throw ParseError("expected '->'", lex.tok_pos);
        lex.next();
        if (lex.tok == HTok::Ident && lex.ident == "false") {
            lex.next();
            c.conclusion.is_false = true;
        } else {
            auto [a, b] = atom();
            add_var(c, a);
            add_var(c, b);
            c.conclusion = {false, a, b};
        }
        if (lex.tok == HTok::Comma)
            throw ParseError("conclusion must be a single atom", lex.tok_pos);
        return c;
    }

    HornFormula parse() {
        HornFormula f;
        for (;;) {
            while (lex.tok == HTok::Sep) lex.next();
            if (lex.tok == HTok::End) break;
            f.clauses.push_back(clause());
            if (lex.tok != HTok::Sep && lex.tok != HTok::End)
                throw ParseError("expected ';' or newline between clauses", lex.tok_pos);
        }
        return f;
    }
};

} // namespace

FormulaPtr parse_modal(const std::string& text) {
    ModalParser p(text);
    return p.parse();
}

HornFormula parse_horn(const std::string& text) {
    HornParser p(text);
    return p.parse();
}

} // namespace hornmodal
