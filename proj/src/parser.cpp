#include "pgw/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace pgw {

namespace {

struct Token {
    enum Kind { Ident, LParen, RParen, Star, Equals, Slash, End } kind;
    std::string text;
    int col;
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (c == '(') out.push_back({Token::LParen, "(", col});
        else if (c == ')') out.push_back({Token::RParen, ")", col});
        else if (c == '*') out.push_back({Token::Star, "*", col});
        else if (c == '=') out.push_back({Token::Equals, "=", col});
        else if (c == '/') out.push_back({Token::Slash, "/", col});
        else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Token::Ident, line.substr(i, j - i), col});
            i = j;
            continue;
        } else {
            throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

// Resolves an identifier that is not a declared symbol to a variable index,
// or rejects it.
using VarResolver = std::function<int(const std::string&, int line, int col)>;

class TermParser {
public:
    TermParser(const std::vector<Token>& toks, std::size_t& pos, int lineno, const Signature& sig,
               const Term* groupoid, const VarResolver& resolve)
        : toks_(toks), pos_(pos), lineno_(lineno), sig_(sig), groupoid_(groupoid), resolve_(resolve) {}

    Term expression() {
        Term t = primary();
        while (peek().kind == Token::Star) {
            int col = peek().col;
            advance();
            if (!groupoid_)
                throw ParseError(lineno_, col, "infix * used before a groupoid was declared");
            Term rhs = primary();
            std::vector<Term> subs{t, rhs};
            t = subst_term(*groupoid_, subs);
        }
        return t;
    }

    Term primary() {
        const Token& tk = peek();
        if (tk.kind == Token::Ident) {
            advance();
            if (auto s = sig_.find(tk.text)) {
                if (sig_.symbol(*s).arity != 0)
                    throw ParseError(lineno_, tk.col,
                                     "symbol " + tk.text + " has arity " +
                                         std::to_string(sig_.symbol(*s).arity) +
                                         " and needs prefix application");
                return Term::app(*s);
            }
            return Term::var(resolve_(tk.text, lineno_, tk.col));
        }
        if (tk.kind == Token::LParen) {
            advance();
            const Token& head = peek();
            if (head.kind == Token::Ident) {
                auto s = sig_.find(head.text);
                if (s && sig_.symbol(*s).arity > 0) {
                    advance();
                    int k = sig_.symbol(*s).arity;
                    std::vector<Term> args;
                    for (int i = 0; i < k; ++i) args.push_back(expression());
                    expect(Token::RParen, "')'");
                    return Term::app(*s, std::move(args));
                }
                // Looks like an application of an undeclared symbol.
                if (!s && toks_[pos_ + 1].kind != Token::Star && toks_[pos_ + 1].kind != Token::RParen)
                    throw ParseError(lineno_, head.col, "unknown symbol " + head.text);
            }
            Term t = expression();
            expect(Token::RParen, "')'");
            return t;
        }
        throw ParseError(lineno_, tk.col, "expected a term");
    }

    const Token& peek() const { return toks_[pos_]; }
    void advance() { ++pos_; }
    void expect(Token::Kind k, const std::string& what) {
        if (toks_[pos_].kind != k)
            throw ParseError(lineno_, toks_[pos_].col, "expected " + what);
        ++pos_;
    }

private:
    const std::vector<Token>& toks_;
    std::size_t& pos_;
    int lineno_;
    const Signature& sig_;
    const Term* groupoid_;
    const VarResolver& resolve_;
};

int fixed_witness_var(const std::string& name, bool allow_chain, int line, int col) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (allow_chain) {
        if (name == "z") return 2;
        if (name.size() >= 2 && name[0] == 'z') {
            int idx = 0;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) idx = -1;
                if (idx < 0) break;
                idx = idx * 10 + (name[i] - '0');
            }
            if (idx >= 1) return 1 + idx;
        }
        throw ParseError(line, col, "chain terms may only use x, y, z1..zl (got " + name + ")");
    }
    throw ParseError(line, col, "connection terms may only use x and y (got " + name + ")");
}

}  // namespace

VarietyPresentation parse_presentation(const std::string& text) {
    auto sig = std::make_shared<Signature>();
    std::optional<Term> groupoid;
    std::vector<Identity> identities;
    std::map<int, Term> m_wit, u_wit, zero_wit, one_wit;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = lex_line(line, lineno);
        if (toks[0].kind == Token::End) continue;
        if (toks[0].kind != Token::Ident)
            throw ParseError(lineno, toks[0].col, "expected a directive (sig/groupoid/id/witness)");
        const std::string& head = toks[0].text;
        std::size_t pos = 1;

        if (head == "sig") {
            while (toks[pos].kind != Token::End) {
                if (toks[pos].kind != Token::Ident)
                    throw ParseError(lineno, toks[pos].col, "expected symbol name");
                std::string name = toks[pos].text;
                int namecol = toks[pos].col;
                ++pos;
                if (toks[pos].kind != Token::Slash)
                    throw ParseError(lineno, toks[pos].col, "expected '/' after symbol name");
                ++pos;
                if (toks[pos].kind != Token::Ident)
                    throw ParseError(lineno, toks[pos].col, "expected arity");
                int arity = 0;
                for (char c : toks[pos].text) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw ParseError(lineno, toks[pos].col, "arity must be a number");
                    arity = arity * 10 + (c - '0');
                }
                ++pos;
                try {
                    sig->add(name, arity);
                } catch (const InputError& e) {
                    throw ParseError(lineno, namecol, e.what());
                }
            }
            continue;
        }

        if (head == "groupoid") {
            VarResolver resolve = [](const std::string& name, int l, int c) -> int {
                if (name == "x") return 0;
                if (name == "y") return 1;
                throw ParseError(l, c, "groupoid term may only use x and y (got " + name + ")");
            };
            TermParser tp(toks, pos, lineno, *sig, nullptr, resolve);
            const Token& tk = tp.peek();
            // A bare binary symbol stands for (sym x y).
            if (tk.kind == Token::Ident && toks[pos + 1].kind == Token::End) {
                auto s = sig->find(tk.text);
                if (s && sig->symbol(*s).arity == 2) {
                    groupoid = Term::app(*s, {Term::var(0), Term::var(1)});
                    pos += 1;
                } else if (s) {
                    throw ParseError(lineno, tk.col, "designated groupoid symbol must be binary");
                } else {
                    throw ParseError(lineno, tk.col, "unknown symbol " + tk.text);
                }
            } else {
                groupoid = tp.expression();
            }
            if (toks[pos].kind != Token::End)
                throw ParseError(lineno, toks[pos].col, "trailing tokens after groupoid term");
            continue;
        }

        if (head == "id") {
            std::vector<std::string> names;
            VarResolver resolve = [&names](const std::string& name, int, int) -> int {
                for (std::size_t i = 0; i < names.size(); ++i)
                    if (names[i] == name) return static_cast<int>(i);
                names.push_back(name);
                return static_cast<int>(names.size()) - 1;
            };
            TermParser tp(toks, pos, lineno, *sig, groupoid ? &*groupoid : nullptr, resolve);
            Term lhs = tp.expression();
            tp.expect(Token::Equals, "'='");
            Term rhs = tp.expression();
            if (toks[pos].kind != Token::End)
                throw ParseError(lineno, toks[pos].col, "trailing tokens after identity");
            identities.push_back(Identity{std::move(lhs), std::move(rhs), std::move(names)});
            continue;
        }

        if (head == "witness") {
            if (toks[pos].kind != Token::Ident)
                throw ParseError(lineno, toks[pos].col, "expected witness kind (m/U/zero/one)");
            std::string kind = toks[pos].text;
            int kindcol = toks[pos].col;
            ++pos;
            if (toks[pos].kind != Token::Ident)
                throw ParseError(lineno, toks[pos].col, "expected witness index");
            int index = 0;
            for (char c : toks[pos].text) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(lineno, toks[pos].col, "witness index must be a number");
                index = index * 10 + (c - '0');
            }
            if (index < 1) throw ParseError(lineno, toks[pos].col, "witness indices start at 1");
            ++pos;
            if (toks[pos].kind != Token::Equals)
                throw ParseError(lineno, toks[pos].col, "expected '='");
            ++pos;
            bool chain = (kind == "U");
            bool closed = (kind == "zero" || kind == "one");
            VarResolver resolve = [&](const std::string& name, int l, int c) -> int {
                if (closed)
                    throw ParseError(l, c, "witness " + kind + " terms must be closed (got variable " + name + ")");
                return fixed_witness_var(name, chain, l, c);
            };
            TermParser tp(toks, pos, lineno, *sig, groupoid ? &*groupoid : nullptr, resolve);
            Term t = tp.expression();
            if (toks[pos].kind != Token::End)
                throw ParseError(lineno, toks[pos].col, "trailing tokens after witness term");
            std::map<int, Term>* slot = nullptr;
            if (kind == "m") slot = &m_wit;
            else if (kind == "U") slot = &u_wit;
            else if (kind == "zero") slot = &zero_wit;
            else if (kind == "one") slot = &one_wit;
            else throw ParseError(lineno, kindcol, "unknown witness kind " + kind);
            if (slot->count(index))
                throw ParseError(lineno, kindcol, "duplicate witness " + kind + " " + std::to_string(index));
            slot->emplace(index, std::move(t));
            continue;
        }

        throw ParseError(lineno, toks[0].col, "unknown directive " + head);
    }

    if (sig->size() == 0) throw InputError("spec file declares no symbols");
    VarietyPresentation p;
    p.signature = sig;
    p.identities = std::move(identities);
    if (groupoid) {
        p.groupoid = *groupoid;
    } else {
        // Default: the first binary symbol.
        int found = -1;
        for (int s = 0; s < sig->size() && found < 0; ++s)
            if (sig->symbol(s).arity == 2) found = s;
        if (found < 0) throw InputError("no groupoid declared and no binary symbol to default to");
        p.groupoid = Term::app(found, {Term::var(0), Term::var(1)});
    }

    auto gather = [](const std::map<int, Term>& m, const char* what) {
        std::vector<Term> out;
        int expect = 1;
        for (const auto& [idx, t] : m) {
            if (idx != expect)
                throw InputError(std::string("witness ") + what + " indices must be contiguous from 1");
            out.push_back(t);
            ++expect;
        }
        return out;
    };
    if (!m_wit.empty() || !u_wit.empty() || !zero_wit.empty() || !one_wit.empty()) {
        WitnessSet w;
        w.m_terms = gather(m_wit, "m");
        w.u_terms = gather(u_wit, "U");
        w.zero = gather(zero_wit, "zero");
        w.one = gather(one_wit, "one");
        p.witness = std::move(w);
    }
    validate_presentation(p);
    return p;
}

std::string print_presentation(const VarietyPresentation& p) {
    const Signature& sig = p.sig();
    std::ostringstream os;
    os << "sig";
    for (const auto& s : sig.symbols()) os << " " << s.name << "/" << s.arity;
    os << "\n";
    // Bare symbol form when the groupoid is a plain binary symbol.
    if (!p.groupoid.is_var() && p.groupoid.args().size() == 2 &&
        p.groupoid.args()[0] == Term::var(0) && p.groupoid.args()[1] == Term::var(1)) {
        os << "groupoid " << sig.symbol(p.groupoid.symbol()).name << "\n";
    } else {
        std::vector<std::string> xy{"x", "y"};
        os << "groupoid " << print_term(sig, p.groupoid, xy) << "\n";
    }
    for (const auto& id : p.identities)
        os << "id " << print_identity(sig, id, &p.groupoid) << "\n";
    if (p.witness) {
        const WitnessSet& w = *p.witness;
        std::vector<std::string> xy{"x", "y"};
        std::vector<std::string> xyz{"x", "y"};
        for (int i = 1; i <= w.l(); ++i) xyz.push_back(w.l() == 1 ? "z" : "z" + std::to_string(i));
        for (std::size_t i = 0; i < w.m_terms.size(); ++i)
            os << "witness m " << i + 1 << " = " << print_term(sig, w.m_terms[i], xy, &p.groupoid) << "\n";
        for (std::size_t i = 0; i < w.zero.size(); ++i)
            os << "witness zero " << i + 1 << " = " << print_term(sig, w.zero[i], xy, &p.groupoid) << "\n";
        for (std::size_t i = 0; i < w.one.size(); ++i)
            os << "witness one " << i + 1 << " = " << print_term(sig, w.one[i], xy, &p.groupoid) << "\n";
        for (std::size_t i = 0; i < w.u_terms.size(); ++i)
            os << "witness U " << i + 1 << " = " << print_term(sig, w.u_terms[i], xyz, &p.groupoid) << "\n";
    }
    return os.str();
}

}  // namespace pgw
