#pragma once

#include "ast.hpp"
#include "lexer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fanolat::dsl {

// Class-valued names resolved through the Fano context.
inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> n{"O", "O_x", "I_x", "E", "Q", "sky", "glue", "v", "w", "s", "t",
                                            "one", "H", "L", "P"};
    return n;
}

// Names bound by the evaluation environment.
inline const std::map<std::string, Type>& reserved_names() {
    static const std::map<std::string, Type> n{{"target", Type::cls}, {"bound", Type::scalar}};
    return n;
}

// Undeclared single-letter unknowns.
inline bool implicit_variable(const std::string& s) { return s == "a" || s == "b" || s == "c" || s == "d"; }

struct Signature {
    std::vector<Type> args;
    Type result;
};

inline const std::map<std::string, Signature>& functions() {
    static const std::map<std::string, Signature> f = [] {
        std::map<std::string, Signature> m;
        for (auto n : {"imZ", "reZ", "imZ0", "reZ0", "delta", "ch1beta", "ch2beta", "ch0", "ch1", "ch2", "ch3"})
            m[n] = {{Type::cls}, Type::scalar};
        for (auto n : {"mu", "mu0", "muClassical"}) m[n] = {{Type::cls}, Type::slope};
        m["chi"] = {{Type::cls, Type::cls}, Type::scalar};
        m["twistH"] = {{Type::cls, Type::scalar}, Type::cls};
        return m;
    }();
    return f;
}

inline std::string catalog_listing() {
    std::string s;
    for (auto& n : catalog_names()) s += (s.empty() ? "" : ", ") + n;
    for (auto& [n, _] : reserved_names()) s += ", " + n;
    return s;
}

struct ConstraintSystem {
    std::vector<Statement> statements;
    std::vector<VarDecl> variables;  // declared ones first, then implicit ones in order of use
    std::vector<LetDecl> lets;
    std::vector<NodePtr> constraints;
    std::map<std::string, Type> let_types;

    bool operator==(const ConstraintSystem& o) const {
        if (statements.size() != o.statements.size()) return false;
        for (std::size_t i = 0; i < statements.size(); ++i) {
            const auto &x = statements[i], &y = o.statements[i];
            if (x.index() != y.index()) return false;
            if (auto* v = std::get_if<VarDecl>(&x)) {
                auto& w = std::get<VarDecl>(y);
                if (v->name != w.name || v->range != w.range) return false;
            } else if (auto* l = std::get_if<LetDecl>(&x)) {
                auto& m = std::get<LetDecl>(y);
                if (l->name != m.name || !same_tree(l->value, m.value)) return false;
            } else if (!same_tree(std::get<ConstraintStmt>(x).expr, std::get<ConstraintStmt>(y).expr)) {
                return false;
            }
        }
        return true;
    }
};

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    // Grammar only; names and types are checked by check_system.
    std::vector<Statement> statements() {
        std::vector<Statement> out;
        while (peek().kind != Tok::end) {
            if (peek().kind == Tok::kw_var) out.push_back(var_decl());
            else if (peek().kind == Tok::kw_let) out.push_back(let_decl());
            else {
                NodePtr e = expr();
                if (peek().kind == Tok::semi) next();
                else if (peek().kind != Tok::end) fail(statement_followers());
                out.push_back(ConstraintStmt{e});
            }
        }
        return out;
    }

    NodePtr single_expression() {
        NodePtr e = expr();
        if (peek().kind != Tok::end) fail(statement_followers());
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    const Token& next() { return toks_[at_ == toks_.size() - 1 ? at_ : at_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.pos, std::move(expected), found);
    }
    const Token& expect(Tok k) {
        if (peek().kind != k) fail({describe(k)});
        return next();
    }
    static std::vector<std::string> statement_followers() {
        return {"';'", "'+'", "'-'", "'*'", "'/'", "'<'", "'<='", "'='", "'>='", "'>'", "'and'", "'or'",
                "end of input"};
    }

    long long integer() {
        bool neg = false;
        if (peek().kind == Tok::minus) { next(); neg = true; }
        const Token& t = peek();
        if (t.kind != Tok::number) fail({"number", "'-'"});
        next();
        long long v = 0;
        try {
            v = std::stoll(t.text);
        } catch (...) {
            throw SyntaxError(t.pos, {"number in machine range"}, t.text);
        }
        return neg ? -v : v;
    }

    VarDecl var_decl() {
        Pos p = expect(Tok::kw_var).pos;
        VarDecl d{expect(Tok::ident).text, std::nullopt, p};
        if (peek().kind == Tok::kw_in) {
            next();
            expect(Tok::lbracket);
            long long lo = integer();
            expect(Tok::comma);
            long long hi = integer();
            expect(Tok::rbracket);
            d.range = std::make_pair(lo, hi);
        }
        if (peek().kind != Tok::end) expect(Tok::semi);
        return d;
    }

    LetDecl let_decl() {
        Pos p = expect(Tok::kw_let).pos;
        std::string name = expect(Tok::ident).text;
        expect(Tok::eq);
        NodePtr v = expr();
        if (peek().kind != Tok::end) {
            if (peek().kind != Tok::semi) fail(statement_followers());
            next();
        }
        return {name, v, p};
    }

    NodePtr expr() { return or_expr(); }

    NodePtr or_expr() {
        NodePtr l = and_expr();
        while (peek().kind == Tok::kw_or) {
            Pos p = next().pos;
            l = make(Kind::lor, p, {l, and_expr()});
        }
        return l;
    }
    NodePtr and_expr() {
        NodePtr l = cmp_expr();
        while (peek().kind == Tok::kw_and) {
            Pos p = next().pos;
            l = make(Kind::land, p, {l, cmp_expr()});
        }
        return l;
    }
    static std::optional<CmpOp> cmp_of(Tok t) {
        switch (t) {
            case Tok::lt: return CmpOp::lt;
            case Tok::le: return CmpOp::le;
            case Tok::eq: return CmpOp::eq;
            case Tok::ge: return CmpOp::ge;
            case Tok::gt: return CmpOp::gt;
            default: return std::nullopt;
        }
    }
    NodePtr cmp_expr() {
        NodePtr first = not_expr();
        if (!cmp_of(peek().kind)) return first;
        Pos p = peek().pos;
        std::vector<NodePtr> kids{first};
        std::vector<CmpOp> ops;
        while (auto op = cmp_of(peek().kind)) {
            next();
            ops.push_back(*op);
            kids.push_back(not_expr());
        }
        return make(Kind::compare, p, std::move(kids), {}, std::move(ops));
    }
    NodePtr not_expr() {
        if (peek().kind == Tok::kw_not) {
            Pos p = next().pos;
            return make(Kind::lnot, p, {not_expr()});
        }
        return add_expr();
    }
    NodePtr add_expr() {
        NodePtr l = mul_expr();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& t = next();
            l = make(t.kind == Tok::plus ? Kind::add : Kind::sub, t.pos, {l, mul_expr()});
        }
        return l;
    }
    NodePtr mul_expr() {
        NodePtr l = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& t = next();
            l = make(t.kind == Tok::star ? Kind::mul : Kind::div, t.pos, {l, unary()});
        }
        return l;
    }
    NodePtr unary() {
        if (peek().kind == Tok::minus) {
            Pos p = next().pos;
            return make(Kind::neg, p, {unary()});
        }
        return primary();
    }
    NodePtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                next();
                std::string digits = t.text;
                digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
                return make(Kind::number, t.pos, {}, digits);
            }
            case Tok::ident: {
                next();
                if (peek().kind != Tok::lparen) return make(Kind::ident, t.pos, {}, t.text);
                next();
                std::vector<NodePtr> args;
                if (peek().kind != Tok::rparen) {
                    args.push_back(expr());
                    while (peek().kind == Tok::comma) {
                        next();
                        args.push_back(expr());
                    }
                }
                if (peek().kind != Tok::rparen) fail({"','", "')'"});
                next();
                return make(Kind::call, t.pos, std::move(args), t.text);
            }
            case Tok::lparen: {
                next();
                NodePtr e = expr();
                if (peek().kind != Tok::rparen) fail({"')'"});
                next();
                return e;
            }
            default:
                fail({"number", "identifier", "'('", "'-'", "'not'"});
        }
    }
};

class Checker {
public:
    explicit Checker(ConstraintSystem& sys) : sys_(sys) {}

    void run() {
        for (auto& st : sys_.statements) {
            if (auto* v = std::get_if<VarDecl>(&st)) declare_var(*v);
        }
        for (auto& st : sys_.statements) {
            if (auto* l = std::get_if<LetDecl>(&st)) {
                if (taken(l->name) || std::find(declared_.begin(), declared_.end(), l->name) != declared_.end())
                    throw NameError(l->pos, "'" + l->name + "' is already defined");
                sys_.let_types[l->name] = type_of(l->value);
                sys_.lets.push_back(*l);
            } else if (auto* c = std::get_if<ConstraintStmt>(&st)) {
                Type t = type_of(c->expr);
                if (t != Type::boolean)
                    throw TypeError(c->expr->pos, "constraint must be boolean, got " + to_string(t));
                sys_.constraints.push_back(c->expr);
            }
        }
        for (auto& n : implicit_) sys_.variables.push_back(VarDecl{n, std::nullopt, {}});
    }

private:
    ConstraintSystem& sys_;
    std::vector<std::string> declared_, implicit_;

    bool taken(const std::string& n) const {
        return reserved_names().count(n) || functions().count(n) ||
               std::find(catalog_names().begin(), catalog_names().end(), n) != catalog_names().end() ||
               sys_.let_types.count(n);
    }

    void declare_var(const VarDecl& v) {
        if (taken(v.name) || std::find(declared_.begin(), declared_.end(), v.name) != declared_.end())
            throw NameError(v.pos, "'" + v.name + "' is already defined");
        if (v.range && v.range->first > v.range->second)
            throw NameError(v.pos, "empty range for '" + v.name + "'");
        declared_.push_back(v.name);
        sys_.variables.push_back(v);
    }

    Type type_of(const NodePtr& n) {
        switch (n->kind) {
            case Kind::number: return Type::scalar;
            case Kind::ident: {
                const std::string& s = n->text;
                if (std::find(declared_.begin(), declared_.end(), s) != declared_.end()) return Type::scalar;
                if (auto it = sys_.let_types.find(s); it != sys_.let_types.end()) return it->second;
                if (std::find(catalog_names().begin(), catalog_names().end(), s) != catalog_names().end())
                    return Type::cls;
                if (auto it = reserved_names().find(s); it != reserved_names().end()) return it->second;
                if (implicit_variable(s)) {
                    if (std::find(implicit_.begin(), implicit_.end(), s) == implicit_.end()) implicit_.push_back(s);
                    return Type::scalar;
                }
                throw NameError(n->pos, "unknown identifier '" + s + "'; known names: " + catalog_listing() +
                                            " (variables: declare with 'var', or use a, b, c, d)");
            }
            case Kind::neg: {
                Type t = type_of(n->kids[0]);
                if (t != Type::scalar && t != Type::cls)
                    throw TypeError(n->pos, "cannot negate a " + to_string(t));
                return t;
            }
            case Kind::lnot: {
                Type t = type_of(n->kids[0]);
                if (t != Type::boolean)
                    throw TypeError(n->pos, "'not' needs a boolean, got " + to_string(t) +
                                                " ('not' binds tighter than comparisons; parenthesize)");
                return t;
            }
            case Kind::add:
            case Kind::sub: {
                Type l = type_of(n->kids[0]), r = type_of(n->kids[1]);
                if (l == r && (l == Type::scalar || l == Type::cls)) return l;
                throw TypeError(n->pos, "cannot add or subtract " + to_string(l) + " and " + to_string(r));
            }
            case Kind::mul: {
                Type l = type_of(n->kids[0]), r = type_of(n->kids[1]);
                if (l == Type::scalar && r == Type::scalar) return Type::scalar;
                if ((l == Type::scalar && r == Type::cls) || (l == Type::cls && r == Type::scalar)) return Type::cls;
                throw TypeError(n->pos, "cannot multiply " + to_string(l) + " by " + to_string(r));
            }
            case Kind::div: {
                Type l = type_of(n->kids[0]), r = type_of(n->kids[1]);
                if (r == Type::scalar && (l == Type::scalar || l == Type::cls)) return l;
                throw TypeError(n->pos, "cannot divide " + to_string(l) + " by " + to_string(r));
            }
            case Kind::land:
            case Kind::lor: {
                Type l = type_of(n->kids[0]), r = type_of(n->kids[1]);
                if (l != Type::boolean || r != Type::boolean)
                    throw TypeError(n->pos, "'and'/'or' need booleans, got " + to_string(l) + " and " + to_string(r));
                return Type::boolean;
            }
            case Kind::compare: {
                std::vector<Type> ts;
                for (auto& k : n->kids) ts.push_back(type_of(k));
                for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
                    Type l = ts[i], r = ts[i + 1];
                    bool ordered = (l == Type::scalar || l == Type::slope) && (r == Type::scalar || r == Type::slope);
                    bool classes = l == Type::cls && r == Type::cls && n->ops[i] == CmpOp::eq;
                    if (!ordered && !classes)
                        throw TypeError(n->pos, std::string("cannot compare ") + to_string(l) + " " +
                                                    to_string(n->ops[i]) + " " + to_string(r));
                }
                return Type::boolean;
            }
            case Kind::call: {
                auto it = functions().find(n->text);
                if (it == functions().end()) {
                    std::string all;
                    for (auto& [f, _] : functions()) all += (all.empty() ? "" : ", ") + f;
                    throw NameError(n->pos, "unknown function '" + n->text + "'; known: " + all);
                }
                const Signature& sig = it->second;
                if (sig.args.size() != n->kids.size())
                    throw TypeError(n->pos, n->text + " takes " + std::to_string(sig.args.size()) + " argument(s)");
                for (std::size_t i = 0; i < sig.args.size(); ++i) {
                    Type t = type_of(n->kids[i]);
                    if (t != sig.args[i])
                        throw TypeError(n->kids[i]->pos, n->text + " argument " + std::to_string(i + 1) + " must be " +
                                                             to_string(sig.args[i]) + ", got " + to_string(t));
                }
                return sig.result;
            }
        }
        throw TypeError(n->pos, "malformed expression");
    }
};

inline ConstraintSystem parse(std::string_view text) {
    ConstraintSystem sys;
    sys.statements = Parser(text).statements();
    Checker(sys).run();
    return sys;
}

}  // namespace fanolat::dsl
