#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fanolat::dsl {

struct Pos {
    int line = 1, col = 1;
};

enum class Type { scalar, cls, slope, boolean };

inline std::string to_string(Type t) {
    switch (t) {
        case Type::scalar: return "scalar";
        case Type::cls: return "class";
        case Type::slope: return "slope";
        default: return "boolean";
    }
}

enum class CmpOp { lt, le, eq, ge, gt };

inline const char* to_string(CmpOp op) {
    switch (op) {
        case CmpOp::lt: return "<";
        case CmpOp::le: return "<=";
        case CmpOp::eq: return "=";
        case CmpOp::ge: return ">=";
        default: return ">";
    }
}

enum class Kind { number, ident, neg, lnot, add, sub, mul, div, land, lor, compare, call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Expression tree. `text` holds the digits of a number, an identifier, or a function name.
// Compare nodes hold n operands and n-1 operators (chains like x < y <= z).
struct Node {
    Kind kind;
    std::string text;
    std::vector<NodePtr> kids;
    std::vector<CmpOp> ops;
    Pos pos;
};

inline NodePtr make(Kind k, Pos p, std::vector<NodePtr> kids = {}, std::string text = {}, std::vector<CmpOp> ops = {}) {
    return std::make_shared<const Node>(Node{k, std::move(text), std::move(kids), std::move(ops), p});
}

// Structural equality; source positions are ignored.
inline bool same_tree(const NodePtr& a, const NodePtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->text != b->text || a->ops != b->ops || a->kids.size() != b->kids.size())
        return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!same_tree(a->kids[i], b->kids[i])) return false;
    return true;
}

struct VarDecl {
    std::string name;
    std::optional<std::pair<long long, long long>> range;
    Pos pos;
};

struct LetDecl {
    std::string name;
    NodePtr value;
    Pos pos;
};

struct ConstraintStmt {
    NodePtr expr;
};

using Statement = std::variant<VarDecl, LetDecl, ConstraintStmt>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    Pos pos;
    std::vector<std::string> expected;
    std::string found;
    SyntaxError(Pos p, std::vector<std::string> exp, std::string f)
        : Error(format(p, exp, f)), pos(p), expected(std::move(exp)), found(std::move(f)) {}

    static std::string format(Pos p, const std::vector<std::string>& exp, const std::string& f) {
        std::string s = "line " + std::to_string(p.line) + ", column " + std::to_string(p.col) + ": expected ";
        if (exp.size() == 1) s += exp[0];
        else {
            s += "one of ";
            for (std::size_t i = 0; i < exp.size(); ++i) s += (i ? ", " : "") + exp[i];
        }
        return s + "; found " + f;
    }
};

struct NameError : Error {
    Pos pos;
    NameError(Pos p, const std::string& msg)
        : Error("line " + std::to_string(p.line) + ", column " + std::to_string(p.col) + ": " + msg), pos(p) {}
};

struct TypeError : Error {
    Pos pos;
    TypeError(Pos p, const std::string& msg)
        : Error("line " + std::to_string(p.line) + ", column " + std::to_string(p.col) + ": " + msg), pos(p) {}
};

// Raised during evaluation (division by zero, class undefined for the genus); never means "false".
struct EvalError : Error {
    using Error::Error;
};

}  // namespace fanolat::dsl
