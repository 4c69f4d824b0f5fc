#pragma once

#include "parser.hpp"

#include <string>

namespace fanolat::dsl {

namespace detail {

// or 1, and 2, comparison 3, not 4, + - 5, * / 6, unary minus 7, atoms 8
inline int level(const Node& n) {
    switch (n.kind) {
        case Kind::lor: return 1;
        case Kind::land: return 2;
        case Kind::compare: return 3;
        case Kind::lnot: return 4;
        case Kind::add:
        case Kind::sub: return 5;
        case Kind::mul:
        case Kind::div: return 6;
        case Kind::neg: return 7;
        default: return 8;
    }
}

inline std::string print(const NodePtr& n, int need);

inline std::string wrap(const NodePtr& n, int need) {
    std::string s = print(n, need);
    return level(*n) < need ? "(" + s + ")" : s;
}

inline std::string print(const NodePtr& n, int) {
    switch (n->kind) {
        case Kind::number:
        case Kind::ident: return n->text;
        case Kind::neg: return "-" + wrap(n->kids[0], 7);
        case Kind::lnot: return "not " + wrap(n->kids[0], 4);
        case Kind::add: return wrap(n->kids[0], 5) + " + " + wrap(n->kids[1], 6);
        case Kind::sub: return wrap(n->kids[0], 5) + " - " + wrap(n->kids[1], 6);
        case Kind::mul: return wrap(n->kids[0], 6) + "*" + wrap(n->kids[1], 7);
        case Kind::div: return wrap(n->kids[0], 6) + "/" + wrap(n->kids[1], 7);
        case Kind::land: return wrap(n->kids[0], 2) + " and " + wrap(n->kids[1], 3);
        case Kind::lor: return wrap(n->kids[0], 1) + " or " + wrap(n->kids[1], 2);
        case Kind::compare: {
            std::string s = wrap(n->kids[0], 4);
            for (std::size_t i = 0; i < n->ops.size(); ++i)
                s += std::string(" ") + to_string(n->ops[i]) + " " + wrap(n->kids[i + 1], 4);
            return s;
        }
        case Kind::call: {
            std::string s = n->text + "(";
            for (std::size_t i = 0; i < n->kids.size(); ++i) s += (i ? ", " : "") + wrap(n->kids[i], 1);
            return s + ")";
        }
    }
    return "?";
}

}  // namespace detail

inline std::string pretty_print(const NodePtr& n) { return detail::wrap(n, 1); }

inline std::string pretty_print(const ConstraintSystem& sys) {
    std::string out;
    for (auto& st : sys.statements) {
        if (auto* v = std::get_if<VarDecl>(&st)) {
            out += "var " + v->name;
            if (v->range)
                out += " in [" + std::to_string(v->range->first) + ", " + std::to_string(v->range->second) + "]";
            out += ";\n";
        } else if (auto* l = std::get_if<LetDecl>(&st)) {
            out += "let " + l->name + " = " + pretty_print(l->value) + ";\n";
        } else {
            out += pretty_print(std::get<ConstraintStmt>(st).expr) + ";\n";
        }
    }
    return out;
}

}  // namespace fanolat::dsl
