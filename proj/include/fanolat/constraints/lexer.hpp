#pragma once

#include "ast.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace fanolat::dsl {

enum class Tok {
    number, ident, kw_var, kw_in, kw_let, kw_and, kw_or, kw_not,
    lparen, rparen, lbracket, rbracket, comma, semi,
    plus, minus, star, slash, lt, le, eq, ge, gt, end
};

inline std::string describe(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "identifier";
        case Tok::kw_var: return "'var'";
        case Tok::kw_in: return "'in'";
        case Tok::kw_let: return "'let'";
        case Tok::kw_and: return "'and'";
        case Tok::kw_or: return "'or'";
        case Tok::kw_not: return "'not'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::comma: return "','";
        case Tok::semi: return "';'";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::lt: return "'<'";
        case Tok::le: return "'<='";
        case Tok::eq: return "'='";
        case Tok::ge: return "'>='";
        case Tok::gt: return "'>'";
        default: return "end of input";
    }
}

struct Token {
    Tok kind;
    std::string text;
    Pos pos;
};

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    Pos p;
    std::size_t i = 0;
    auto adv = [&] {
        if (src[i] == '\n') { ++p.line; p.col = 1; }
        else ++p.col;
        ++i;
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n') adv();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) { adv(); continue; }
        Pos start = p;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string t;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) { t += src[i]; adv(); }
            out.push_back({Tok::number, t, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string t;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                t += src[i];
                adv();
            }
            Tok k = Tok::ident;
            if (t == "var") k = Tok::kw_var;
            else if (t == "in") k = Tok::kw_in;
            else if (t == "let") k = Tok::kw_let;
            else if (t == "and") k = Tok::kw_and;
            else if (t == "or") k = Tok::kw_or;
            else if (t == "not") k = Tok::kw_not;
            out.push_back({k, t, start});
            continue;
        }
        auto two = [&](char next) { return i + 1 < src.size() && src[i + 1] == next; };
        Tok k;
        std::string t(1, ch);
        switch (ch) {
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case '[': k = Tok::lbracket; break;
            case ']': k = Tok::rbracket; break;
            case ',': k = Tok::comma; break;
            case ';': k = Tok::semi; break;
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '<':
                if (two('=')) { k = Tok::le; t = "<="; adv(); }
                else k = Tok::lt;
                break;
            case '>':
                if (two('=')) { k = Tok::ge; t = ">="; adv(); }
                else k = Tok::gt;
                break;
            case '=':
                if (two('=')) { t = "=="; adv(); }
                k = Tok::eq;
                break;
            default:
                throw SyntaxError(start, {"a token"}, std::string("character '") + ch + "'");
        }
        adv();
        out.push_back({k, t, start});
    }
    out.push_back({Tok::end, "", p});
    return out;
}

}  // namespace fanolat::dsl
