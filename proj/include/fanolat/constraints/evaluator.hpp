#pragma once

#include "../search/common.hpp"
#include "parser.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fanolat::dsl {

struct Env {
    FanoContext ctx;
    TiltPoint pt;
    std::optional<ChernCharacter> target;
    std::optional<Rational> bound;
};

using Value = std::variant<Rational, ChernCharacter, Slope, bool>;

// Resolved catalog for one environment; names undefined for the genus carry the reason instead.
class Catalog {
public:
    explicit Catalog(const Env& env) {
        const auto& ctx = env.ctx;
        auto put = [&](const std::string& name, auto f) {
            try {
                classes_[name] = f();
            } catch (const std::exception& e) {
                missing_[name] = e.what();
            }
        };
        put("O", [&] { return named_class(ctx, "O"); });
        put("one", [&] { return named_class(ctx, "O"); });
        put("O_x", [&] { return named_class(ctx, "O_x"); });
        put("I_x", [&] { return named_class(ctx, "I_x"); });
        put("E", [&] { return named_class(ctx, "E"); });
        put("Q", [&] { return named_class(ctx, "Q"); });
        put("sky", [&] { return named_class(ctx, "skyscraper_projection"); });
        put("glue", [&] { return named_class(ctx, "gluing_Ku"); });
        put("v", [&] { return ku_basis(ctx).b1; });
        put("w", [&] { return ku_basis(ctx).b2; });
        put("s", [&] { return alt_basis(ctx).b1; });
        put("t", [&] { return alt_basis(ctx).b2; });
        put("H", [] { return ChernCharacter{0, 1, 0, 0}; });
        put("L", [] { return ChernCharacter{0, 0, 1, 0}; });
        put("P", [] { return ChernCharacter{0, 0, 0, 1}; });
        if (env.target) classes_["target"] = *env.target;
        else missing_["target"] = "no target bound in this environment";
    }

    const ChernCharacter& get(const std::string& name) const {
        if (auto it = classes_.find(name); it != classes_.end()) return it->second;
        auto m = missing_.find(name);
        throw EvalError("'" + name + "' is unavailable: " + (m != missing_.end() ? m->second : "unknown"));
    }

private:
    std::map<std::string, ChernCharacter> classes_;
    std::map<std::string, std::string> missing_;
};

class Evaluator {
public:
    Evaluator(const ConstraintSystem& sys, const Env& env) : sys_(sys), env_(env), catalog_(env) {}

    // assignment is indexed like sys.variables
    bool holds(const std::vector<long long>& assignment) const {
        if (assignment.size() != sys_.variables.size())
            throw EvalError("assignment covers " + std::to_string(assignment.size()) + " of " +
                            std::to_string(sys_.variables.size()) + " variables");
        Frame f;
        for (std::size_t i = 0; i < assignment.size(); ++i) f.scalars[sys_.variables[i].name] = Rational(assignment[i]);
        // lets and constraints interleave in source order
        for (auto& st : sys_.statements) {
            if (auto* l = std::get_if<LetDecl>(&st)) {
                f.lets[l->name] = eval(l->value, f);
            } else if (auto* c = std::get_if<ConstraintStmt>(&st)) {
                if (!std::get<bool>(eval(c->expr, f))) return false;
            }
        }
        return true;
    }

    Value evaluate(const NodePtr& n, const std::map<std::string, Rational>& vars) const {
        Frame f;
        f.scalars = vars;
        for (auto& l : sys_.lets) f.lets[l.name] = eval(l.value, f);
        return eval(n, f);
    }

private:
    struct Frame {
        std::map<std::string, Rational> scalars;
        std::map<std::string, Value> lets;
    };

    const ConstraintSystem& sys_;
    Env env_;
    Catalog catalog_;

    static const Rational& num(const Value& v) { return std::get<Rational>(v); }
    static const ChernCharacter& cls(const Value& v) { return std::get<ChernCharacter>(v); }

    static Slope as_slope(const Value& v) {
        if (auto* s = std::get_if<Slope>(&v)) return *s;
        return Slope::finite(std::get<Rational>(v));
    }

    static bool compare(const Value& l, CmpOp op, const Value& r) {
        if (std::holds_alternative<ChernCharacter>(l)) return cls(l) == cls(r);
        Cmp c = slope_cmp(as_slope(l), as_slope(r));
        switch (op) {
            case CmpOp::lt: return c == Cmp::lt;
            case CmpOp::le: return c != Cmp::gt;
            case CmpOp::eq: return c == Cmp::eq;
            case CmpOp::ge: return c != Cmp::lt;
            default: return c == Cmp::gt;
        }
    }

    Value eval(const NodePtr& n, Frame& f) const {
        switch (n->kind) {
            case Kind::number: return Rational(Integer(n->text));
            case Kind::ident: {
                if (auto it = f.scalars.find(n->text); it != f.scalars.end()) return it->second;
                if (auto it = f.lets.find(n->text); it != f.lets.end()) return it->second;
                if (n->text == "bound") {
                    if (!env_.bound) throw EvalError("'bound' is unavailable: no ext^1 bound in this environment");
                    return *env_.bound;
                }
                if (implicit_variable(n->text) && !sys_.let_types.count(n->text))
                    throw EvalError("variable '" + n->text + "' is unassigned");
                return catalog_.get(n->text);
            }
            case Kind::neg: {
                Value v = eval(n->kids[0], f);
                if (auto* q = std::get_if<Rational>(&v)) return -*q;
                return -cls(v);
            }
            case Kind::lnot: return !std::get<bool>(eval(n->kids[0], f));
            case Kind::add:
            case Kind::sub: {
                Value l = eval(n->kids[0], f), r = eval(n->kids[1], f);
                bool add = n->kind == Kind::add;
                if (std::holds_alternative<Rational>(l)) return add ? num(l) + num(r) : num(l) - num(r);
                return add ? cls(l) + cls(r) : cls(l) - cls(r);
            }
            case Kind::mul: {
                Value l = eval(n->kids[0], f), r = eval(n->kids[1], f);
                if (std::holds_alternative<Rational>(l) && std::holds_alternative<Rational>(r)) return num(l) * num(r);
                if (std::holds_alternative<Rational>(l)) return num(l) * cls(r);
                return num(r) * cls(l);
            }
            case Kind::div: {
                Value l = eval(n->kids[0], f), r = eval(n->kids[1], f);
                if (num(r).is_zero()) throw EvalError("division by zero at line " + std::to_string(n->pos.line) +
                                                      ", column " + std::to_string(n->pos.col));
                if (std::holds_alternative<Rational>(l)) return num(l) / num(r);
                return (1 / num(r)) * cls(l);
            }
            case Kind::land: return std::get<bool>(eval(n->kids[0], f)) && std::get<bool>(eval(n->kids[1], f));
            case Kind::lor: return std::get<bool>(eval(n->kids[0], f)) || std::get<bool>(eval(n->kids[1], f));
            case Kind::compare: {
                Value l = eval(n->kids[0], f);
                for (std::size_t i = 0; i < n->ops.size(); ++i) {
                    Value r = eval(n->kids[i + 1], f);
                    if (!compare(l, n->ops[i], r)) return false;
                    l = std::move(r);
                }
                return true;
            }
            case Kind::call: return call(n, f);
        }
        throw EvalError("malformed expression");
    }

    Value call(const NodePtr& n, Frame& f) const {
        const std::string& fn = n->text;
        const auto& ctx = env_.ctx;
        const Rational& d = ctx.degree;
        Value a0 = eval(n->kids[0], f);
        if (fn == "chi") return chi(ctx, cls(a0), cls(eval(n->kids[1], f)));
        if (fn == "twistH") return twist_line(cls(a0), num(eval(n->kids[1], f)), d);
        const ChernCharacter& x = cls(a0);
        if (fn == "imZ") return charge(x, env_.pt, ctx).im;
        if (fn == "reZ") return charge(x, env_.pt, ctx).re;
        if (fn == "imZ0") return rotated_charge(x, env_.pt, ctx).im;
        if (fn == "reZ0") return rotated_charge(x, env_.pt, ctx).re;
        if (fn == "delta") return discriminant(x, d);
        if (fn == "ch1beta") return ch1_beta(x, env_.pt.beta);
        if (fn == "ch2beta") return ch2_beta(x, env_.pt.beta, d);
        if (fn == "ch0") return x.r;
        if (fn == "ch1") return x.c;
        if (fn == "ch2") return x.l;
        if (fn == "ch3") return x.p;
        if (fn == "mu") return tilt_slope(x, env_.pt, ctx);
        if (fn == "mu0") return rotated_slope(x, env_.pt, ctx);
        if (fn == "muClassical") return classical_mu(x);
        throw EvalError("unknown function " + fn);
    }
};

inline bool evaluate(const ConstraintSystem& sys, const std::vector<long long>& assignment, const Env& env) {
    return Evaluator(sys, env).holds(assignment);
}

// Brute force over the declared ranges (or an explicit box indexed like sys.variables).
inline std::vector<Tuple> solve(const ConstraintSystem& sys, const Env& env,
                                std::optional<std::vector<Interval>> box = std::nullopt, unsigned threads = 0) {
    if (!box) {
        box.emplace();
        for (auto& v : sys.variables) {
            if (!v.range) throw EvalError("variable '" + v.name + "' has no declared range");
            box->push_back({v.range->first, v.range->second});
        }
    }
    if (box->size() != sys.variables.size()) throw EvalError("box does not match the variables");
    const Evaluator ev(sys, env);
    if (box->empty()) return ev.holds({}) ? std::vector<Tuple>{Tuple{}} : std::vector<Tuple>{};
    return brute_force_oracle(*box, [&](const Tuple& t) { return ev.holds(t); }, threads);
}

}  // namespace fanolat::dsl
