#pragma once

#include "ast.hpp"
#include "parser.hpp"

#include <random>
#include <string>

namespace fanolat::dsl {

// Random well-typed expressions, for round-trip testing.
class TreeGenerator {
public:
    explicit TreeGenerator(std::uint64_t seed) : rng_(seed) {}

    NodePtr boolean(int depth) {
        switch (depth <= 0 ? 0 : pick(5)) {
            case 0:
            case 1: return comparison(depth);
            case 2: return make(Kind::land, {}, {boolean(depth - 1), boolean(depth - 1)});
            case 3: return make(Kind::lor, {}, {boolean(depth - 1), boolean(depth - 1)});
            default: return make(Kind::lnot, {}, {boolean(depth - 1)});
        }
    }

    NodePtr scalar(int depth) {
        if (depth <= 0) {
            if (pick(2)) return make(Kind::number, {}, {}, std::to_string(pick(20)));
            static const char* vars[] = {"a", "b", "c", "d"};
            return make(Kind::ident, {}, {}, vars[pick(4)]);
        }
        switch (pick(8)) {
            case 0: return make(Kind::add, {}, {scalar(depth - 1), scalar(depth - 1)});
            case 1: return make(Kind::sub, {}, {scalar(depth - 1), scalar(depth - 1)});
            case 2: return make(Kind::mul, {}, {scalar(depth - 1), scalar(depth - 1)});
            case 3: return make(Kind::div, {}, {scalar(depth - 1), scalar(depth - 1)});
            case 4: return make(Kind::neg, {}, {scalar(depth - 1)});
            case 5: {
                static const char* fs[] = {"imZ", "reZ", "imZ0", "reZ0", "delta", "ch1beta", "ch0", "ch2"};
                return make(Kind::call, {}, {cls(depth - 1)}, fs[pick(8)]);
            }
            case 6: return make(Kind::call, {}, {cls(depth - 1), cls(depth - 1)}, "chi");
            default: return scalar(0);
        }
    }

    NodePtr cls(int depth) {
        if (depth <= 0) {
            static const char* names[] = {"O", "I_x", "E", "v", "w", "sky", "H", "L", "target"};
            return make(Kind::ident, {}, {}, names[pick(9)]);
        }
        switch (pick(6)) {
            case 0: return make(Kind::add, {}, {cls(depth - 1), cls(depth - 1)});
            case 1: return make(Kind::sub, {}, {cls(depth - 1), cls(depth - 1)});
            case 2: return make(Kind::mul, {}, {scalar(depth - 1), cls(depth - 1)});
            case 3: return make(Kind::neg, {}, {cls(depth - 1)});
            case 4: return make(Kind::call, {}, {cls(depth - 1), scalar(depth - 1)}, "twistH");
            default: return cls(0);
        }
    }

    NodePtr slope(int depth) {
        static const char* fs[] = {"mu", "mu0", "muClassical"};
        return make(Kind::call, {}, {cls(depth)}, fs[pick(3)]);
    }

private:
    std::mt19937_64 rng_;

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    NodePtr ordered(int depth) { return pick(2) ? scalar(depth) : slope(depth); }

    NodePtr comparison(int depth) {
        int n = 2 + pick(2);
        std::vector<NodePtr> kids;
        std::vector<CmpOp> ops;
        for (int i = 0; i < n; ++i) {
            kids.push_back(ordered(depth - 1));
            if (i) ops.push_back(static_cast<CmpOp>(pick(5)));
        }
        return make(Kind::compare, {}, std::move(kids), {}, std::move(ops));
    }
};

}  // namespace fanolat::dsl
