#pragma once

#include "../tilt.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fanolat {

struct SearchOptions {
    // nullopt: strict exactly when ch_1^beta of the target is positive.
    std::optional<bool> strict_ch1_bounds;
    long long max_rank_cap = 60;
    bool require_bounded = false;
    unsigned threads = 0;  // 0 = hardware concurrency
    long long ch2_denominator = 1;
};

struct UnboundedRegion : std::runtime_error {
    std::string direction;
    explicit UnboundedRegion(std::string dir)
        : std::runtime_error("unbounded region: no exact bound in direction " + dir), direction(std::move(dir)) {}
};

struct Interval {
    long long lo = 0, hi = -1;
    bool empty() const { return lo > hi; }
    long long size() const { return empty() ? 0 : hi - lo + 1; }
};

// Bookkeeping shared by every search result.
struct SearchMeta {
    bool complete = true;
    std::vector<std::string> warnings;
    std::vector<Interval> box;  // hull of everything enumerated, per variable

    void note_unbounded(const std::string& direction, const SearchOptions& opts) {
        if (opts.require_bounded) throw UnboundedRegion(direction);
        complete = false;
        std::string w = "no exact bound in direction " + direction + "; capped at +-" + std::to_string(opts.max_rank_cap);
        if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
    }
    void widen(std::size_t var, long long lo, long long hi) {
        if (lo > hi) return;
        if (box.size() <= var) box.resize(var + 1);
        Interval& iv = box[var];
        if (iv.empty()) iv = {lo, hi};
        else iv = {std::min(iv.lo, lo), std::max(iv.hi, hi)};
    }
    void merge(const SearchMeta& o) {
        complete = complete && o.complete;
        for (auto& w : o.warnings)
            if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
        std::sort(warnings.begin(), warnings.end());
        for (std::size_t i = 0; i < o.box.size(); ++i) widen(i, o.box[i].lo, o.box[i].hi);
    }
};

inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs body(i, out) for i in [lo, hi] on contiguous chunks and concatenates the per-worker
// vectors in index order. Callers sort afterwards; output never depends on the thread count.
template <class T, class Body>
std::vector<T> parallel_collect(long long lo, long long hi, unsigned threads, Body body) {
    std::vector<T> out;
    if (lo > hi) return out;
    const long long n = hi - lo + 1;
    const long long workers = std::max<long long>(1, std::min<long long>(resolve_threads(threads), n));
    if (workers == 1) {
        for (long long i = lo; i <= hi; ++i) body(i, out);
        return out;
    }
    std::vector<std::vector<T>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const long long chunk = (n + workers - 1) / workers;
    for (long long w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                long long s = lo + w * chunk, e = std::min(hi, s + chunk - 1);
                for (long long i = s; i <= e; ++i) body(i, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

using Tuple = std::vector<long long>;

// Evaluates pred at every lattice point of the box; no bound derivation at all.
template <class Pred>
std::vector<Tuple> brute_force_oracle(const std::vector<Interval>& box, Pred pred, unsigned threads = 0) {
    for (auto& iv : box)
        if (iv.empty()) return {};
    if (box.empty()) return {};
    auto rows = parallel_collect<Tuple>(box[0].lo, box[0].hi, threads, [&](long long first, std::vector<Tuple>& out) {
        Tuple t(box.size());
        t[0] = first;
        for (std::size_t k = 1; k < box.size(); ++k) t[k] = box[k].lo;
        while (true) {
            if (pred(t)) out.push_back(t);
            std::size_t k = box.size() - 1;
            while (k >= 1) {
                if (t[k] < box[k].hi) { ++t[k]; break; }
                t[k] = box[k].lo;
                --k;
            }
            if (k == 0) break;
        }
    });
    std::sort(rows.begin(), rows.end());
    return rows;
}

// floor/ceil of a rational as machine integers
inline long long floor_ll(const Rational& q) { return to_ll(q.floor()); }
inline long long ceil_ll(const Rational& q) { return to_ll(q.ceil()); }

}  // namespace fanolat
