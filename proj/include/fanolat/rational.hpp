#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fanolat {

using Integer = mpz_class;

// Exact rational, always canonical (lowest terms, positive denominator).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(Integer(std::to_string(v))) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& n, const Integer& d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    Rational(long long n, long long d) : Rational(Integer(std::to_string(n)), Integer(std::to_string(d))) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q"; surrounding whitespace is ignored.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto b = s.find_first_not_of(" \t\r\n");
        auto e = s.find_last_not_of(" \t\r\n");
        if (b == std::string::npos) throw std::invalid_argument("empty rational");
        s = s.substr(b, e - b + 1);
        auto slash = s.find('/');
        auto num_ok = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto to_int = [](std::string t) {
            if (!t.empty() && t[0] == '+') t.erase(0, 1);
            return Integer(t);
        };
        if (slash == std::string::npos) {
            if (!num_ok(s)) throw std::invalid_argument("bad rational: " + s);
            return Rational(to_int(s));
        }
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!num_ok(n) || !num_ok(d) || d[0] == '-' || d[0] == '+')
            throw std::invalid_argument("bad rational: " + s);
        return Rational(to_int(n), to_int(d));
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    Integer floor() const {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    Integer ceil() const {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    // Presentation only.
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, unsigned e) {
    Rational out(1);
    while (e--) out *= base;
    return out;
}

// Smallest integer s with s*s >= n (n >= 0).
inline Integer ceil_sqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("ceil_sqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

// Integer conversion with a range check; loop variables in the searches are machine ints.
inline long long to_ll(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) throw std::overflow_error("integer out of machine range: " + z.get_str());
    return static_cast<long long>(z.get_si());
}

}  // namespace fanolat

template <>
struct std::hash<fanolat::Rational> {
    std::size_t operator()(const fanolat::Rational& r) const {
        return std::hash<std::string>{}(r.str());
    }
};
