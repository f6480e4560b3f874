#ifndef HOPFALG_RATIONAL_HPP
#define HOPFALG_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfalg {

using bigint = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

/// Arbitrary-precision integer with an int64 fast path.
///
/// Values that fit in int64 are stored inline; arithmetic promotes to a
/// heap-allocated cpp_int only on overflow and demotes back whenever the
/// result fits again.  Structure-constant contractions stay on the fast
/// path essentially always; elimination on large matrices may not.
class Int {
public:
    Int() : v_(0) {}
    Int(long long v) : v_(v) {}
    Int(int v) : v_(v) {}
    explicit Int(const bigint& b) { assign_big(b); }

    Int(const Int& o) : v_(o.v_) {
        if (o.big_) big_ = std::make_unique<bigint>(*o.big_);
    }
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) {
            v_ = o.v_;
            big_ = o.big_ ? std::make_unique<bigint>(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;

    bool is_small() const { return !big_; }
    bool is_zero() const { return big_ ? big_->is_zero() : v_ == 0; }
    bool is_one() const { return !big_ && v_ == 1; }
    int sign() const {
        if (big_) return big_->sign();
        return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0);
    }
    long long small_value() const { return v_; }

    bigint to_big() const { return big_ ? *big_ : bigint(v_); }

    friend Int operator+(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_add_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return Int(bigint(a.to_big() + b.to_big()));
    }
    friend Int operator-(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_sub_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return Int(bigint(a.to_big() - b.to_big()));
    }
    friend Int operator*(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_mul_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return Int(bigint(a.to_big() * b.to_big()));
    }
    Int operator-() const {
        if (is_small() && v_ != INT64_MIN) return Int(-v_);
        return Int(bigint(-to_big()));
    }

    /// Truncated quotient (division must be exact where callers rely on it).
    friend Int operator/(const Int& a, const Int& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "integer division by zero");
        if (a.is_small() && b.is_small() && !(a.v_ == INT64_MIN && b.v_ == -1))
            return Int(a.v_ / b.v_);
        return Int(bigint(a.to_big() / b.to_big()));
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "integer mod by zero");
        if (a.is_small() && b.is_small() && !(a.v_ == INT64_MIN && b.v_ == -1))
            return Int(a.v_ % b.v_);
        return Int(bigint(a.to_big() % b.to_big()));
    }

    Int& operator+=(const Int& o) { *this = *this + o; return *this; }
    Int& operator-=(const Int& o) { *this = *this - o; return *this; }
    Int& operator*=(const Int& o) { *this = *this * o; return *this; }

    friend bool operator==(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) return a.v_ == b.v_;
        return a.to_big() == b.to_big();
    }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) return a.v_ < b.v_;
        return a.to_big() < b.to_big();
    }

    Int abs() const { return sign() < 0 ? -*this : *this; }

    friend Int gcd(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            unsigned long long x = a.v_ < 0 ? 0ULL - (unsigned long long)a.v_ : (unsigned long long)a.v_;
            unsigned long long y = b.v_ < 0 ? 0ULL - (unsigned long long)b.v_ : (unsigned long long)b.v_;
            unsigned long long g = std::gcd(x, y);
            if (g <= (unsigned long long)INT64_MAX) return Int((long long)g);
        }
        return Int(bigint(boost::multiprecision::gcd(a.to_big(), b.to_big())));
    }

    std::string str() const {
        if (is_small()) return std::to_string(v_);
        return big_->str();
    }

    /// Number of decimal digits, as a crude size measure for pivot choice.
    size_t magnitude() const {
        if (is_small()) {
            unsigned long long x = v_ < 0 ? 0ULL - (unsigned long long)v_ : (unsigned long long)v_;
            size_t d = 1;
            while (x >= 10) { x /= 10; ++d; }
            return d;
        }
        return big_->str().size();
    }

    static Int parse(const std::string& s) {
        if (s.empty()) throw Error("ParseError", "empty integer literal");
        try {
            size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos == s.size()) return Int(v);
        } catch (const std::exception&) {
            // fall through to bigint parse
        }
        return Int(bigint(s));
    }

private:
    void assign_big(const bigint& b) {
        if (b >= INT64_MIN && b <= INT64_MAX) {
            v_ = (long long)b;
            big_ = nullptr;
        } else {
            v_ = 0;
            big_ = std::make_unique<bigint>(b);
        }
    }

    long long v_;
    std::unique_ptr<bigint> big_;
};

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // cross-reduce first so the fast integer path survives longer
        Int g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        if (r.den_.sign() < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "rational division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    size_t magnitude() const { return num_.magnitude() + den_.magnitude(); }

    /// "p" or "p/q", q > 1.
    std::string str() const {
        if (den_.is_one()) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int::parse(s));
        return Rational(Int::parse(s.substr(0, slash)), Int::parse(s.substr(slash + 1)));
    }

private:
    void normalize() {
        if (den_.is_zero()) throw Error("DivisionByZero", "zero denominator");
        if (num_.is_zero()) { den_ = Int(1); return; }
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        Int g = gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }

    Int num_, den_;
};

} // namespace hopfalg

#endif
