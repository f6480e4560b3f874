#ifndef HOPFALG_SCALAR_HPP
#define HOPFALG_SCALAR_HPP

#include <array>
#include <string>

#include "hopfalg/rational.hpp"

namespace hopfalg {

/// Element of K = Q(xi), xi a primitive 6th root of unity, on the basis
/// {1, xi} with the reduction xi^2 = xi - 1.  Stored in canonical form, so
/// equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : r0_(n) {}
    Scalar(int n) : r0_(n) {}
    Scalar(Rational r0) : r0_(std::move(r0)) {}
    Scalar(Rational r0, Rational r1) : r0_(std::move(r0)), r1_(std::move(r1)) {}

    static Scalar xi() { return Scalar(Rational(0), Rational(1)); }

    const Rational& r0() const { return r0_; }
    const Rational& r1() const { return r1_; }
    bool is_zero() const { return r0_.is_zero() && r1_.is_zero(); }
    bool is_one() const { return r0_.is_one() && r1_.is_zero(); }
    bool is_rational() const { return r1_.is_zero(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.r0_ + b.r0_, a.r1_ + b.r1_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.r0_ - b.r0_, a.r1_ - b.r1_);
    }
    Scalar operator-() const { return Scalar(-r0_, -r1_); }

    // (a + b xi)(c + d xi) = (ac - bd) + (ad + bc + bd) xi
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.r1_.is_zero()) {
            if (a.r0_.is_zero()) return Scalar();
            return Scalar(a.r0_ * b.r0_, a.r0_ * b.r1_);
        }
        if (b.r1_.is_zero()) {
            if (b.r0_.is_zero()) return Scalar();
            return Scalar(a.r0_ * b.r0_, a.r1_ * b.r0_);
        }
        Rational bd = a.r1_ * b.r1_;
        return Scalar(a.r0_ * b.r0_ - bd, a.r0_ * b.r1_ + a.r1_ * b.r0_ + bd);
    }

    /// Field norm a^2 + ab + b^2; zero only at zero.
    Rational norm() const { return r0_ * r0_ + r0_ * r1_ + r1_ * r1_; }

    Scalar inverse() const {
        if (is_zero()) throw Error("DivisionByZero", "inverse of zero scalar");
        Rational n = norm();
        return Scalar((r0_ + r1_) / n, -r1_ / n);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { r0_ += o.r0_; r1_ += o.r1_; return *this; }
    Scalar& operator-=(const Scalar& o) { r0_ -= o.r0_; r1_ -= o.r1_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.r0_ == b.r0_ && a.r1_ == b.r1_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(long long k) const {
        if (k < 0) return inverse().pow(-k);
        Scalar acc(1), base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    size_t magnitude() const { return r0_.magnitude() + r1_.magnitude(); }

    /// Literal format: "p/q+r/s*x" with x denoting xi; "x" and "-x" allowed,
    /// zero prints as "0".  print/parse round-trip bit-exactly.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (!r0_.is_zero()) out = r0_.str();
        if (!r1_.is_zero()) {
            std::string xi_part;
            if (r1_.is_one()) xi_part = "x";
            else if ((-r1_).is_one()) xi_part = "-x";
            else xi_part = r1_.str() + "*x";
            if (!out.empty() && xi_part[0] != '-') out += "+";
            out += xi_part;
        }
        return out;
    }

    static Scalar parse(const std::string& s) {
        if (s.empty()) throw Error("ParseError", "empty scalar literal");
        // split at the last top-level +/- that is not the leading sign
        size_t split = std::string::npos;
        for (size_t i = 1; i < s.size(); ++i)
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-')
                split = i;
        auto parse_term = [](const std::string& t) -> Scalar {
            auto star = t.find('*');
            if (star != std::string::npos) {
                if (t.substr(star + 1) != "x") throw Error("ParseError", "bad scalar term: " + t);
                return Scalar(Rational(0), Rational::parse(t.substr(0, star)));
            }
            if (t == "x") return xi();
            if (t == "-x") return -xi();
            if (t == "+x") return xi();
            return Scalar(Rational::parse(t));
        };
        if (split == std::string::npos) return parse_term(s);
        Scalar lhs = parse_term(s.substr(0, split));
        std::string rest = s.substr(split);
        if (rest[0] == '+') rest = rest.substr(1);
        return lhs + parse_term(rest);
    }

private:
    Rational r0_, r1_;
};

inline Scalar xi_power(long long k) {
    // xi^k cycles with period 6: 1, xi, xi-1, -1, -xi, 1-xi
    long long r = ((k % 6) + 6) % 6;
    static const std::array<std::pair<int, int>, 6> tab = {{
        {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
    return Scalar(Rational(tab[r].first), Rational(tab[r].second));
}

enum class ThetaSign { plus, minus };

/// Named constants of the field: xi, Lambda = (xi-1)(xi+1)^{-1} and a
/// fixed square root theta of xi - 1.  Since xi itself squares to xi - 1,
/// theta = +xi or -xi depending on configuration; nothing downstream
/// distinguishes the two choices.
struct NamedConstants {
    Scalar xi;
    Scalar lambda;
    Scalar lambda_inv;
    Scalar theta;
    ThetaSign theta_sign;

    explicit NamedConstants(ThetaSign sign = ThetaSign::plus)
        : xi(Scalar::xi()),
          lambda((xi - Scalar(1)) * (xi + Scalar(1)).inverse()),
          lambda_inv((xi + Scalar(1)) * (xi - Scalar(1)).inverse()),
          theta(sign == ThetaSign::plus ? xi : -xi),
          theta_sign(sign) {}
};

} // namespace hopfalg

#endif
