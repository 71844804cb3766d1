#pragma once

// Exact univariate polynomials over the integers in the indeterminate t.
// Every morphism coefficient in the library lives in this ring.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace tenv {

class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor): integers embed into Z[t]
    explicit Poly(const mpz_class& c);
    explicit Poly(std::vector<mpz_class> coeffs);
    Poly(std::initializer_list<long> coeffs);

    /// The indeterminate t.
    static Poly t();
    static Poly monomial(const mpz_class& c, std::size_t degree);

    /// coeffs()[i] is the coefficient of t^i; empty for the zero polynomial.
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Horner evaluation at an exact rational.
    mpq_class eval(const mpq_class& v) const;

    /// Text form "c0 + c1*t + c2*t^2" (lowest degree first, zero terms omitted).
    std::string to_string() const;
    /// Inverse of to_string; also accepts any order of terms and "t", "-t", "3*t^2".
    static Poly parse(std::string_view text);

private:
    void trim();

    std::vector<mpz_class> c_;
};

enum class ArithOp { add, sub, mul };

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op);
mpq_class poly_eval(const Poly& p, const mpq_class& v);

/// Parses "p", "-p" or "p/q" into a canonical rational.
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

}  // namespace tenv
