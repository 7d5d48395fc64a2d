#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supercong {

/// Exact rational number in lowest terms with positive denominator.
///
/// Parameters a, x, m, u of the checkers are carried as Rational and only
/// reduced into Z/p^e once a prime context is known.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Parses "num/den" or a bare integer, with optional sign. Throws
    /// Error{ParseError} on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }
    const mpq_class& get() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }

    /// Always "num/den", including "/1" for integers.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }
    friend Rational operator/(const Rational& x, const Rational& y);

    Rational pow(unsigned k) const;

    friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = cmp(x.value_, y.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class value_{0};
};

}  // namespace supercong
