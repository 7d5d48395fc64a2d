#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace supercong {

/// Dense univariate polynomial over Q. Coefficient i multiplies var^i;
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);
    static RatPoly constant(const mpq_class& c);
    /// c0 + c1*var.
    static RatPoly linear(const mpq_class& c0, const mpq_class& c1);

    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    mpq_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

    mpq_class evaluate(const mpq_class& at) const;

    RatPoly& operator+=(const RatPoly& other);
    RatPoly& operator-=(const RatPoly& other);
    RatPoly& operator*=(const mpq_class& scalar);

    friend RatPoly operator+(RatPoly x, const RatPoly& y) { return x += y; }
    friend RatPoly operator-(RatPoly x, const RatPoly& y) { return x -= y; }
    friend RatPoly operator*(const RatPoly& x, const RatPoly& y);
    friend RatPoly operator*(RatPoly x, const mpq_class& s) { return x *= s; }
    friend bool operator==(const RatPoly& x, const RatPoly& y) { return x.coeffs_ == y.coeffs_; }

    std::string to_string(const std::string& var = "a") const;
    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

private:
    void trim();

    std::vector<mpq_class> coeffs_;
};

}  // namespace supercong
