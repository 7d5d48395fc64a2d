#include "supercong/rational.hpp"

#include <cctype>

#include "supercong/errors.hpp"

namespace supercong {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::CompositeModulus: return "CompositeModulus";
        case ErrorKind::BadExponent: return "BadExponent";
        case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
        case ErrorKind::NotPIntegral: return "NotPIntegral";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::MixedContext: return "MixedContext";
        case ErrorKind::KTooLarge: return "KTooLarge";
        case ErrorKind::NTooLarge: return "NTooLarge";
        case ErrorKind::RangeError: return "RangeError";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::ZeroM: return "ZeroM";
        case ErrorKind::ExcludedU: return "ExcludedU";
        case ErrorKind::WrongResidueClass: return "WrongResidueClass";
        case ErrorKind::PrimeTooSmall: return "PrimeTooSmall";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num_part = s;
    std::string_view den_part = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num_part), 10);
    mpz_class d(std::string(den_part), 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw Error(ErrorKind::RangeError, "division by zero rational");
    return Rational(mpq_class(x.value_ / y.value_));
}

Rational Rational::pow(unsigned k) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return Rational(mpq_class(n, d));
}

}  // namespace supercong
