#include "supercong/ratpoly.hpp"

#include <algorithm>

namespace supercong {

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly({c}); }

RatPoly RatPoly::linear(const mpq_class& c0, const mpq_class& c1) { return RatPoly({c0, c1}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RatPoly::evaluate(const mpq_class& at) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& scalar) {
    if (sgn(scalar) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

RatPoly operator*(const RatPoly& x, const RatPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<mpq_class> out(x.coeffs_.size() + y.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (sgn(x.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

std::string RatPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpq_class& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        mpq_class mag = abs(c);
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += (i == 0 || mag != 1 ? "*" : "") + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace supercong
