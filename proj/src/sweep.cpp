#include "supercong/sweep.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "supercong/errors.hpp"

namespace supercong {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(ErrorKind::ParseError, "bad prime range '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

PrimeRange parse_prime_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto p = parse_u64(text, text);
        return {p, p};
    }
    PrimeRange r{parse_u64(text.substr(0, dots), text), parse_u64(text.substr(dots + 2), text)};
    if (r.lo > r.hi) throw Error(ErrorKind::ParseError, "empty prime range '" + std::string(text) + "'");
    return r;
}

std::vector<std::uint64_t> odd_primes_in(PrimeRange range) {
    std::vector<std::uint64_t> out;
    const std::uint64_t lo = std::max<std::uint64_t>(range.lo, 3);
    const std::uint64_t hi = range.hi;
    if (lo > hi) return out;

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
    while (root * root > hi) --root;
    while ((root + 1) * (root + 1) <= hi) ++root;

    std::vector<bool> small_composite(root + 1, false);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (small_composite[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small_composite[j] = true;
    }

    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<bool> composite;
    for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
        composite.assign(seg_hi - seg_lo + 1, false);
        for (std::uint64_t q : base) {
            std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
            for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = true;
        }
        for (std::uint64_t n = seg_lo; n <= seg_hi; ++n) {
            if (n % 2 == 1 && !composite[n - seg_lo]) out.push_back(n);
        }
        if (seg_hi == hi) break;
    }
    return out;
}

}  // namespace supercong
