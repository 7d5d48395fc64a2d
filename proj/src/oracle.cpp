#include "supercong/oracle.hpp"

#include <string>
#include <vector>

#include "supercong/legendre.hpp"

namespace supercong::oracle {

namespace {

void require_bound(unsigned long value, unsigned long bound, const char* what) {
    if (value > bound) {
        throw Error(ErrorKind::BoundExceeded,
                    std::string(what) + " = " + std::to_string(value) + " above bound " + std::to_string(bound));
    }
}

mpz_class binom_z(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// C(r, k) for rational r.
mpq_class binom_q(const mpq_class& r, unsigned k) {
    mpq_class out = 1;
    for (unsigned i = 0; i < k; ++i) out *= (r - i) / mpq_class(i + 1);
    return out;
}

// Q_k(a) = C(a,k) C(-1-a,k) for k = 0..n.
std::vector<RatPoly> pair_polys(unsigned n) {
    std::vector<RatPoly> out;
    out.reserve(n + 1);
    RatPoly upper = RatPoly::constant(1);  // C(a,k)
    RatPoly lower = RatPoly::constant(1);  // C(-1-a,k)
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            upper = upper * RatPoly::linear(-mpq_class(k - 1), 1) * mpq_class(1, k);
            lower = lower * RatPoly::linear(-mpq_class(k), -1) * mpq_class(1, k);
        }
        out.push_back(upper * lower);
    }
    return out;
}

RatPoly side_value(unsigned n, int side, const std::vector<RatPoly>& q) {
    RatPoly s;
    for (unsigned k = 0; k <= n; ++k) {
        if (side == 1) {
            s += q[k] * q[n - k];
        } else if (2 * k >= n) {  // C(k, n-k) = 0 otherwise
            mpq_class c(binom_z(2 * k, k) * binom_z(k, n - k));
            if ((n - k) % 2 == 1) c = -c;
            s += q[k] * c;
        }
    }
    return s;
}

}  // namespace

RatPoly binom_poly(unsigned k) {
    RatPoly out = RatPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) out = out * RatPoly::linear(-mpq_class(i), 1) * mpq_class(1, i + 1);
    return out;
}

std::pair<RatPoly, RatPoly> lemma_2_2_sides(unsigned n, unsigned bound) {
    require_bound(n, bound, "n");
    const auto q = pair_polys(n);
    return {side_value(n, 1, q), side_value(n, 2, q)};
}

bool zeilberger_certificate_check(unsigned n, int side, unsigned bound) {
    require_bound(n, bound, "n");
    if (n < 2) throw Error(ErrorKind::RangeError, "the recurrence starts at n = 2");
    if (side != 1 && side != 2) throw Error(ErrorKind::RangeError, "side must be 1 or 2");
    const auto q = pair_polys(n);
    const RatPoly s0 = side_value(n, side, q);
    const RatPoly s1 = side_value(n - 1, side, q);
    const RatPoly s2 = side_value(n - 2, side, q);

    const mpq_class nn(n);
    // (2n-1)(n^2 - n - 2a^2 - 2a)
    const RatPoly c1({(2 * nn - 1) * (nn * nn - nn), -2 * (2 * nn - 1), -2 * (2 * nn - 1)});
    // (n-1)(2a+n)(2a+2-n) = (n-1)(4a^2 + 4a + n(2-n))
    const RatPoly c2({(nn - 1) * nn * (2 - nn), 4 * (nn - 1), 4 * (nn - 1)});
    const RatPoly lhs = s0 * mpq_class(nn * nn * nn);
    const RatPoly rhs = c1 * s1 + c2 * s2;
    return lhs == rhs;
}

bool lemma_2_1_exact_check(unsigned n, unsigned bound) {
    require_bound(n, bound, "n");
    const RatPoly pn = legendre_exact(n, std::max(bound, 64u));
    const auto& c = pn.coeffs();

    // P_n(y)^2 = sum_m d_m y^(2m); every exponent is even because P_n has
    // parity n. Substitute y^2 = 1 + 4x.
    const RatPoly y_squared = RatPoly::linear(1, 4);
    RatPoly lhs;
    RatPoly power = RatPoly::constant(1);
    for (std::size_t m = 0; m <= n; ++m) {
        mpq_class d = 0;
        for (std::size_t i = 0; i <= 2 * m && i < c.size(); ++i) {
            if (2 * m - i < c.size()) d += c[i] * c[2 * m - i];
        }
        lhs += power * d;
        power = power * y_squared;
    }

    std::vector<mpq_class> rhs(n + 1);
    for (unsigned k = 0; k <= n; ++k) rhs[k] = mpq_class(binom_z(n, k) * binom_z(n + k, k) * binom_z(2 * k, k));
    return lhs == RatPoly(std::move(rhs));
}

bool identity_1_7_check(unsigned k, unsigned bound) {
    require_bound(k, bound, "k");
    auto scale = [k](unsigned long base) {
        mpz_class out;
        mpz_ui_pow_ui(out.get_mpz_t(), base, k);
        return out;
    };
    const mpz_class c2 = binom_z(2 * k, k);
    const mpz_class c3 = binom_z(3 * k, k);
    const mpz_class c4 = binom_z(4 * k, 2 * k);
    const mpz_class c6 = binom_z(6 * k, 3 * k);
    auto ratio = [](const mpz_class& num, const mpz_class& den) {
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    };

    const bool halves = binom_q(mpq_class(-1, 2), k) * binom_q(mpq_class(-1, 2), k) == ratio(c2 * c2, scale(16));
    const bool thirds = binom_q(mpq_class(-1, 3), k) * binom_q(mpq_class(-2, 3), k) == ratio(c2 * c3, scale(27));
    const bool quarters = binom_q(mpq_class(-1, 4), k) * binom_q(mpq_class(-3, 4), k) == ratio(c2 * c4, scale(64));
    const bool sixths = binom_q(mpq_class(-1, 6), k) * binom_q(mpq_class(-5, 6), k) == ratio(c3 * c6, scale(432));
    return halves && thirds && quarters && sixths;
}

mpq_class exact_sum(const Rational& a, const Rational& x, u64 p, SumTarget which, u64 p_bound) {
    require_bound(p, p_bound, "p");
    const mpq_class& xq = x.get();
    const mpq_class& aq = a.get();
    const mpq_class bq = -1 - aq;

    mpq_class sum = 0;
    mpq_class xpow = 1;
    mpq_class upper = 1;  // C(a,k)
    mpq_class lower = 1;  // C(-1-a,k)
    for (unsigned long k = 0; k < p; ++k) {
        if (k > 0) {
            xpow *= xq;
            upper *= (aq - (k - 1)) / mpq_class(k);
            lower *= (bq - (k - 1)) / mpq_class(k);
        }
        switch (which.kind) {
            case SumTarget::Kind::Core: sum += mpq_class(binom_z(2 * k, k)) * upper * lower * xpow; break;
            case SumTarget::Kind::Plain: sum += upper * lower * xpow; break;
            case SumTarget::Kind::Family: {
                const mpz_class c2 = binom_z(2 * k, k);
                mpz_class n;
                switch (which.family) {
                    case Family::Cube: n = c2 * c2 * c2; break;
                    case Family::TwoThree: n = c2 * c2 * binom_z(3 * k, k); break;
                    case Family::TwoFour: n = c2 * c2 * binom_z(4 * k, 2 * k); break;
                    case Family::ThreeSix: n = c2 * binom_z(3 * k, k) * binom_z(6 * k, 3 * k); break;
                }
                sum += mpq_class(n) * xpow;
                break;
            }
        }
    }
    return sum;
}

Residue reduce_exact(const mpq_class& q, const PrimeContext& ctx) {
    const mpz_class modulus(static_cast<unsigned long>(ctx.modulus()));
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw Error(ErrorKind::NotPIntegral, "denominator of " + q.get_str() + " shares a factor with p");
    }
    mpz_class r = q.get_num() * den_inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return ctx.residue(r.get_ui());
}

Residue exact_reduce_sum(const Rational& a, const Rational& x, const PrimeContext& ctx, SumTarget which, u64 p_bound) {
    if (!is_p_integral(x, ctx.p()) || (which.kind != SumTarget::Kind::Family && !is_p_integral(a, ctx.p()))) {
        throw Error(ErrorKind::NotPIntegral, "parameters must be p-integral");
    }
    return reduce_exact(exact_sum(a, x, ctx.p(), which, p_bound), ctx);
}

const std::vector<Rational>& equivalence_grid_a() {
    static const std::vector<Rational> grid{Rational(0),     Rational(1),     Rational(-1),   Rational(1, 2),
                                            Rational(-1, 2), Rational(-1, 3), Rational(2, 3), Rational(-1, 4),
                                            Rational(-1, 6), Rational(7, 5)};
    return grid;
}

const std::vector<Rational>& equivalence_grid_x() {
    static const std::vector<Rational> grid{Rational(0),     Rational(1),    Rational(-1),   Rational(1, 2),
                                            Rational(1, 4),  Rational(-3),   Rational(1, 16), Rational(2, 3),
                                            Rational(5, 7),  Rational(1, 108)};
    return grid;
}

EquivalenceResult reduce_equivalence(u64 p_max) {
    EquivalenceResult result;
    for (u64 p = 3; p <= p_max; p += 2) {
        if (!is_prime_u64(p)) continue;
        ContextPtr ctxs[3] = {make_context(p, 1), make_context(p, 2), make_context(p, 3)};
        auto compare = [&](const mpq_class& exact, const Residue& fast, const std::string& what) {
            const Residue want = reduce_exact(exact, fast.context());
            ++result.cases;
            if (want.value() != fast.value()) {
                result.first_mismatch = what + " at p=" + std::to_string(p) + " e=" +
                                        std::to_string(fast.context().exponent()) + ": exact " +
                                        std::to_string(want.value()) + ", modular " + std::to_string(fast.value());
            }
        };
        for (const Rational& x : equivalence_grid_x()) {
            if (!is_p_integral(x, p)) continue;
            for (Family f : all_families()) {
                const mpq_class exact = exact_sum(Rational(0), x, p, SumTarget::of(f), p_max);
                for (const auto& ctx : ctxs) {
                    compare(exact, family_sum(f, x, *ctx),
                            std::string(family_info(f).name) + " x=" + x.to_string());
                    if (result.first_mismatch) return result;
                }
            }
            for (const Rational& a : equivalence_grid_a()) {
                if (!is_p_integral(a, p)) continue;
                const mpq_class core = exact_sum(a, x, p, SumTarget::core(), p_max);
                const mpq_class plain = exact_sum(a, x, p, SumTarget::plain(), p_max);
                for (const auto& ctx : ctxs) {
                    const std::string where = " a=" + a.to_string() + " x=" + x.to_string();
                    compare(core, core_sum(a, x, *ctx), "core" + where);
                    compare(plain, plain_sum(a, x, *ctx), "plain" + where);
                    if (result.first_mismatch) return result;
                }
            }
        }
    }
    return result;
}

}  // namespace supercong::oracle
