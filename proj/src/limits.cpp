#include "mengoli/limits.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "mengoli/error.hpp"
#include "mengoli/multifactor.hpp"

namespace mengoli {

ZetaKind zeta_kind_from_s(int s) {
    if (s == 2) return ZetaKind::Zeta2;
    if (s == 4) return ZetaKind::Zeta4;
    throw InvalidInput("zeta: only s = 2 and s = 4 are in scope");
}

std::string_view zeta_target_name(ZetaKind kind) { return kind == ZetaKind::Zeta2 ? "pi^2/6" : "pi^4/90"; }

EvalResult zeta2_term(std::int64_t w, unsigned precision_bits) {
    if (w < 2) throw InvalidInput("zeta2 term requires w >= 2");
    require_precision(precision_bits);
    const unsigned wp = precision_bits + 16 + 2 * static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(w)));

    const Bounded half_pi_cot = pi_bounded(wp) * cot_pi(1, w, wp) * Rational(BigInt(1), BigInt(2));
    const Bounded bracket = Bounded::from_rational(Rational(BigInt(w), BigInt(2)), wp) - half_pi_cot;
    const Bounded value = bracket * Rational(w);

    EvalResult r;
    r.method = Method::ClosedForm;
    r.value = value.value.rounded_to(precision_bits);
    r.error_bound = value.error + unit_roundoff(precision_bits) * std::fabs(r.value.to_long_double());
    return r;
}

EvalResult zeta4_term(std::int64_t w, unsigned precision_bits) { return zeta4_closed_form(w, precision_bits); }

EvalResult zeta_term(ZetaKind kind, std::int64_t w, unsigned precision_bits) {
    return kind == ZetaKind::Zeta2 ? zeta2_term(w, precision_bits) : zeta4_term(w, precision_bits);
}

LimitEstimate richardson(std::span<const std::pair<std::int64_t, Real>> terms, int order) {
    if (order < 1) throw InvalidInput("richardson order must be at least 1");
    if (terms.size() < static_cast<std::size_t>(order) + 1) {
        throw InvalidInput("richardson needs at least order + 1 terms");
    }
    unsigned prec = kMinPrecisionBits;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].first <= 0) throw InvalidInput("richardson grid must be positive");
        if (i > 0 && terms[i].first <= terms[i - 1].first) {
            throw InvalidInput("richardson grid must be strictly increasing");
        }
        prec = std::max(prec, terms[i].second.precision_bits());
    }

    const std::size_t n = terms.size();
    // Neville-style table over h = 1/w^2; column j has eliminated j powers.
    std::vector<Real> column;
    column.reserve(n);
    for (const auto& t : terms) column.push_back(t.second.rounded_to(prec));
    for (int j = 1; j <= order; ++j) {
        std::vector<Real> next;
        next.reserve(column.size() - 1);
        for (std::size_t i = 1; i < column.size(); ++i) {
            // rows of `column` are offset by j-1; the current row index is i + j - 1
            const std::int64_t hi = terms[i + static_cast<std::size_t>(j) - 1].first;
            const std::int64_t lo = terms[i - 1].first;
            const Real ratio = Real::from_rational(Rational(BigInt(hi) * hi, BigInt(lo) * lo), prec);
            next.push_back(column[i] + (column[i] - column[i - 1]) / (ratio - Real::from_int(1, prec)));
        }
        column = std::move(next);
    }

    LimitEstimate est;
    est.raw_terms.assign(terms.begin(), terms.end());
    est.extrapolated = column.back();
    est.order_estimate = std::numeric_limits<double>::quiet_NaN();
    if (n >= 3) {
        const Real d1 = terms[n - 2].second - terms[n - 3].second;
        const Real d2 = terms[n - 1].second - terms[n - 2].second;
        const Real scale = abs(terms[n - 1].second);
        const Real floor_ = scale * Real::from_long_double(4 * unit_roundoff(prec), prec);
        if (abs(d1) <= floor_ || abs(d2) <= floor_) {
            est.saturated = true;
            est.order_estimate = 0.0;
        } else {
            const double step = std::log(static_cast<double>(terms[n - 1].first) / static_cast<double>(terms[n - 2].first));
            est.order_estimate = log(abs(d1) / abs(d2)).to_double() / step;
        }
    }
    return est;
}

std::vector<double> empirical_orders(std::span<const std::pair<std::int64_t, Real>> terms, const Real& target) {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        const Real e0 = abs(terms[i].second - target);
        const Real e1 = abs(terms[i + 1].second - target);
        if (e0.is_zero() || e1.is_zero()) throw InvalidInput("empirical order undefined at zero error");
        const double step = std::log2(static_cast<double>(terms[i + 1].first) / static_cast<double>(terms[i].first));
        out.push_back((log2(e0) - log2(e1)).to_double() / step);
    }
    return out;
}

namespace {

// Monomials coefficient * pi^p * w^q, keyed by (p, q).
using Laurent = std::map<std::pair<int, int>, Rational>;

// Coefficients of x^(2k-1) in the Laurent series of cot x, k = 0..5.
const std::vector<Rational>& cot_coefficients() {
    static const std::vector<Rational> c = {
        Rational(1),
        Rational(BigInt(-1), BigInt(3)),
        Rational(BigInt(-1), BigInt(45)),
        Rational(BigInt(-2), BigInt(945)),
        Rational(BigInt(-1), BigInt(4725)),
        Rational(BigInt(-2), BigInt(93555)),
    };
    return c;
}

Rational rational_pow(const Rational& base, int e) {
    Rational r(1);
    const Rational b = e < 0 ? Rational(1) / base : base;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}

// scale * pi^pi_shift * w^w_shift * cot(m pi / w), truncated series.
void add_cot(Laurent& out, const Rational& scale, int pi_shift, int w_shift, std::int64_t m) {
    const auto& c = cot_coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const int e = 2 * static_cast<int>(k) - 1;  // (m pi / w)^e
        out[{pi_shift + e, w_shift - e}] += scale * c[k] * rational_pow(Rational(m), e);
    }
}

}  // namespace

SeriesLimit cot_expansion_limit(ZetaKind kind, unsigned precision_bits) {
    require_precision(precision_bits);
    Laurent expr;
    if (kind == ZetaKind::Zeta2) {
        // w^2/2 - (pi/2) w cot(pi/w)
        expr[{0, 2}] += Rational(BigInt(1), BigInt(2));
        add_cot(expr, Rational(BigInt(-1), BigInt(2)), 1, 1, 1);
    } else {
        // (w^3/24) [4 pi cot(pi/w) - 2 pi cot(2 pi/w) - 3 w]
        const Rational s(BigInt(1), BigInt(24));
        add_cot(expr, s * Rational(4), 1, 3, 1);
        add_cot(expr, s * Rational(-2), 1, 3, 2);
        expr[{0, 4}] += s * Rational(-3);
    }

    SeriesLimit out;
    bool found = false;
    for (const auto& [powers, coeff] : expr) {
        if (coeff.is_zero()) continue;
        if (powers.second > 0) throw std::logic_error("cot expansion: a growing power of w does not cancel");
        if (powers.second == 0) {
            if (found) throw std::logic_error("cot expansion: constant term mixes powers of pi");
            out.coefficient = coeff;
            out.pi_power = powers.first;
            found = true;
        }
    }
    if (!found) throw std::logic_error("cot expansion: no constant term");

    Real v = Real::from_rational(out.coefficient, precision_bits + 16);
    const Real pi = Real::pi(precision_bits + 16);
    for (int i = 0; i < out.pi_power; ++i) v *= pi;
    out.value = v.rounded_to(precision_bits);
    return out;
}

LimitEstimate estimate_zeta_limit(ZetaKind kind, std::span<const std::int64_t> grid, int order,
                                  unsigned precision_bits) {
    std::vector<std::pair<std::int64_t, Real>> terms;
    terms.reserve(grid.size());
    for (const std::int64_t w : grid) terms.emplace_back(w, zeta_term(kind, w, precision_bits).value);
    LimitEstimate est = richardson(terms, order);
    est.target_hint = cot_expansion_limit(kind, precision_bits).value;
    return est;
}

}  // namespace mengoli
