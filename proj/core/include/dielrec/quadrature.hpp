#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <vector>

#include "dielrec/errors.hpp"

namespace dielrec {

/// Controls for the brute-force line integrator. The window is symmetric
/// about the line center and measured in multiples of the half-width; its
/// default of 1e4 widths keeps the truncated Lorentzian mass near 6e-5,
/// which the analytic tail correction then restores.
struct QuadratureSpec {
    double window_half_width = 1e4; ///< window half-span, in line widths
    double rel_tol = 1e-9;          ///< relative tolerance of the adaptive pass
    int max_subdivisions = 60;      ///< bisection depth limit per panel
    bool tail_correction = true;    ///< add the frozen-numerator Lorentzian tails

    void check() const {
        if (!(window_half_width >= 10.0)) {
            throw InvalidParameter("quadrature window_half_width must be >= 10 line widths");
        }
        if (!(rel_tol > 1e-14) || !(rel_tol < 1e-2)) {
            throw InvalidParameter("quadrature rel_tol must lie in (1e-14, 1e-2)");
        }
        if (max_subdivisions < 0) {
            throw InvalidParameter("quadrature max_subdivisions must be non-negative");
        }
    }
};

struct LineIntegral {
    double value = 0.0;
    double error_estimate = 0.0;  ///< accumulated Richardson error bound
    int subdivisions = 0;         ///< adaptive bisections performed
    bool tail_corrected = false;
    bool clamped_at_zero = false; ///< window hit omega = 0; left tail dropped
};

/// Pairing of a pole-approximation closed form with its brute-force check.
struct OracleReport {
    double closed_form = 0.0;
    double quadrature = 0.0;
    double abs_error = 0.0;
    int subdivisions_used = 0;
};

inline OracleReport make_oracle_report(double closed_form, const LineIntegral& q) {
    return {closed_form, q.value, std::abs(closed_form - q.value), q.subdivisions};
}

/// Residue value of the normalized-line moment integral with every slowly
/// varying factor frozen at the center: center^power. Powers 0..3 cover the
/// normalization, the mean frequency, the recoil moment and the decay-rate
/// weighting.
double ww_pole_value(int power, double center, double width);

namespace quad_detail {

inline void warn_clamped_once() {
    static std::atomic<bool> warned{false};
    if (!warned.exchange(true)) {
        std::fputs("warning: integration window clamped at omega = 0; "
                   "left tail correction disabled\n",
                   stderr);
    }
}

inline double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

struct AdaptState {
    int splits = 0;
    double error_acc = 0.0;
    bool exhausted = false;
};

template <typename F>
void require_finite(F& f, double x, double& out) {
    out = f(x);
    if (!std::isfinite(out)) {
        throw QuadratureFailure("integrand is not finite inside the window",
                                std::nan(""), 0);
    }
}

// Classic adaptive Simpson with Richardson extrapolation. Recursion is
// always left half first, so evaluation and accumulation order are fixed.
template <typename F>
double adapt(F& f, double a, double m, double b, double fa, double fm, double fb,
             double whole, double tol, int depth, int max_depth, AdaptState& st) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    double flm, frm;
    require_finite(f, lm, flm);
    require_finite(f, rm, frm);

    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = (left + right) - whole;

    if (std::abs(delta) <= 15.0 * tol || depth >= max_depth) {
        if (std::abs(delta) > 15.0 * tol) st.exhausted = true;
        st.error_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    ++st.splits;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth, st) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth, st);
}

template <typename F>
double panel_integral(F& f, double a, double b, double tol, int max_depth, AdaptState& st) {
    const double m = 0.5 * (a + b);
    double fa, fm, fb;
    require_finite(f, a, fa);
    require_finite(f, m, fm);
    require_finite(f, b, fb);
    const double whole = simpson(fa, fm, fb, b - a);
    ++st.splits;
    return adapt(f, a, m, b, fa, fm, fb, whole, tol, 0, max_depth, st);
}

inline double pairwise_sum(std::vector<double> v) {
    std::size_t count = v.size();
    while (count > 1) {
        std::size_t out = 0;
        for (std::size_t i = 0; i + 1 < count; i += 2) v[out++] = v[i] + v[i + 1];
        if (count % 2 == 1) v[out++] = v[count - 1];
        count = out;
    }
    return count == 1 ? v[0] : 0.0;
}

} // namespace quad_detail

/// Brute-force integral of f over the symmetric window
/// [center - W*width, center + W*width], W = spec.window_half_width.
///
/// Panel edges follow a geometric ladder center +- width*2^j so the peak is
/// resolved before any adaptivity runs; each panel is then refined by
/// adaptive Simpson bisection to its share of the tolerance. Refinement
/// order and summation order are fixed, so the result is bit-reproducible
/// for identical inputs.
///
/// With tail_correction on, the mass outside the window is restored
/// analytically by integrating a pure Lorentzian whose numerator is frozen
/// at the window edge:  f_tail(x) = f(edge) * ((edge-center)^2 + width^2)
///                                    / ((x-center)^2 + width^2).
/// A window that would cross omega = 0 is clamped there and loses its left
/// tail term (flagged on the result).
template <typename F>
LineIntegral integrate_line(F&& f, double center, double width, const QuadratureSpec& spec = {}) {
    spec.check();
    if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(center)) {
        throw InvalidParameter("integrate_line needs a finite center and positive width");
    }

    const double half_span = spec.window_half_width * width;
    double lo = center - half_span;
    const double hi = center + half_span;
    LineIntegral result;
    if (lo < 0.0) {
        lo = 0.0;
        result.clamped_at_zero = true;
        quad_detail::warn_clamped_once();
    }

    // Geometric edge ladder around the peak.
    std::vector<double> edges;
    edges.push_back(lo);
    int top = 0;
    while (width * std::ldexp(1.0, top) < half_span && top < 1024) ++top;
    for (int j = top; j >= 0; --j) {
        const double e = center - width * std::ldexp(1.0, j);
        if (e > lo && e < hi) edges.push_back(e);
    }
    if (center > lo && center < hi) edges.push_back(center);
    for (int j = 0; j <= top; ++j) {
        const double e = center + width * std::ldexp(1.0, j);
        if (e > lo && e < hi) edges.push_back(e);
    }
    edges.push_back(hi);

    quad_detail::AdaptState state;
    const std::size_t panels = edges.size() - 1;

    // First pass: rough per-panel estimates fix the tolerance scale.
    std::vector<double> rough(panels);
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = edges[i];
        const double b = edges[i + 1];
        double fa, fm, fb;
        quad_detail::require_finite(f, a, fa);
        quad_detail::require_finite(f, 0.5 * (a + b), fm);
        quad_detail::require_finite(f, b, fb);
        rough[i] = quad_detail::simpson(fa, fm, fb, b - a);
    }
    const double scale = std::abs(quad_detail::pairwise_sum(rough));
    const double panel_tol = spec.rel_tol * scale / static_cast<double>(panels);

    std::vector<double> values(panels);
    for (std::size_t i = 0; i < panels; ++i) {
        values[i] = quad_detail::panel_integral(f, edges[i], edges[i + 1], panel_tol,
                                                spec.max_subdivisions, state);
    }

    result.value = quad_detail::pairwise_sum(values);
    result.error_estimate = state.error_acc;
    result.subdivisions = state.splits;

    if (spec.tail_correction) {
        // atan(width/d) == pi/2 - atan(d/width) without the cancellation.
        const double d_right = hi - center;
        double f_hi;
        quad_detail::require_finite(f, hi, f_hi);
        double tail = f_hi * (d_right * d_right + width * width) *
                      std::atan(width / d_right) / width;
        if (!result.clamped_at_zero) {
            const double d_left = center - lo;
            double f_lo;
            quad_detail::require_finite(f, lo, f_lo);
            tail += f_lo * (d_left * d_left + width * width) *
                    std::atan(width / d_left) / width;
        }
        result.value += tail;
        result.tail_corrected = true;
    }

    if (state.exhausted) {
        throw QuadratureFailure("adaptive subdivision budget exhausted",
                                result.value, result.subdivisions);
    }
    return result;
}

} // namespace dielrec
