#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "dielrec/quadrature.hpp"

using namespace dielrec;
using std::numbers::pi;

namespace {

// Unit-normalized Lorentzian, the analytic base case.
struct Lorentzian {
    double center;
    double width;
    double operator()(double x) const {
        const double d = x - center;
        return (width / pi) / (d * d + width * width);
    }
};

// The vacuum line profile: Lorentzian tilted by (omega/center)^3.
struct TiltedLorentzian {
    double center;
    double width;
    double operator()(double x) const {
        const double d = x - center;
        const double t = x / center;
        return (width / pi) * t * t * t / (d * d + width * width);
    }
};

} // namespace

TEST_CASE("pure Lorentzian integrates to one") {
    // center/width pairs chosen so the default window stays above omega = 0
    const double cases[][2] = {{1.0, 1e-6}, {5.0, 1e-6}, {20.0, 1e-3}};
    for (const auto& c : cases) {
        const double center = c[0];
        const double width = c[1];
        const LineIntegral r = integrate_line(Lorentzian{center, width}, center, width);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(r.tail_corrected);
        CHECK_FALSE(r.clamped_at_zero);
    }
}

TEST_CASE("tilted Lorentzian: the tail correction carries the cubic numerator") {
    const TiltedLorentzian f{1.0, 1e-6};

    QuadratureSpec with_tail;
    const LineIntegral corrected = integrate_line(f, 1.0, 1e-6, with_tail);
    CHECK(std::abs(corrected.value - 1.0) <= 1e-6);

    QuadratureSpec no_tail;
    no_tail.tail_correction = false;
    const LineIntegral truncated = integrate_line(f, 1.0, 1e-6, no_tail);
    CHECK(std::abs(truncated.value - 1.0) <= 1e-3);
    // The gap between the two configurations is the tail mass, about
    // 2/(pi*window) of the line.
    CHECK(corrected.value - truncated.value > 1e-5);
    CHECK(corrected.value - truncated.value < 1e-4);
}

TEST_CASE("doubling the window moves a tail-corrected result within the tail bound") {
    const TiltedLorentzian f{1.0, 1e-6};
    QuadratureSpec narrow;
    narrow.window_half_width = 1e4;
    QuadratureSpec wide;
    wide.window_half_width = 2e4;
    const double a = integrate_line(f, 1.0, 1e-6, narrow).value;
    const double b = integrate_line(f, 1.0, 1e-6, wide).value;
    const double tail_bound = 2.0 / (pi * narrow.window_half_width);
    CHECK(std::abs(b - a) <= 4.0 * tail_bound);
}

TEST_CASE("poisoned integrand raises a quadrature failure") {
    auto poisoned = [](double x) {
        return (x > 0.999 && x < 1.001) ? std::nan("") : 1.0;
    };
    CHECK_THROWS_AS(integrate_line(poisoned, 1.0, 1e-4), QuadratureFailure);
}

TEST_CASE("exhausted subdivision budget reports the partial estimate") {
    QuadratureSpec starved;
    starved.max_subdivisions = 0;
    starved.rel_tol = 1e-9;
    bool thrown = false;
    try {
        integrate_line(Lorentzian{1.0, 1e-6}, 1.0, 1e-6, starved);
    } catch (const QuadratureFailure& e) {
        thrown = true;
        CHECK(std::isfinite(e.partial_value()));
        CHECK(e.partial_value() > 0.1);
        CHECK(e.partial_value() < 10.0);
    }
    CHECK(thrown);
}

TEST_CASE("determinism: identical inputs give bit-identical results") {
    const TiltedLorentzian f{1.0, 1e-6};
    const LineIntegral a = integrate_line(f, 1.0, 1e-6);
    const LineIntegral b = integrate_line(f, 1.0, 1e-6);
    CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
    CHECK(a.subdivisions == b.subdivisions);
    CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("window reaching omega = 0 clamps and drops the left tail") {
    QuadratureSpec spec;
    spec.window_half_width = 1e4;
    // center/width = 100, so the window would extend far below zero.
    const Lorentzian f{1.0, 1e-2};
    const LineIntegral r = integrate_line(f, 1.0, 1e-2, spec);
    CHECK(r.clamped_at_zero);
    // Half of [0, center] left of the peak is still there; only the
    // sub-zero mass (about half the left tail) is gone.
    CHECK(r.value == doctest::Approx(1.0).epsilon(0.01));
    CHECK(r.value < 1.0);
}

TEST_CASE("quadrature controls are range-checked") {
    QuadratureSpec spec;
    spec.window_half_width = 5.0;
    CHECK_THROWS_AS(spec.check(), InvalidParameter);
    spec = {};
    spec.rel_tol = 1e-1;
    CHECK_THROWS_AS(spec.check(), InvalidParameter);
    spec.rel_tol = 1e-15;
    CHECK_THROWS_AS(spec.check(), InvalidParameter);
    spec = {};
    CHECK_NOTHROW(spec.check());
    CHECK_THROWS_AS(integrate_line(Lorentzian{1.0, 1e-6}, 1.0, 0.0), InvalidParameter);
}

TEST_CASE("frozen-numerator pole moments") {
    CHECK(ww_pole_value(0, 1.01, 1e-6) == 1.0);
    CHECK(ww_pole_value(1, 1.01, 1e-6) == 1.01);
    CHECK(ww_pole_value(2, 1.01, 1e-6) == doctest::Approx(1.0201).epsilon(1e-15));
    CHECK(ww_pole_value(3, 2.0, 1e-6) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK_THROWS_AS(ww_pole_value(4, 1.0, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(ww_pole_value(-1, 1.0, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(ww_pole_value(0, 1.0, 0.0), InvalidParameter);
}

TEST_CASE("second pole moment agrees with direct integration") {
    const double center = 1.0;
    const double width = 1e-6;
    auto weighted = [&](double x) {
        const TiltedLorentzian rho{center, width};
        return rho(x) * x * x;
    };
    const LineIntegral q = integrate_line(weighted, center, width);
    CHECK(q.value == doctest::Approx(ww_pole_value(2, center, width)).epsilon(1e-6));
}

TEST_CASE("oracle report wraps the pairing invariant") {
    LineIntegral q;
    q.value = 0.75;
    q.subdivisions = 42;
    const OracleReport r = make_oracle_report(1.0, q);
    CHECK(r.abs_error == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r.subdivisions_used == 42);
}
