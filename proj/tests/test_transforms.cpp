#include "doctest.h"

#include <cmath>

#include "csk/laws.hpp"
#include "csk/transforms.hpp"

namespace {

csk::TransformEvaluator make_ev(const csk::LawSpec& spec) {
    return csk::TransformEvaluator(csk::build_measure(spec));
}

constexpr double kPi = 3.141592653589793;

}  // namespace

TEST_CASE("semicircle transforms against frozen values") {
    const csk::TransformEvaluator ev = make_ev(csk::Semicircle{});
    CHECK(ev.g_limit_at_b() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ev.cauchy_g(4.0) ==
          doctest::Approx(0.2679491924311227).epsilon(1e-10));
    CHECK(ev.inverse_k(0.5) == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(ev.r_transform(0.5) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK_THROWS_AS(ev.cauchy_g(1.0), csk::DomainError);
    CHECK_THROWS_AS(ev.inverse_k(2.0), csk::DomainError);
    CHECK_THROWS_AS(ev.inverse_k(-0.5), csk::DomainError);
}

TEST_CASE("inverse semicircle transforms") {
    const csk::TransformEvaluator ev = make_ev(csk::FreeHalfStable{1.0});
    // Support is (-inf, -1/4]; B = 0 and G(0) = 1.
    CHECK(ev.g_limit_at_b() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(ev.cauchy_g(2.0) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(ev.inverse_k(0.25) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(ev.r_transform(0.25) == doctest::Approx(-2.0).epsilon(1e-8));
}

TEST_CASE("G(B) is infinite for the free Abel law") {
    const csk::TransformEvaluator ev = make_ev(csk::FreeAbel{});
    CHECK(std::isinf(ev.g_limit_at_b()));
    CHECK(ev.g_limit_at_b() > 0.0);
    // The R-transform domain is all of (0, inf).
    CHECK(std::isfinite(ev.r_transform(3.0)));
}

TEST_CASE("lower support limit for compact measures") {
    const csk::TransformEvaluator ev = make_ev(csk::Semicircle{});
    // A = min(0, -2) = -2 and G(-2) = -1.
    CHECK(ev.g_limit_at_a() == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("complex Cauchy transform matches the closed form") {
    const csk::LawSpec spec = csk::FreeStrictArcsine{};
    const csk::TransformEvaluator ev = make_ev(spec);
    for (const std::complex<double> z :
         {std::complex<double>{0.2, 0.7}, std::complex<double>{-1.3, 0.05},
          std::complex<double>{2.0, 1.0}}) {
        const std::complex<double> quad = ev.cauchy_g(z);
        const std::complex<double> closed = csk::closed_g(spec, z);
        CHECK(std::abs(quad - closed) <= 1e-8 * (1.0 + std::abs(closed)));
        CHECK(quad.imag() < 0.0);  // upper half-plane maps below the axis
    }
}

TEST_CASE("stieltjes inversion recovers the semicircle density") {
    auto g = [](std::complex<double> z) {
        return csk::closed_g(csk::Semicircle{}, z);
    };
    const std::vector<double> grid = {-1.0, 0.0, 0.5, 1.0};
    const auto pts = csk::stieltjes_invert(g, grid);
    auto density = [](double x) { return std::sqrt(4.0 - x * x) / (2.0 * kPi); };
    for (const csk::InversionPoint& p : pts) {
        CHECK(p.stable);
        CHECK(p.density == doctest::Approx(density(p.x)).epsilon(1e-5));
    }
}

TEST_CASE("stieltjes inversion flags atoms; strict mode throws") {
    const csk::LawSpec tk = csk::FreeTakacs{0.5};
    auto g = [tk](std::complex<double> z) { return csk::closed_g(tk, z); };
    const auto pts = csk::stieltjes_invert(g, {-1.0});
    CHECK_FALSE(pts.front().stable);
    CHECK_THROWS_AS(
        csk::stieltjes_invert(g, {-1.0}, csk::default_eps_schedule(), true),
        csk::ExtrapolationUnstable);

    CHECK(csk::atom_scan(g, -1.0) == doctest::Approx(0.5).epsilon(2e-3));
    // A continuous-spectrum point carries no atom.
    CHECK(std::abs(csk::atom_scan(g, -3.0)) < 1e-3);
}

TEST_CASE("eps schedule override is validated and applied") {
    CHECK_THROWS_AS(csk::set_default_eps_schedule({1e-3, 1e-2}),
                    csk::InvalidSpec);
    CHECK_THROWS_AS(csk::set_default_eps_schedule({-1.0}), csk::InvalidSpec);
    const std::vector<double> sched = {1e-2, 5e-3, 2.5e-3, 1.25e-3,
                                       6.25e-4, 3.125e-4};
    csk::set_default_eps_schedule(sched);
    CHECK(csk::default_eps_schedule() == sched);
    csk::set_default_eps_schedule({});  // restore
    CHECK(csk::default_eps_schedule().size() > 6);
}
