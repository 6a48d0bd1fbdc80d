#include "doctest.h"

#include <cmath>

#include "csk/freeconv.hpp"

TEST_CASE("affine pushforward of a semicircle") {
    const csk::RealMeasure sc = csk::build_measure(csk::Semicircle{});
    // (x + 1)/2: semicircle(0, 1) -> semicircle(1/2, 1/4).
    const csk::RealMeasure moved = csk::affine_apply(sc, {-1.0, 2.0});
    CHECK(moved.inf_support() == doctest::Approx(-0.5));
    CHECK(moved.sup_support() == doctest::Approx(1.5));
    CHECK(moved.mean() == doctest::Approx(0.5).epsilon(1e-9));
    const csk::RealMeasure target = csk::build_measure(csk::Semicircle{0.5, 0.25});
    for (double x : {-0.3, 0.2, 0.5, 1.1}) {
        CHECK(moved.density_part()->density(x) ==
              doctest::Approx(target.density_part()->density(x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(csk::affine_apply(sc, {0.0, -1.0}), csk::InvalidMap);
    CHECK_THROWS_AS(csk::affine_apply(sc, {0.0, 0.0}), csk::InvalidMap);
}

TEST_CASE("orientation-reversing maps carry a reflection flag") {
    const csk::RealMeasure sc = csk::build_measure(csk::Semicircle{1.0, 1.0});
    const csk::OrientedMeasure om = csk::affine_apply_oriented(sc, {0.0, -1.0});
    CHECK(om.reflected);
    // The stored measure is the reflection of the intended image; reflecting
    // twice is the identity.
    CHECK(om.measure.mean() == doctest::Approx(1.0).epsilon(1e-9));
    const csk::OrientedMeasure back = csk::reflect(csk::reflect(om));
    CHECK(back.reflected == om.reflected);
    CHECK_THROWS_AS(csk::affine_apply_oriented(sc, {0.0, 0.0}),
                    csk::InvalidMap);
}

TEST_CASE("dilation scales atoms and support") {
    const csk::RealMeasure tk = csk::build_measure(csk::FreeTakacs{0.5});
    const csk::RealMeasure d2 = csk::dilate(tk, 2.0);
    REQUIRE(d2.atoms().size() == 1);
    CHECK(d2.atoms()[0].location == doctest::Approx(-2.0));
    CHECK(d2.atoms()[0].weight == doctest::Approx(0.5));
    CHECK(d2.density_part()->support_upper ==
          doctest::Approx(2.0 * tk.density_part()->support_upper));
    CHECK(d2.total_mass() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("pseudo-variance scaling identity") {
    const csk::PseudoVariance cub{csk::CubicPV{1.0, 2.0, 0.5}};
    const csk::PseudoVariance quad{csk::QuadraticPV{1.0, -0.5, 0.25, 0.3}};
    for (double alpha : {0.5, 2.0, 3.5}) {
        const csk::PseudoVariance sc_cub = csk::scale_pv(cub, alpha);
        const csk::PseudoVariance sc_quad = csk::scale_pv(quad, alpha);
        for (double m : {-2.0, -0.7, 0.9, 1.8}) {
            CHECK(sc_cub(m) ==
                  doctest::Approx(csk::conv_power_pv(cub, alpha, m))
                      .epsilon(1e-13));
            if (m != alpha * 0.3)
                CHECK(sc_quad(m) ==
                      doctest::Approx(csk::conv_power_pv(quad, alpha, m))
                          .epsilon(1e-13));
        }
        CHECK(sc_cub.cubic() != nullptr);
        CHECK(sc_quad.quadratic() != nullptr);
    }
}

TEST_CASE("convolution powers of the semicircle stay semicircular") {
    const csk::RealMeasure pow2 =
        csk::conv_power_measure(csk::Semicircle{0.0, 1.0}, 2.0);
    const csk::RealMeasure target = csk::build_measure(csk::Semicircle{0.0, 2.0});
    CHECK(pow2.sup_support() == doctest::Approx(2.0 * std::sqrt(2.0)));
    for (double x : {-2.0, -0.5, 1.0, 2.5}) {
        CHECK(pow2.density_part()->density(x) ==
              doctest::Approx(target.density_part()->density(x))
                  .epsilon(1e-10));
    }
}

TEST_CASE("exponent validity rules") {
    CHECK_THROWS_AS(csk::conv_power_measure(csk::Semicircle{}, 0.0),
                    csk::AlphaOutOfRange);
    CHECK_THROWS_AS(csk::conv_power_measure(csk::Semicircle{}, -2.0),
                    csk::AlphaOutOfRange);
    // The quadratic class is not free infinitely divisible.
    CHECK_THROWS_AS(
        csk::conv_power_measure(csk::QuadraticFreeMeixner{1.0, 0.0, -1.0}, 0.5),
        csk::AlphaOutOfRange);
    // Cubic-class and semicircle laws admit all positive exponents.
    CHECK_NOTHROW(csk::conv_power_measure(csk::FreeHalfStable{1.0}, 0.25));
    CHECK_NOTHROW(csk::conv_power_measure(csk::Semicircle{}, 0.5));

    const csk::CSKFamily fam{csk::build_measure(csk::Semicircle{})};
    CHECK_THROWS_AS(csk::conv_power_r(fam, 0.5, 0.25), csk::AlphaOutOfRange);
    CHECK(csk::conv_power_r(fam, 2.0, 0.25) ==
          doctest::Approx(0.5).epsilon(1e-8));
    CHECK(csk::conv_power_r(csk::LawSpec{csk::Semicircle{}}, 3.0, 0.25) ==
          doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("convolution power R-transform scales linearly") {
    const csk::LawSpec base = csk::Cubic{1.0, 0.0, 0.0};
    const csk::RealMeasure powered = csk::conv_power_measure(base, 4.0);
    // G(B) of the powered law is 1/16, so test inside (0, 1/16).
    const csk::TransformEvaluator ev{powered};
    for (double w : {0.005, 0.02, 0.05}) {
        const double expected = 4.0 * csk::closed_r(base, w);
        CHECK(ev.r_transform(w) == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("reproductive property across law classes") {
    for (const auto& [spec, lambda] :
         std::vector<std::pair<csk::LawSpec, double>>{
             {csk::Semicircle{0.0, 1.0}, 2.0},
             {csk::Semicircle{0.0, 1.0}, 3.0},
             {csk::Cubic{1.0, 0.0, 0.0}, 4.0},
             {csk::FreeRessel{}, 2.0}}) {
        const csk::ReproductiveReport rep = csk::reproductive_check(spec, lambda);
        CAPTURE(csk::law_name(spec));
        CHECK(rep.max_rel_dev < 1e-6);
        CHECK(rep.rows.size() >= 6);
    }
}
