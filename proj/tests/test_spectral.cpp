#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fraclab/spectral.hpp"

using namespace fraclab;

// Reference values computed with 25-digit adaptive quadrature of the folded
// integral (brute-force octave integration agrees to 1e-9).
TEST_CASE("mode integral reference values") {
    CHECK(butzer_mode_integral(0.25, 0.5) == Catch::Approx(9.5077978297810467).epsilon(1e-10));
    CHECK(butzer_mode_integral(0.3, 0.7) == Catch::Approx(7.9816715803388165).epsilon(1e-10));
    CHECK(butzer_mode_integral(0.2, 0.5) == Catch::Approx(10.161238261905423).epsilon(1e-10));
    CHECK(butzer_mode_integral(0.5, 0.9) == Catch::Approx(6.4056746741234381).epsilon(1e-10));
    CHECK(butzer_mode_integral(0.595, 0.6) == Catch::Approx(202.500465620137).epsilon(1e-9));
    CHECK(butzer_mode_integral(0.001, 0.6) == Catch::Approx(1382.5349558956505).epsilon(1e-10));
    CHECK(butzer_mode_integral(3.5, 4.0) == Catch::Approx(3.01193962344164).epsilon(1e-9));
}

TEST_CASE("t = 1 closed form: J(1/2, 1) = 2 pi") {
    CHECK(butzer_mode_integral(0.5, 1.0) == Catch::Approx(2.0 * M_PI).epsilon(1e-9));
}

TEST_CASE("limit behavior at the endpoints") {
    // (t-s) J(s,t) -> 1 as s -> t
    for (double t : {0.6, 1.0}) {
        const double d = 1e-5;
        CHECK((t - (t - d)) * butzer_mode_integral(t - d, t) == Catch::Approx(1.0).epsilon(1e-3));
    }
    // s J(s,t) -> central binomial mean as s -> 0
    for (double t : {0.6, 1.0}) {
        const double s = 1e-6;
        CHECK(s * butzer_mode_integral(s, t) == Catch::Approx(central_binomial(t)).epsilon(1e-3));
    }
}

TEST_CASE("spectral seminorm scaling in the mode index") {
    // ||cos(nu x)||-seminorm^2 = 2 pi (1/2) nu^{2s} J(s,t)
    const double s = 0.3, t = 0.8;
    const double j = butzer_mode_integral(s, t);
    for (int nu : {1, 2, 5}) {
        const TrigPoly f = TrigPoly::from_cosines({{nu, 1.0}});
        const double want = std::sqrt(M_PI * std::pow(static_cast<double>(nu), 2.0 * s) * j);
        CHECK(butzer_seminorm_spectral_p2(f, s, t) == Catch::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("hs norm and l2 norm") {
    const TrigPoly f = TrigPoly::from_cosines({{2, 1.0}});
    CHECK(hs_norm_p2(f, 1.0) == Catch::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-13));
    const TrigPoly g = TrigPoly::from_cosines({{0, 1.0}, {1, 2.0}});
    CHECK(l2_norm_exact(g) == Catch::Approx(std::sqrt(2.0 * M_PI * (1.0 + 2.0))).epsilon(1e-13));
    CHECK(hs_norm_p2(g, 0.5) == Catch::Approx(std::sqrt(2.0 * M_PI * 2.0)).epsilon(1e-13));
}
