#include "doctest.h"

#include "windrift/memory_design.hpp"

#include <cmath>

using namespace windrift;

namespace {

DeviceSpec two_cm()
{
    DeviceSpec d;
    d.r_eff = 0.02;
    d.n1 = 0;
    d.n2 = 1;
    d.l_x = 0.03;
    d.l_y = 0.01;
    d.temperature = 1;
    return d;
}

}  // namespace

TEST_CASE("level splitting of a 2 cm device")
{
    const auto s = level_splitting(two_cm());
    CHECK(s.delta_n2 == 1);
    CHECK(s.wavelength_m * 1e3 == doctest::Approx(0.917).epsilon(0.005));
    CHECK(s.wavelength_m == doctest::Approx(2 * kPi * 7.2973525693e-3 * 0.02).epsilon(1e-14));
    // hbar omega = 2 pi hbar c / lambda.
    CHECK(s.energy_j == doctest::Approx(2 * kPi * 1.054571817e-34 * 299792458.0 / s.wavelength_m).epsilon(1e-9));
    CHECK(s.angular_frequency == doctest::Approx(2 * kPi * 299792458.0 / s.wavelength_m).epsilon(1e-12));
}

TEST_CASE("millimetre range for few-centimetre devices")
{
    for (double r : {0.01, 0.02, 0.05}) {
        for (int n2 : {1, 2}) {
            auto d = two_cm();
            d.r_eff = r;
            d.n2 = n2;
            const double mm = level_splitting(d).wavelength_m * 1e3;
            CHECK(mm >= 0.1);
            CHECK(mm <= 10);
        }
    }
}

TEST_CASE("user length unit")
{
    auto d = two_cm();
    d.r_eff = 2;
    d.length_unit_m = 0.01;
    const auto s = level_splitting(d);
    CHECK(s.wavelength_m == doctest::Approx(level_splitting(two_cm()).wavelength_m).epsilon(1e-14));
    CHECK(s.wavelength == doctest::Approx(s.wavelength_m / 0.01));
}

TEST_CASE("degenerate levels are rejected")
{
    auto d = two_cm();
    d.n1 = 1;
    d.n2 = 1;
    CHECK_THROWS_AS(level_splitting(d), PreconditionError);
}

TEST_CASE("solid torus suppression")
{
    auto d = two_cm();
    d.epsilon_line = 100;  // epsilon l_y = 1 = T
    CHECK(solid_torus_suppression(d) == doctest::Approx(std::exp(-1.0)));
    const double once = solid_torus_suppression(d);
    d.l_y *= 2;
    CHECK(solid_torus_suppression(d) == doctest::Approx(once * once));
    d.epsilon_line = 0;
    CHECK(solid_torus_suppression(d) == 1.0);
}

TEST_CASE("anyon prefactor logarithm")
{
    CHECK(anyon_prefactor_log(std::exp(1.0), 1) == doctest::Approx(1));
    CHECK(anyon_prefactor_log(std::exp(2.0) * 3, 3) == doctest::Approx(2));
    CHECK_THROWS_AS(anyon_prefactor_log(1, 2), PreconditionError);
}

TEST_CASE("equivalence classes")
{
    CHECK(equivalence_class(2, 4) == EquivalenceClass::EvenEven);
    CHECK(equivalence_class(3, 2) == EquivalenceClass::OddEven);
    CHECK(equivalence_class(-1, -3) == EquivalenceClass::OddOdd);
    CHECK(equivalence_class(0, -5) == EquivalenceClass::EvenOdd);
    CHECK(to_string(EquivalenceClass::EvenEven) == "even-even");
}

TEST_CASE("loop current scale")
{
    const auto at_e = loop_current_scale(std::exp(1.0) * 2, 2, 1, 1);
    CHECK(at_e.inductance == doctest::Approx(std::exp(1.0) * 2));
    const auto wide = loop_current_scale(100, 1, 2, 3);
    CHECK(wide.inductance == doctest::Approx(100 * std::log(100.0)));
    CHECK(wide.current == doctest::Approx(6 / wide.inductance));
    CHECK_FALSE(wide.clamped);
    CHECK(loop_current_scale(1.5, 1, 1, 1).clamped);
    CHECK_THROWS_AS(loop_current_scale(1, 1, 1, 1), PreconditionError);
}
