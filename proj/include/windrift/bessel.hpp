#pragma once

// Modified Bessel functions of the second kind (Macdonald functions) K0, K1
// for real positive argument. Power series for z <= 2, Steed's continued
// fraction (Temme's CF2) above.

#include "windrift/core.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace windrift {

template <typename Scalar>
struct BesselValue {
    Scalar value;
    bool underflow;
};

namespace detail {

template <typename Scalar>
inline constexpr Scalar kEulerGamma = Scalar(0.57721566490153286060651209008240243L);

/// Arguments above this return an exact zero with the underflow flag set.
template <typename Scalar>
Scalar bessel_k_underflow_threshold()
{
    // K_n(z) ~ sqrt(pi/2z) e^{-z}; stop once e^{-z} leaves the normal range.
    return -std::log(std::numeric_limits<Scalar>::min()) - Scalar(8);
}

template <typename Scalar>
std::pair<Scalar, Scalar> bessel_k01_series(Scalar z)
{
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar q = z * z / 4;
    const Scalar log_half = std::log(z / 2);

    // k-th terms carry (z^2/4)^k / (k! k!) and (z^2/4)^k / (k! (k+1)!).
    Scalar t0 = 1, t1 = 1;
    Scalar harmonic = 0;  // H_k
    Scalar i0 = 0, i1 = 0, s0 = 0, s1 = 0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            t0 *= q / (Scalar(k) * Scalar(k));
            t1 *= q / (Scalar(k) * Scalar(k + 1));
            harmonic += Scalar(1) / Scalar(k);
        }
        // psi(k+1) = H_k - gamma, psi(k+2) = H_{k+1} - gamma
        const Scalar psi_k1 = harmonic - kEulerGamma<Scalar>;
        const Scalar psi_k2 = psi_k1 + Scalar(1) / Scalar(k + 1);
        i0 += t0;
        i1 += t1;
        s0 += t0 * psi_k1;
        s1 += t1 * (psi_k1 + psi_k2);
        if (t0 < eps * i0 && t1 < eps * i1) break;
    }
    i1 *= z / 2;
    const Scalar k0 = -log_half * i0 + s0;
    const Scalar k1 = Scalar(1) / z + log_half * i1 - z / 4 * s1;
    return {k0, k1};
}

template <typename Scalar>
std::pair<Scalar, Scalar> bessel_k01_continued_fraction(Scalar z)
{
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    Scalar b = 2 * (1 + z);
    Scalar d = 1 / b;
    Scalar h = d, delh = d;
    Scalar q1 = 0, q2 = 1;
    const Scalar a1 = Scalar(0.25);  // 1/4 - nu^2 with nu = 0
    Scalar q = a1, c = a1, a = -a1;
    Scalar s = 1 + q * delh;
    for (int i = 2; i < 10000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const Scalar qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2;
        d = 1 / (b + a * d);
        delh = (b * d - 1) * delh;
        h += delh;
        const Scalar dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    h *= a1;
    const Scalar k0 = std::sqrt(Scalar(kPi) / (2 * z)) * std::exp(-z) / s;
    const Scalar k1 = k0 * (z + Scalar(0.5) - h) / z;
    return {k0, k1};
}

}  // namespace detail

/// Returns (K0(z), K1(z)) for z > 0. Both are zero beyond the underflow threshold.
template <typename Scalar>
std::pair<Scalar, Scalar> bessel_k01(Scalar z)
{
    require(z > 0, "bessel_k: argument must be positive");
    if (z > detail::bessel_k_underflow_threshold<Scalar>()) return {Scalar(0), Scalar(0)};
    if (z <= 2) return detail::bessel_k01_series(z);
    return detail::bessel_k01_continued_fraction(z);
}

/// K_order(z) for order 0 or 1.
template <typename Scalar>
BesselValue<Scalar> bessel_k(int order, Scalar z)
{
    require(order == 0 || order == 1, "bessel_k: order must be 0 or 1");
    require(z > 0, "bessel_k: argument must be positive");
    if (z > detail::bessel_k_underflow_threshold<Scalar>()) return {Scalar(0), true};
    const auto [k0, k1] = bessel_k01(z);
    return {order == 0 ? k0 : k1, false};
}

template <typename Scalar>
Scalar bessel_k0(Scalar z)
{
    return bessel_k01(z).first;
}

template <typename Scalar>
Scalar bessel_k1(Scalar z)
{
    return bessel_k01(z).second;
}

}  // namespace windrift
