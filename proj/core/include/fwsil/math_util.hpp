#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <string_view>

namespace fwsil {

inline constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a <= 0.0) a += 2.0 * kPi;
    return a - kPi;
}

/// Shortest signed difference a - b, wrapped to (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// atan2 with a first-order analytic extension for complex-step
// differentiation. The imaginary part carries d(atan2)/d(y,x) applied to
// the imaginary perturbations.
inline double cs_atan2(double y, double x) { return std::atan2(y, x); }
inline std::complex<double> cs_atan2(const std::complex<double>& y,
                                     const std::complex<double>& x) {
    const double yr = y.real(), xr = x.real();
    const double denom = xr * xr + yr * yr;
    return {std::atan2(yr, xr), (xr * y.imag() - yr * x.imag()) / denom};
}

// max(x, 0) usable with complex-step scalars; the branch is decided on the
// real part so derivative information survives where the function is smooth.
inline double cs_max0(double x) { return x > 0.0 ? x : 0.0; }
inline std::complex<double> cs_max0(const std::complex<double>& x) {
    return x.real() > 0.0 ? x : std::complex<double>(0.0, 0.0);
}

inline double real_part(double x) { return x; }
inline double real_part(const std::complex<double>& x) { return x.real(); }

// FNV-1a, used for config fingerprints and artifact checksums.
inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = kFnvOffset) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
    return fnv1a(s.data(), s.size(), h);
}

}  // namespace fwsil
