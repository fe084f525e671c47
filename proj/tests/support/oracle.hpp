#pragma once

// Independent closed-form evaluations used as test oracles. Written against
// the formulas directly, sharing no code with the library.

#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;
inline constexpr double h = 6.62607015e-34;
inline constexpr double hbar = h / (2 * pi);
inline constexpr double c = 299792458.0;
inline constexpr double e = 1.602176634e-19;
inline constexpr double u = 1.66053906660e-27;
inline constexpr double eps0 = 8.8541878128e-12;

inline double poisson_below(double mean, int k)
{
    double sum = 0;
    for (int j = 0; j < k; ++j)
        sum += std::exp(j * std::log(mean) - mean - std::lgamma(j + 1.0));
    return sum;
}

inline double saturation(double gamma, double lambda)
{
    return 4 * pi * pi * gamma * hbar * c / (3 * lambda * lambda * lambda);
}

inline double recoil(double a, double lambda) { return h / (2 * a * u * lambda * lambda); }

inline double split_nu(double a, double mu8, double emax, double rho)
{
    return 840.0 / (2 * pi * std::sqrt(a)) * std::pow(mu8 * emax / (rho * rho * rho), 0.3);
}

inline double radial_nu(double a, double q, double mu4, double erf, double rho)
{
    return std::sqrt(q * e * mu4 * erf / (2 * a * u * rho)) / (2 * pi);
}

inline double heating(double rho, double noise, double nu, double mass)
{
    return e * e * (noise / std::pow(rho, 4)) / (4 * mass * h * nu);
}

// Phonons gained over one split at rho for the Cd+ reference chain.
inline double split_phonons(double rho, double a, double mu8, double emax, double noise)
{
    const double nu = split_nu(a, mu8, emax, rho);
    return 2 / nu * heating(rho, noise, nu, a * u);
}

}  // namespace oracle
