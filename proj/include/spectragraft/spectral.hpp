#ifndef SPECTRAGRAFT_SPECTRAL_HPP
#define SPECTRAGRAFT_SPECTRAL_HPP

#include <span>
#include <vector>

#include "spectragraft/graph.hpp"

namespace spectragraft {

/// Relative eigen-residual tolerance used when none is given.
inline constexpr double kDefaultTol = 1e-12;
/// Power-iteration cap before falling back to the dense oracle.
inline constexpr long kIterationCap = 1'000'000;
/// Two spectral radii closer than kTieTolerance * max(rho) are a numeric tie.
inline constexpr double kTieTolerance = 1e-9;

enum class SpectralMethod { power, oracle };

/// Largest eigenvalue of Q_D with its positive unit Perron vector.
/// residual is the max-norm of Q*x - rho*x for the returned pair.
struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;
    double residual = 0.0;
    long iterations = 0;
    SpectralMethod method = SpectralMethod::power;
};

/// Power iteration from the all-ones vector on the exact integer Q; converged
/// once the eigen-residual max-norm drops below tol*rho. Falls back to the
/// rotation oracle if the iteration cap is hit. n == 1 yields rho = 0, x = (1).
SpectralResult spectral_radius(const QMatrix& q, double tol = kDefaultTol);
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol);

/// All eigenvalues, ascending, via cyclic Jacobi rotations. Independent of the
/// power-iteration path. Throws error(no_convergence) with the achieved
/// off-diagonal norm if the rotation sweeps stall.
std::vector<double> full_spectrum_oracle(const QMatrix& q);

/// Jacobi eigensystem: values ascending, vectors[k*n..k*n+n) the unit
/// eigenvector for values[k].
struct EigenSystem {
    std::vector<double> values;
    std::vector<double> vectors; // row-major, row k = eigenvector k
};
EigenSystem jacobi_eigensystem(const QMatrix& q);

/// Sum over unordered pairs of d(u,v) * (x(u)+x(v))^2; equals x^T Q x.
double quadratic_form(const Graph& g, std::span<const double> x);

/// max_v |sum_u d(u,v)(x(u)+x(v)) - rho*x(v)| / ||x||_inf; zero exactly on eigenpairs.
double eigen_equation_residual(const Graph& g, double rho, std::span<const double> x);

} // namespace spectragraft

#endif
