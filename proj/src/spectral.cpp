#include "spectragraft/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spectragraft {

namespace {

// y = Q x
void mat_vec(const QMatrix& q, const std::vector<double>& x, std::vector<double>& y) {
    const int n = q.n;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        const std::int64_t* row = q.q.data() + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j)
            s += static_cast<double>(row[j]) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
}

double norm2(const std::vector<double>& x) {
    return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

} // namespace

SpectralResult spectral_radius(const QMatrix& q, double tol) {
    if (tol <= 0.0)
        throw error(errc::invalid_argument, "tolerance must be > 0");
    const int n = q.n;
    SpectralResult res;
    if (n == 1) {
        res.perron = {1.0};
        return res;
    }

    std::vector<double> x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<size_t>(n));
    for (long iter = 1; iter <= kIterationCap; ++iter) {
        mat_vec(q, x, y);
        double rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0); // Rayleigh, ||x|| = 1
        double resid = 0.0;
        for (int i = 0; i < n; ++i)
            resid = std::max(resid, std::abs(y[static_cast<size_t>(i)] - rho * x[static_cast<size_t>(i)]));
        if (rho > 0.0 && resid <= tol * rho) {
            res.rho = rho;
            res.perron = x;
            res.residual = resid;
            res.iterations = iter;
            res.method = SpectralMethod::power;
            return res;
        }
        double ny = norm2(y);
        if (ny == 0.0)
            throw error(errc::internal, "power iteration hit the zero vector");
        for (int i = 0; i < n; ++i)
            x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / ny;
    }

    // Cap hit: take the dominant eigenpair from the rotation oracle.
    EigenSystem es = jacobi_eigensystem(q);
    const size_t top = es.values.size() - 1;
    res.rho = es.values[top];
    res.perron.assign(es.vectors.begin() + static_cast<long>(top * static_cast<size_t>(n)),
                      es.vectors.begin() + static_cast<long>((top + 1) * static_cast<size_t>(n)));
    int imax = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(res.perron[static_cast<size_t>(i)]) > std::abs(res.perron[static_cast<size_t>(imax)]))
            imax = i;
    if (res.perron[static_cast<size_t>(imax)] < 0.0)
        for (double& c : res.perron)
            c = -c;
    for (double c : res.perron)
        if (!(c > 0.0))
            throw error(errc::internal, "oracle Perron vector is not strictly positive");
    std::vector<double> qx(static_cast<size_t>(n));
    mat_vec(q, res.perron, qx);
    res.residual = 0.0;
    for (int i = 0; i < n; ++i)
        res.residual = std::max(res.residual,
                                std::abs(qx[static_cast<size_t>(i)] - res.rho * res.perron[static_cast<size_t>(i)]));
    res.iterations = kIterationCap;
    res.method = SpectralMethod::oracle;
    return res;
}

SpectralResult spectral_radius(const Graph& g, double tol) {
    return spectral_radius(q_matrix(g), tol);
}

EigenSystem jacobi_eigensystem(const QMatrix& q) {
    const int n = q.n;
    std::vector<double> a(q.q.begin(), q.q.end());
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i) * n + i] = 1.0;

    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    double fro = 0.0;
    for (double e : a)
        fro += e * e;
    fro = std::sqrt(fro);
    const double threshold = 1e-12 * std::max(1.0, fro);

    const int max_sweeps = 64;
    int sweep = 0;
    for (; sweep < max_sweeps && off_norm() > threshold; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                double apr = at(p, r);
                if (std::abs(apr) <= 1e-300)
                    continue;
                double theta = (at(r, r) - at(p, p)) / (2.0 * apr);
                double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akr = at(k, r);
                    at(k, p) = c * akp - s * akr;
                    at(k, r) = s * akp + c * akr;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), ark = at(r, k);
                    at(p, k) = c * apk - s * ark;
                    at(r, k) = s * apk + c * ark;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[static_cast<size_t>(k) * n + p];
                    double vkr = v[static_cast<size_t>(k) * n + r];
                    v[static_cast<size_t>(k) * n + p] = c * vkp - s * vkr;
                    v[static_cast<size_t>(k) * n + r] = s * vkp + c * vkr;
                }
            }
        }
    }
    double achieved = off_norm();
    if (achieved > threshold)
        throw error(errc::no_convergence, "jacobi sweeps stalled at off-diagonal norm " + std::to_string(achieved));

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return at(i, i) < at(j, j); });

    EigenSystem es;
    es.values.resize(static_cast<size_t>(n));
    es.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        int col = order[static_cast<size_t>(k)];
        es.values[static_cast<size_t>(k)] = at(col, col);
        for (int i = 0; i < n; ++i)
            es.vectors[static_cast<size_t>(k) * n + i] = v[static_cast<size_t>(i) * n + col];
    }
    return es;
}

std::vector<double> full_spectrum_oracle(const QMatrix& q) {
    return jacobi_eigensystem(q).values;
}

double quadratic_form(const Graph& g, std::span<const double> x) {
    if (static_cast<int>(x.size()) != g.order())
        throw error(errc::invalid_argument, "vector length " + std::to_string(x.size()) +
                                                " does not match order " + std::to_string(g.order()));
    const DistanceMatrix dm = all_pairs_distances(g);
    double s = 0.0;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            double t = x[static_cast<size_t>(u)] + x[static_cast<size_t>(v)];
            s += static_cast<double>(dm(u, v)) * t * t;
        }
    }
    return s;
}

double eigen_equation_residual(const Graph& g, double rho, std::span<const double> x) {
    if (static_cast<int>(x.size()) != g.order())
        throw error(errc::invalid_argument, "vector length " + std::to_string(x.size()) +
                                                " does not match order " + std::to_string(g.order()));
    double xmax = 0.0;
    for (double c : x)
        xmax = std::max(xmax, std::abs(c));
    if (xmax == 0.0)
        throw error(errc::invalid_argument, "eigen-equation residual needs a nonzero vector");
    const DistanceMatrix dm = all_pairs_distances(g);
    double worst = 0.0;
    for (int v = 0; v < g.order(); ++v) {
        double s = 0.0;
        for (int u = 0; u < g.order(); ++u)
            s += static_cast<double>(dm(u, v)) * (x[static_cast<size_t>(u)] + x[static_cast<size_t>(v)]);
        worst = std::max(worst, std::abs(s - rho * x[static_cast<size_t>(v)]));
    }
    return worst / xmax;
}

} // namespace spectragraft
