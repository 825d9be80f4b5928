#include <doctest.h>

#include <cmath>
#include <random>

#include "spectragraft/families.hpp"
#include "spectragraft/graph.hpp"
#include "spectragraft/spectral.hpp"
#include "spectragraft/tree_enum.hpp"

using namespace spectragraft;
using doctest::Approx;

namespace {

// Closed forms for the fixture graphs, derived from the symmetric eigenvector
// ansatz and pinned before the implementation existed:
//   P3:  lambda^2 - 7 lambda + 8 = 0  -> (7+sqrt(17))/2
//   K13: lambda^2 - 12 lambda + 24 = 0 -> 6+2 sqrt(3)
const double kRhoP3 = (7.0 + std::sqrt(17.0)) / 2.0;   // 5.5615528128088305
const double kRhoK13 = 6.0 + 2.0 * std::sqrt(3.0);     // 9.464101615137754

} // namespace

TEST_CASE("rotation oracle reproduces known spectra") {
    auto eig_k2 = full_spectrum_oracle(q_matrix(make_path(2)));
    CHECK(std::abs(eig_k2[0]) <= 1e-12);
    CHECK(eig_k2[1] == Approx(2.0).epsilon(1e-12));

    Graph tri = parse_edge_list("3 3\n0 1\n1 2\n0 2");
    auto eig_k3 = full_spectrum_oracle(q_matrix(tri));
    CHECK(eig_k3[0] == Approx(1.0).epsilon(1e-12));
    CHECK(eig_k3[1] == Approx(1.0).epsilon(1e-12));
    CHECK(eig_k3[2] == Approx(4.0).epsilon(1e-12));

    auto eig_p3 = full_spectrum_oracle(q_matrix(make_path(3)));
    CHECK(eig_p3.back() == Approx(kRhoP3).epsilon(1e-12));
    for (double e : eig_p3)
        CHECK(e > 0.0);
}

TEST_CASE("spectral_radius closed forms") {
    SpectralResult k2 = spectral_radius(make_path(2));
    CHECK(k2.rho == Approx(2.0).epsilon(1e-14));
    CHECK(k2.perron[0] == Approx(k2.perron[1]).epsilon(1e-12));
    CHECK(k2.method == SpectralMethod::power);

    Graph tri = parse_edge_list("3 3\n0 1\n1 2\n0 2");
    CHECK(spectral_radius(tri).rho == Approx(4.0).epsilon(1e-13));

    CHECK(spectral_radius(make_path(3)).rho == Approx(kRhoP3).epsilon(1e-13));
    CHECK(spectral_radius(make_star(4)).rho == Approx(kRhoK13).epsilon(1e-13));
}

TEST_CASE("order-1 convention") {
    SpectralResult r = spectral_radius(Graph(1));
    CHECK(r.rho == 0.0);
    CHECK(r.perron == std::vector<double>{1.0});
    CHECK(r.iterations == 0);
}

TEST_CASE("tolerance must be positive") {
    CHECK_THROWS_AS(spectral_radius(make_path(3), 0.0), error);
    CHECK_THROWS_AS(spectral_radius(make_path(3), -1e-9), error);
}

TEST_CASE("quadratic_form examples and identity") {
    Graph two = make_path(2);
    CHECK(quadratic_form(two, std::vector<double>{1.0, -1.0}) == Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(quadratic_form(two, std::vector<double>{1.0, 1.0}) == Approx(4.0).epsilon(1e-15));

    Graph p3 = make_path(3);
    CHECK(quadratic_form(p3, std::vector<double>{1.0, 0.0, 0.0}) == Approx(3.0).epsilon(1e-15));

    CHECK_THROWS_AS(quadratic_form(p3, std::vector<double>{1.0, 2.0}), error);

    // x^T Q x computed directly must match the pair-sum form on random vectors.
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int n = 2; n <= 9; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            QMatrix q = q_matrix(t);
            std::vector<double> x(static_cast<size_t>(n));
            for (int rep = 0; rep < 10; ++rep) {
                for (double& c : x)
                    c = dist(rng);
                double direct = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        direct += static_cast<double>(q(a, b)) * x[static_cast<size_t>(a)] *
                                  x[static_cast<size_t>(b)];
                CHECK(quadratic_form(t, x) ==
                      Approx(direct).epsilon(1e-10).scale(std::max(1.0, std::abs(direct))));
            }
        }
    }
}

TEST_CASE("eigen_equation_residual examples") {
    Graph two = make_path(2);
    CHECK(eigen_equation_residual(two, 2.0, std::vector<double>{1.0, 1.0}) == 0.0);

    Graph tri = parse_edge_list("3 3\n0 1\n1 2\n0 2");
    CHECK(eigen_equation_residual(tri, 4.0, std::vector<double>{1.0, 1.0, 1.0}) == 0.0);
    CHECK(eigen_equation_residual(tri, 3.0, std::vector<double>{1.0, 1.0, 1.0}) == Approx(1.0));

    CHECK_THROWS_AS(eigen_equation_residual(two, 1.0, std::vector<double>{0.0, 0.0}), error);
}

TEST_CASE("power iteration agrees with the oracle on every tree up to order 10") {
    for (int n = 2; n <= 10; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            QMatrix q = q_matrix(t);
            SpectralResult sr = spectral_radius(q);
            auto spectrum = full_spectrum_oracle(q);
            CHECK(std::abs(sr.rho - spectrum.back()) <= 1e-9 * sr.rho);
            CHECK(sr.residual <= kDefaultTol * sr.rho);
            for (double c : sr.perron)
                CHECK(c > 0.0);
            double norm = 0.0;
            for (double c : sr.perron)
                norm += c * c;
            CHECK(norm == Approx(1.0).epsilon(1e-10));
            CHECK(eigen_equation_residual(t, sr.rho, sr.perron) <= 1e-8 * sr.rho);
        }
    }
}

TEST_CASE("row-sum sandwich and transmission bounds over trees") {
    // K_2 is transmission-regular, so its lower bounds hold with equality and
    // live in the equality test below; strict bounds start at order 3.
    for (int n = 3; n <= 10; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            TransmissionVector tv = transmissions(all_pairs_distances(t));
            GraphStats st = graph_stats(t);
            double rho = spectral_radius(t).rho;
            CHECK(rho > static_cast<double>(tv.tr_max));
            CHECK(rho >= 2.0 * static_cast<double>(tv.tr_min));
            CHECK(rho <= 2.0 * static_cast<double>(tv.tr_max));
            CHECK(rho >= 4.0 * static_cast<double>(st.wiener) / n);
            if (n >= 3) {
                auto spectrum = full_spectrum_oracle(q_matrix(t));
                CHECK(spectrum.front() > 0.0);
            }
        }
    }
}

TEST_CASE("power iteration agrees with the oracle on sampled connected graphs") {
    // Non-tree coverage: random trees thickened with extra edges.
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int v = 1; v < n; ++v)
            g.add_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
        int extra = static_cast<int>(rng() % 4);
        for (int k = 0; k < extra; ++k) {
            int u = static_cast<int>(rng() % static_cast<unsigned>(n));
            int v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (u != v && !g.has_edge(u, v))
                g.add_edge(u, v);
        }
        QMatrix q = q_matrix(g);
        SpectralResult sr = spectral_radius(q);
        auto spectrum = full_spectrum_oracle(q);
        CHECK(std::abs(sr.rho - spectrum.back()) <= 1e-9 * sr.rho);
        TransmissionVector tv = transmissions(all_pairs_distances(g));
        CHECK(sr.rho > static_cast<double>(tv.tr_max));
        CHECK(sr.rho >= 2.0 * static_cast<double>(tv.tr_min) - 1e-9 * sr.rho);
        CHECK(sr.rho <= 2.0 * static_cast<double>(tv.tr_max) + 1e-9 * sr.rho);
        if (n >= 3)
            CHECK(spectrum.front() > 0.0);
    }
}

TEST_CASE("transmission-regular graphs reach the row-sum bound with equality") {
    // K_2: both sandwich bounds and the Wiener bound collapse to equalities.
    SpectralResult k2 = spectral_radius(make_path(2));
    CHECK(k2.rho == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(k2.rho == doctest::Approx(4.0 * 1.0 / 2.0).epsilon(1e-14)); // 4W/n with W = 1

    // K_3 has all transmissions equal, so rho == 2 Tr exactly.
    Graph tri = parse_edge_list("3 3\n0 1\n1 2\n0 2");
    TransmissionVector tv = transmissions(all_pairs_distances(tri));
    CHECK(tv.tr_max == tv.tr_min);
    CHECK(spectral_radius(tri).rho == Approx(2.0 * static_cast<double>(tv.tr_max)).epsilon(1e-13));

    // C_5: transmission-regular as well.
    Graph c5 = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n0 4");
    TransmissionVector tv5 = transmissions(all_pairs_distances(c5));
    CHECK(tv5.tr_max == tv5.tr_min);
    CHECK(spectral_radius(c5).rho == Approx(2.0 * static_cast<double>(tv5.tr_max)).epsilon(1e-12));

    // Trees of order >= 3 are never transmission-regular; both bounds strict.
    for (const Graph& t : enumerate_trees(6)) {
        TransmissionVector tv6 = transmissions(all_pairs_distances(t));
        double rho = spectral_radius(t).rho;
        CHECK(rho > 2.0 * static_cast<double>(tv6.tr_min));
        CHECK(rho < 2.0 * static_cast<double>(tv6.tr_max));
    }
}
