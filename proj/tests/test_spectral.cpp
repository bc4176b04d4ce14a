#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gpinv/generators.hpp"
#include "gpinv/spectral.hpp"
#include "testutil.hpp"

using namespace gpinv;

namespace {

double decomposition_defect(const SymMatrix& a, const SpectralDecomposition& d) {
    const std::size_t n = a.dim();
    Matrix lam(n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = d.eigenvalues[i];
    const Matrix rebuilt = d.eigenvectors * lam * d.eigenvectors.transposed();
    return max_abs_diff(rebuilt, a.mat());
}

double orthogonality_defect(const SpectralDecomposition& d) {
    const Matrix qtq = d.eigenvectors.transposed() * d.eigenvectors;
    return max_abs_diff(qtq, Matrix::identity(d.eigenvalues.size()));
}

} // namespace

TEST_CASE("Jacobi eigendecomposition reconstructs and stays orthogonal") {
    const std::vector<Graph> graphs = {gen_star(12), gen_complete(9), gen_path(15),
                                       gen_cycle(11), gen_petersen(),
                                       gen_erdos_renyi(40, 0.5, 8)};
    for (const auto& g : graphs) {
        const auto a = adjacency_matrix(g);
        const auto d = jacobi_eigendecomposition(a);
        CHECK(orthogonality_defect(d) <= 1e-10);
        CHECK(decomposition_defect(a, d) <= 1e-10);
        // ascending order
        for (std::size_t i = 1; i < d.eigenvalues.size(); ++i)
            CHECK(d.eigenvalues[i - 1] <= d.eigenvalues[i]);
    }
}

TEST_CASE("known adjacency spectra") {
    SECTION("K_4: eigenvalues -1,-1,-1,3") {
        const auto d = jacobi_eigendecomposition(adjacency_matrix(gen_complete(4)));
        for (int i = 0; i < 3; ++i)
            CHECK_THAT(d.eigenvalues[static_cast<std::size_t>(i)],
                       Catch::Matchers::WithinAbs(-1.0, 1e-12));
        CHECK_THAT(d.eigenvalues[3], Catch::Matchers::WithinAbs(3.0, 1e-12));
    }
    SECTION("S_9: +/-sqrt(8) and zeros") {
        const auto d = jacobi_eigendecomposition(adjacency_matrix(gen_star(9)));
        CHECK_THAT(d.eigenvalues.front(), Catch::Matchers::WithinAbs(-std::sqrt(8.0), 1e-12));
        CHECK_THAT(d.eigenvalues.back(), Catch::Matchers::WithinAbs(std::sqrt(8.0), 1e-12));
        for (std::size_t i = 1; i + 1 < d.eigenvalues.size(); ++i)
            CHECK_THAT(d.eigenvalues[i], Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
    SECTION("Petersen: 3, 1 (x5), -2 (x4)") {
        const auto d = jacobi_eigendecomposition(adjacency_matrix(gen_petersen()));
        CHECK_THAT(d.eigenvalues.back(), Catch::Matchers::WithinAbs(3.0, 1e-12));
        for (int i = 0; i < 4; ++i)
            CHECK_THAT(d.eigenvalues[static_cast<std::size_t>(i)],
                       Catch::Matchers::WithinAbs(-2.0, 1e-12));
        for (int i = 4; i < 9; ++i)
            CHECK_THAT(d.eigenvalues[static_cast<std::size_t>(i)],
                       Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("spectral_pinv on the named examples") {
    SECTION("K_4 reproduces the closed form") {
        const auto p = spectral_pinv(adjacency_matrix(gen_complete(4)));
        CHECK(max_abs_diff(p.mat(), testutil::k4_pinv()) <= 1e-12);
    }
    SECTION("stars reproduce (1/(n-1)) A") {
        for (int n : {3, 5, 8, 12}) {
            const auto p = spectral_pinv(adjacency_matrix(gen_star(n)));
            CHECK(max_abs_diff(p.mat(), testutil::star_pinv(n)) <= 1e-12);
        }
    }
    SECTION("zero matrix maps to zero matrix") {
        const auto p = spectral_pinv(adjacency_matrix(Graph(6, {})));
        CHECK(p.max_abs() == 0.0);
    }
    SECTION("zero_tol must be positive") {
        CHECK_THROWS_AS(spectral_pinv(adjacency_matrix(gen_star(3)), 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("pinv of pinv returns the adjacency matrix") {
    for (const auto& g : {gen_star(7), gen_complete(6), gen_path(9), gen_cycle(8),
                          gen_petersen(), gen_erdos_renyi(20, 0.4, 5)}) {
        const auto a = adjacency_matrix(g);
        const auto back = spectral_pinv(spectral_pinv(a));
        CHECK(max_abs_diff(back, a) <= 1e-8);
    }
}

TEST_CASE("jacobi sweep cap reports non-convergence") {
    CHECK_THROWS_AS(jacobi_eigendecomposition(adjacency_matrix(gen_star(4)), 0),
                    std::runtime_error);
}

TEST_CASE("rank_from matches known ranks") {
    auto rank_of = [](const Graph& g) {
        const auto d = jacobi_eigendecomposition(adjacency_matrix(g));
        return rank_from(d, 1e-8 * std::max(d.spectral_radius(), 1.0));
    };
    CHECK(rank_of(gen_complete(4)) == 4);
    CHECK(rank_of(gen_star(9)) == 2);
    CHECK(rank_of(gen_path(3)) == 2);
    CHECK(rank_of(gen_cycle(4)) == 2);
    CHECK(rank_of(gen_petersen()) == 10);
    CHECK(rank_of(Graph(5, {})) == 0);
}
