#include <doctest.h>

#include <cmath>

#include "pencil/coupled.hpp"
#include "pencil/decomposition.hpp"
#include "pencil/numeric.hpp"
#include "pencil/radiality.hpp"
#include "pencil/resolvent.hpp"
#include "support/generators.hpp"

using namespace pencil;
using testsupport::max_abs_diff;

namespace {

Matrix scalar(double v) {
    Matrix M(1, 1);
    M << v;
    return M;
}

}  // namespace

TEST_CASE("assemble scalar blocks") {
    const CoupledBlocks blocks =
        make_coupled(scalar(-1), scalar(0), scalar(0), scalar(1));
    const Pencil p = assemble(blocks);
    Matrix E(2, 2), A(2, 2);
    E << 1, 0, 0, 0;
    A << -1, 0, 0, 1;
    CHECK(max_abs_diff(p.E(), E) == 0.0);
    CHECK(max_abs_diff(p.A(), A) == 0.0);
    CHECK(blocks.omega == doctest::Approx(-1.0));
    CHECK(blocks.omega0 == doctest::Approx(-1.0));
}

TEST_CASE("singular A4 is rejected") {
    CHECK_THROWS_AS(make_coupled(scalar(-1), scalar(0), scalar(0), scalar(0)),
                    SingularA4);
}

TEST_CASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(make_coupled(Matrix::Zero(2, 2), Matrix::Zero(3, 1),
                                 Matrix::Zero(1, 2), Matrix::Zero(1, 1)),
                    ShapeMismatch);
}

TEST_CASE("random blocks assemble entrywise") {
    std::mt19937_64 rng(67);
    const Matrix A1 = testsupport::random_gaussian(2, 2, rng);
    const Matrix A2 = testsupport::random_gaussian(2, 2, rng);
    const Matrix A3 = testsupport::random_gaussian(2, 2, rng);
    const Matrix A4 = Matrix::Identity(2, 2) + 0.1 * testsupport::random_gaussian(2, 2, rng);
    const Pencil p = assemble(make_coupled(A1, A2, A3, A4));
    CHECK(max_abs_diff(p.A().topLeftCorner(2, 2), A1) == 0.0);
    CHECK(max_abs_diff(p.A().topRightCorner(2, 2), A2) == 0.0);
    CHECK(max_abs_diff(p.A().bottomLeftCorner(2, 2), A3) == 0.0);
    CHECK(max_abs_diff(p.A().bottomRightCorner(2, 2), A4) == 0.0);
    CHECK(max_abs_diff(p.E().topLeftCorner(2, 2), Matrix::Identity(2, 2)) == 0.0);
    CHECK(operator_norm(p.E().bottomRightCorner(2, 2)) == 0.0);
}

TEST_CASE("Schur complement closed forms") {
    SUBCASE("zero blocks and identity A4 give S1(1) = I") {
        const CoupledBlocks blocks =
            make_coupled(Matrix::Zero(2, 2), Matrix::Zero(2, 2),
                         Matrix::Zero(2, 2), Matrix::Identity(2, 2));
        CHECK(max_abs_diff(schur_complement(blocks, 1.0),
                           Matrix::Identity(2, 2)) < 1e-14);
    }
    SUBCASE("scalar arithmetic: S1(0) = 0 - (-1) + 1*(1/2)*1 = 1.5") {
        const CoupledBlocks blocks =
            make_coupled(scalar(-1), scalar(1), scalar(1), scalar(2));
        CHECK(schur_complement(blocks, 0.0)(0, 0).real() ==
              doctest::Approx(1.5));
    }
    SUBCASE("factored and unfactored forms agree off spec(A1)") {
        std::mt19937_64 rng(71);
        const CoupledBlocks blocks = testsupport::random_coupled(3, 3, rng);
        const Complex mu(blocks.omega0 + 1.5, 0.4);
        const Matrix unfactored = schur_complement(blocks, mu);
        const Matrix mu_minus_A1 =
            mu * Matrix::Identity(3, 3) - blocks.A1;
        const Matrix coupling =
            blocks.A2 * solve(blocks.A4, blocks.A3);
        const Matrix factored =
            mu_minus_A1 *
            (Matrix::Identity(3, 3) + solve(mu_minus_A1, coupling));
        CHECK(max_abs_diff(unfactored, factored) <= 1e-12);
    }
    SUBCASE("invertibility beyond omega0 with ||S1^{-1}|| <= M/(mu-omega0)") {
        std::mt19937_64 rng(73);
        const CoupledBlocks blocks = testsupport::random_coupled(3, 3, rng);
        const double mu = blocks.omega0 + 1.0;
        const Matrix S1 = schur_complement(blocks, mu);
        const Matrix S1_inv = solve(S1, Matrix::Identity(3, 3));
        CHECK(operator_norm(S1_inv) <=
              blocks.M / (mu - blocks.omega0) * (1.0 + 1e-8));
    }
}

TEST_CASE("block resolvent") {
    SUBCASE("decoupled scalars: blockdiag(1/2, -1)") {
        const CoupledBlocks blocks =
            make_coupled(scalar(-1), scalar(0), scalar(0), scalar(1));
        Matrix expected(2, 2);
        expected << 0.5, 0, 0, -1;
        CHECK(max_abs_diff(block_resolvent(blocks, 1.0), expected) < 1e-14);
    }
    SUBCASE("agrees with the dense resolvent of the assembled pencil") {
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 5; ++trial) {
            const CoupledBlocks blocks = testsupport::random_coupled(2, 2, rng);
            const double mu = blocks.omega0 + 2.0;
            const Matrix direct = resolvent(assemble(blocks), mu);
            CHECK(max_abs_diff(block_resolvent(blocks, mu), direct) <= 1e-10);
        }
    }
    SUBCASE("singular Schur complement throws") {
        // A1 = diag(5, -1), decoupled: S1(5) = 5 - A1 is singular.
        Matrix A1(2, 2);
        A1 << 5, 0, 0, -1;
        const CoupledBlocks blocks = make_coupled(
            A1, Matrix::Zero(2, 2), Matrix::Zero(2, 2), Matrix::Identity(2, 2));
        CHECK_THROWS_AS(block_resolvent(blocks, 5.0), SingularSchur);
    }
}

TEST_CASE("closed-form projections") {
    SUBCASE("decoupled blocks reduce to blockdiag(I, 0)") {
        const CoupledBlocks blocks =
            make_coupled(scalar(-1), scalar(0), scalar(0), scalar(1));
        const auto [P, Q] = closed_form_projections(blocks);
        Matrix expected(2, 2);
        expected << 1, 0, 0, 0;
        CHECK(max_abs_diff(P, expected) == 0.0);
        CHECK(max_abs_diff(Q, expected) == 0.0);
    }
    SUBCASE("scalar couplings place -A4^{-1}A3 and -A2A4^{-1}") {
        const CoupledBlocks blocks =
            make_coupled(scalar(-1), scalar(1), scalar(1), scalar(2));
        const auto [P, Q] = closed_form_projections(blocks);
        Matrix P_ref(2, 2), Q_ref(2, 2);
        P_ref << 1, 0, -0.5, 0;
        Q_ref << 1, -0.5, 0, 0;
        CHECK(max_abs_diff(P, P_ref) < 1e-15);
        CHECK(max_abs_diff(Q, Q_ref) < 1e-15);
    }
    SUBCASE("agree with the general decomposition path") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 5; ++trial) {
            const CoupledBlocks blocks = testsupport::random_coupled(3, 2, rng);
            const auto [P, Q] = closed_form_projections(blocks);
            const Decomposition d = decompose(assemble(blocks));
            CHECK(max_abs_diff(P, d.P) <= 1e-8);
            CHECK(max_abs_diff(Q, d.Q) <= 1e-8);
        }
    }
    SUBCASE("idempotency and intertwining at closed-form accuracy") {
        std::mt19937_64 rng(89);
        const CoupledBlocks blocks = testsupport::random_coupled(4, 3, rng);
        const auto [P, Q] = closed_form_projections(blocks);
        const double nP = operator_norm(P);
        const double nQ = operator_norm(Q);
        CHECK(operator_norm(P * P - P) <= 1e-12 * nP * nP);
        CHECK(operator_norm(Q * Q - Q) <= 1e-12 * nQ * nQ);
        const Matrix E = assemble(blocks).E();
        CHECK(max_abs_diff(E * P, Q * E) <= 1e-12);
    }
}

TEST_CASE("power formulas") {
    SUBCASE("single application is a plain solve") {
        std::mt19937_64 rng(97);
        const CoupledBlocks blocks = testsupport::random_coupled(3, 3, rng);
        const auto res = verify_power_formulas(blocks, blocks.omega0 + 1.0, 1);
        CHECK(res.right <= 1e-12);
        CHECK(res.left <= 1e-12);
    }
    SUBCASE("scalar cube: right power = blockdiag(1/8, 0)") {
        const CoupledBlocks blocks =
            make_coupled(scalar(-1), scalar(0), scalar(0), scalar(1));
        const Matrix right_power =
            right_e_resolvent(assemble(blocks), 1.0) *
            right_e_resolvent(assemble(blocks), 1.0) *
            right_e_resolvent(assemble(blocks), 1.0);
        Matrix expected(2, 2);
        expected << 0.125, 0, 0, 0;
        CHECK(max_abs_diff(right_power, expected) < 1e-14);
        const auto res = verify_power_formulas(blocks, 1.0, 3);
        CHECK(res.right <= 1e-14);
    }
    SUBCASE("ten powers of random 3x3 blocks stay within 1e-8") {
        std::mt19937_64 rng(101);
        const CoupledBlocks blocks = testsupport::random_coupled(3, 3, rng);
        const auto res = verify_power_formulas(blocks, blocks.omega0 + 2.0, 10);
        CHECK(res.right <= 1e-8);
        CHECK(res.left <= 1e-8);
    }
}

TEST_CASE("Schur resolvent power bound on the mu grid") {
    std::mt19937_64 rng(103);
    const CoupledBlocks blocks = testsupport::random_coupled(3, 3, rng);
    for (const double offset : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
        const double mu = blocks.omega0 + offset;
        const Matrix S1_inv =
            solve(schur_complement(blocks, mu), Matrix::Identity(3, 3));
        Matrix power = Matrix::Identity(3, 3);
        for (int n = 1; n <= 10; ++n) {
            power = power * S1_inv;
            CHECK(operator_norm(power) <=
                  blocks.M / std::pow(mu - blocks.omega0, n) * (1.0 + 1e-8));
        }
    }
}

TEST_CASE("intertwining of a 20-dimensional coupled pencil") {
    std::mt19937_64 rng(113);
    const CoupledBlocks blocks = testsupport::random_coupled(10, 10, rng);
    const Pencil p = assemble(blocks);
    const auto res = verify_intertwining(decompose(p), p);
    CHECK(res.A_side <= 1e-8);
    CHECK(res.E_side <= 1e-8);
}

TEST_CASE("A - omega0 E is E-radial on the sampled grid") {
    std::mt19937_64 rng(107);
    const CoupledBlocks blocks = testsupport::random_coupled(3, 2, rng);
    const Pencil base = assemble(blocks);
    const Pencil shifted(base.E(), base.A() - blocks.omega0 * base.E());
    const double grid[] = {1.0, 10.0, 100.0};
    const RadialityReport report = estimate_radiality(shifted, grid, 8);
    CHECK(report.bounded);
}
