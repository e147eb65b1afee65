#include "pencil/coupled.hpp"

#include <string>
#include <utility>

#include "pencil/numeric.hpp"
#include "pencil/resolvent.hpp"

namespace pencil {

namespace {

Matrix invert_or_throw_schur(const Matrix& S, Complex mu, double rank_tol) {
    const RealVector sigma = singular_values(S);
    const double thresh = rank_threshold(sigma, S.rows(), S.cols(), rank_tol);
    if (sigma.size() > 0 && !(sigma(sigma.size() - 1) > thresh)) {
        throw SingularSchur(mu, "S1(mu) is numerically singular");
    }
    return S.colPivHouseholderQr().solve(Matrix::Identity(S.rows(), S.cols()));
}

}  // namespace

CoupledBlocks make_coupled(Matrix A1, Matrix A2, Matrix A3, Matrix A4,
                           double rank_tol) {
    if (A1.rows() != A1.cols() || A4.rows() != A4.cols()) {
        throw ShapeMismatch("coupled blocks: A1 and A4 must be square");
    }
    const Index m = A1.rows();
    const Index q = A4.rows();
    if (A2.rows() != m || A2.cols() != q || A3.rows() != q || A3.cols() != m) {
        throw ShapeMismatch(
            "coupled blocks: A2 must be m x q and A3 must be q x m");
    }
    const RealVector sigma4 = singular_values(A4);
    if (q > 0) {
        const double thresh = rank_threshold(sigma4, q, q, rank_tol);
        if (!(sigma4(sigma4.size() - 1) > thresh)) {
            throw SingularA4("coupled blocks: A4 is numerically singular");
        }
    }

    CoupledBlocks blocks;
    blocks.A1 = std::move(A1);
    blocks.A2 = std::move(A2);
    blocks.A3 = std::move(A3);
    blocks.A4 = std::move(A4);
    blocks.omega = max_hermitian_eigenvalue(hermitian_part(blocks.A1));
    blocks.M = 1.0;
    const Matrix coupling =
        blocks.A2 * blocks.A4.colPivHouseholderQr().solve(blocks.A3);
    blocks.omega0 = blocks.omega + blocks.M * operator_norm(coupling);
    return blocks;
}

Pencil assemble(const CoupledBlocks& blocks) {
    const Index m = blocks.m();
    const Index q = blocks.q();
    const Index n = m + q;
    Matrix E = Matrix::Zero(n, n);
    E.topLeftCorner(m, m) = Matrix::Identity(m, m);
    Matrix A(n, n);
    A.topLeftCorner(m, m) = blocks.A1;
    A.topRightCorner(m, q) = blocks.A2;
    A.bottomLeftCorner(q, m) = blocks.A3;
    A.bottomRightCorner(q, q) = blocks.A4;
    return Pencil(std::move(E), std::move(A));
}

Matrix schur_complement(const CoupledBlocks& blocks, Complex mu) {
    const Index m = blocks.m();
    return mu * Matrix::Identity(m, m) - blocks.A1 +
           blocks.A2 * blocks.A4.colPivHouseholderQr().solve(blocks.A3);
}

Matrix block_resolvent(const CoupledBlocks& blocks, Complex mu,
                       double rank_tol) {
    const Index m = blocks.m();
    const Index q = blocks.q();
    const Index n = m + q;

    const Matrix S1_inv =
        invert_or_throw_schur(schur_complement(blocks, mu), mu, rank_tol);
    const auto a4_qr = blocks.A4.colPivHouseholderQr();
    const Matrix A4_inv = a4_qr.solve(Matrix::Identity(q, q));
    const Matrix A4_inv_A3 = a4_qr.solve(blocks.A3);
    // A2 A4^{-1} through the transposed system, no conjugation involved.
    const Matrix A2_A4_inv = blocks.A4.transpose()
                                 .colPivHouseholderQr()
                                 .solve(blocks.A2.transpose())
                                 .transpose();

    Matrix lower = Matrix::Identity(n, n);
    lower.bottomLeftCorner(q, m) = -A4_inv_A3;
    Matrix mid = Matrix::Zero(n, n);
    mid.topLeftCorner(m, m) = S1_inv;
    mid.bottomRightCorner(q, q) = -A4_inv;
    Matrix upper = Matrix::Identity(n, n);
    upper.topRightCorner(m, q) = -A2_A4_inv;
    return lower * mid * upper;
}

std::pair<Matrix, Matrix> closed_form_projections(const CoupledBlocks& blocks) {
    const Index m = blocks.m();
    const Index q = blocks.q();
    const Index n = m + q;
    Matrix P = Matrix::Zero(n, n);
    P.topLeftCorner(m, m) = Matrix::Identity(m, m);
    P.bottomLeftCorner(q, m) = -blocks.A4.colPivHouseholderQr().solve(blocks.A3);
    Matrix Q = Matrix::Zero(n, n);
    Q.topLeftCorner(m, m) = Matrix::Identity(m, m);
    Q.topRightCorner(m, q) = -blocks.A4.transpose()
                                  .colPivHouseholderQr()
                                  .solve(blocks.A2.transpose())
                                  .transpose();
    return {P, Q};
}

PowerFormulaResiduals verify_power_formulas(const CoupledBlocks& blocks,
                                            Complex mu, int n,
                                            double rank_tol) {
    if (n < 1) {
        throw std::invalid_argument("verify_power_formulas: n must be positive");
    }
    const Index m = blocks.m();
    const Index q = blocks.q();
    const Index dim = m + q;
    const Pencil p = assemble(blocks);

    const Matrix S1_inv =
        invert_or_throw_schur(schur_complement(blocks, mu), mu, rank_tol);
    const auto a4_qr = blocks.A4.colPivHouseholderQr();
    const Matrix A4_inv_A3 = a4_qr.solve(blocks.A3);
    const Matrix A2_A4_inv = blocks.A4.transpose()
                                 .colPivHouseholderQr()
                                 .solve(blocks.A2.transpose())
                                 .transpose();

    const Matrix right_one = right_e_resolvent(p, mu, rank_tol);
    const Matrix left_one = left_e_resolvent(p, mu, rank_tol);
    Matrix right_power = right_one;
    Matrix left_power = left_one;
    Matrix S1_inv_power = S1_inv;
    for (int i = 1; i < n; ++i) {
        right_power = right_power * right_one;
        left_power = left_power * left_one;
        S1_inv_power = S1_inv_power * S1_inv;
    }

    Matrix right_closed = Matrix::Zero(dim, dim);
    right_closed.topLeftCorner(m, m) = S1_inv_power;
    right_closed.bottomLeftCorner(q, m) = -A4_inv_A3 * S1_inv_power;
    Matrix left_closed = Matrix::Zero(dim, dim);
    left_closed.topLeftCorner(m, m) = S1_inv_power;
    left_closed.topRightCorner(m, q) = -S1_inv_power * A2_A4_inv;

    PowerFormulaResiduals res;
    res.right = (right_power - right_closed).cwiseAbs().maxCoeff();
    res.left = (left_power - left_closed).cwiseAbs().maxCoeff();
    return res;
}

}  // namespace pencil
