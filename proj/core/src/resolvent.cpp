#include "pencil/resolvent.hpp"

#include <string>

#include "pencil/numeric.hpp"

namespace pencil {

namespace {

std::string describe_point(Complex s) {
    return "s = " + std::to_string(s.real()) +
           (s.imag() >= 0 ? "+" : "") + std::to_string(s.imag()) + "i";
}

}  // namespace

ResolventSample probe_resolvent(const Pencil& p, Complex s, double rank_tol) {
    ResolventSample sample;
    sample.s = s;
    const Matrix T = s * p.E() - p.A();
    const RealVector sigma = singular_values(T);
    if (sigma.size() == 0) {
        sample.in_resolvent_set = false;
        return sample;
    }
    const double thresh = rank_threshold(sigma, T.rows(), T.cols(), rank_tol);
    const double smin = sigma(sigma.size() - 1);
    sample.in_resolvent_set = smin > thresh;
    if (sample.in_resolvent_set) {
        sample.condition_estimate = sigma(0) / smin;
    }
    return sample;
}

Matrix resolvent(const Pencil& p, Complex s, double rank_tol) {
    const Matrix T = s * p.E() - p.A();
    if (T.rows() == 0) {
        return T;
    }
    Eigen::BDCSVD<Matrix> svd(T, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector sigma = svd.singularValues();
    const double thresh = rank_threshold(sigma, T.rows(), T.cols(), rank_tol);
    const double smin = sigma(sigma.size() - 1);
    if (!(smin > thresh)) {
        throw SingularAtS(s, "sE - A is numerically singular at " +
                                 describe_point(s));
    }
    return svd.matrixV() * sigma.cwiseInverse().asDiagonal() *
           svd.matrixU().adjoint();
}

Matrix right_e_resolvent(const Pencil& p, Complex s, double rank_tol) {
    return resolvent(p, s, rank_tol) * p.E();
}

Matrix left_e_resolvent(const Pencil& p, Complex s, double rank_tol) {
    return p.E() * resolvent(p, s, rank_tol);
}

}  // namespace pencil
