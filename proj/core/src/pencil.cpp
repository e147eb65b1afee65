#include "pencil/types.hpp"

#include <cmath>
#include <utility>

namespace pencil {

namespace {

bool all_finite(const Matrix& M) {
    for (Index j = 0; j < M.cols(); ++j) {
        for (Index i = 0; i < M.rows(); ++i) {
            const Complex v = M(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

Pencil::Pencil(Matrix E, Matrix A) : E_(std::move(E)), A_(std::move(A)) {
    if (E_.rows() != E_.cols()) {
        throw ShapeMismatch("pencil: E must be square");
    }
    if (A_.rows() != E_.rows() || A_.cols() != E_.cols()) {
        throw ShapeMismatch("pencil: E and A must have identical shape");
    }
    if (!all_finite(E_) || !all_finite(A_)) {
        throw std::invalid_argument("pencil: entries must be finite");
    }
}

}  // namespace pencil
