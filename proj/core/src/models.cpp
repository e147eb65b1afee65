#include "pencil/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pencil {

DzektserModel dzektser_model(int modes) {
    if (modes < 2) {
        throw std::invalid_argument("dzektser model: need at least 2 modes");
    }
    DzektserModel model;
    model.modes = modes;
    model.E_diag.resize(modes);
    model.A_diag.resize(modes);
    for (int n = 1; n <= modes; ++n) {
        const double n2 = static_cast<double>(n) * n;
        model.E_diag(n - 1) = 1.0 - n2;
        model.A_diag(n - 1) = 2.0 * n2 * n2 - n2;
    }
    return model;
}

Pencil dzektser_pencil(int modes) {
    const DzektserModel model = dzektser_model(modes);
    Matrix E = model.E_diag.cast<Complex>().asDiagonal();
    Matrix A = model.A_diag.cast<Complex>().asDiagonal();
    return Pencil(std::move(E), std::move(A));
}

RealVector dzektser_reduced_spectrum(int modes) {
    const DzektserModel model = dzektser_model(modes);
    RealVector spectrum(modes - 1);
    for (int n = 2; n <= modes; ++n) {
        spectrum(n - 2) = model.A_diag(n - 1) / model.E_diag(n - 1);
    }
    return spectrum;
}

Vector evaluate_solution(const DzektserModel& model, const Vector& coeffs,
                         std::span<const double> zeta_grid) {
    if (coeffs.size() != model.modes) {
        throw DimensionMismatch("evaluate_solution: expected " +
                                std::to_string(model.modes) + " coefficients");
    }
    const double scale = std::sqrt(2.0 / std::numbers::pi);
    Vector values(static_cast<Index>(zeta_grid.size()));
    Index i = 0;
    for (const double zeta : zeta_grid) {
        if (!(zeta > 0.0 && zeta < std::numbers::pi)) {
            throw GridOutOfRange("evaluate_solution: zeta = " +
                                 std::to_string(zeta) +
                                 " is outside (0, pi)");
        }
        Complex acc = 0.0;
        for (int n = 1; n <= model.modes; ++n) {
            acc += coeffs(n - 1) * (scale * std::sin(n * zeta));
        }
        values(i++) = acc;
    }
    return values;
}

std::vector<GalleryEntry> negative_gallery() {
    std::vector<GalleryEntry> gallery;

    Matrix E2(2, 2);
    E2 << 0, 1, 0, 0;
    gallery.push_back({"index2", Pencil(E2, Matrix::Identity(2, 2)),
                       ExpectedFailure::IndexTwo});

    Matrix S(2, 2);
    S << 1, 0, 0, 0;
    gallery.push_back(
        {"singular", Pencil(S, S), ExpectedFailure::EmptyResolventSet});

    gallery.push_back({"antidissipative",
                       Pencil(Matrix::Identity(2, 2), Matrix::Identity(2, 2)),
                       ExpectedFailure::NotDissipative});

    return gallery;
}

}  // namespace pencil
