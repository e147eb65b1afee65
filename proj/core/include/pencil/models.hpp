#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pencil/types.hpp"

namespace pencil {

/// Spectral truncation of the Dzektser groundwater-flow equation
///   d/dt (x + x'') = x'' + 2 x'''',  x(0) = x(pi) = 0, x''(0) = x''(pi) = 0,
/// in the orthonormal sine-mode coordinates phi_n = sqrt(2/pi) sin(n zeta),
/// which diagonalize both operators: E phi_n = (1 - n^2) phi_n and
/// A phi_n = (2 n^4 - n^2) phi_n. Mode 1 spans ker E.
struct DzektserModel {
    int modes = 0;       // N >= 2
    RealVector E_diag;   // 1 - n^2, n = 1..N
    RealVector A_diag;   // 2n^4 - n^2, n = 1..N
    std::optional<RealVector> grid;  // default zeta sample points in (0, pi)
};

DzektserModel dzektser_model(int modes);

/// Diagonal pencil E = diag(1 - n^2), A = diag(2n^4 - n^2), n = 1..N.
Pencil dzektser_pencil(int modes);

/// Closed-form eigenvalues (2n^4 - n^2)/(1 - n^2) of the reduced generator,
/// n = 2..N; all strictly negative.
RealVector dzektser_reduced_spectrum(int modes);

/// Mode-to-physical synthesis: sum_n coeffs[n-1] sqrt(2/pi) sin(n zeta) on
/// the grid. Throws GridOutOfRange when a point leaves (0, pi).
Vector evaluate_solution(const DzektserModel& model, const Vector& coeffs,
                         std::span<const double> zeta_grid);

enum class ExpectedFailure {
    IndexTwo,           // radiality unbounded, not decomposable
    EmptyResolventSet,  // singular pencil, det(sE - A) vanishes identically
    NotDissipative,     // forward Hermitian condition fails
};

struct GalleryEntry {
    std::string name;
    Pencil pencil;
    ExpectedFailure expected;
};

/// Fixture pencils exercising each failure mode of the analysis pipeline.
std::vector<GalleryEntry> negative_gallery();

}  // namespace pencil
