#pragma once

#include <string>
#include <string_view>

#include "pencil/integrator.hpp"
#include "pencil/types.hpp"

namespace pencil {

/// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double v);

/// "<re>:<im>", each part shortest round-trip.
std::string format_complex(Complex v);

/// Pencil text format:
///   PENCIL 1
///   dim <n>
///   E
///   <n rows of n "re:im" entries>
///   A
///   <n rows>
/// '#'-prefixed lines are comments; parsing is locale-independent. Errors
/// carry 1-based line/column (ParseError) or a DimensionMismatch.
Pencil parse_pencil(std::string_view text);
std::string print_pencil(const Pencil& p);

/// Rectangular matrix file: "MATRIX 1", "rows <r>", "cols <c>", r data rows.
Matrix parse_matrix(std::string_view text);
std::string print_matrix(const Matrix& M);

/// Vector file: one "re:im" entry per line.
Vector parse_vector(std::string_view text);
std::string print_vector(const Vector& v);

/// CSV rows "t,norm_Ex,x1_re,x1_im,...,xn_re,xn_im".
std::string trajectory_csv(const Trajectory& traj);

}  // namespace pencil
