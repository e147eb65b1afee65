#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace pencil {

/// Base class of all toolkit failures.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// sE - A is numerically singular at the probed spectral point.
class SingularAtS : public Error {
  public:
    SingularAtS(std::complex<double> s, const std::string& what)
        : Error(what), s_(s) {}
    std::complex<double> point() const noexcept { return s_; }

  private:
    std::complex<double> s_;
};

/// ker E and ran R^E(alpha, A) do not form a direct sum; the state space
/// cannot be split (operational signal of index >= 2).
class NotDecomposable : public Error {
  public:
    using Error::Error;
};

/// The algebraic block A0 = A restricted to ker E is numerically singular.
class DegenerateA0 : public Error {
  public:
    using Error::Error;
};

/// The limit s -> infinity of s R^E(s, A) did not stabilize on the sample grid.
class NoConvergence : public Error {
  public:
    using Error::Error;
};

/// The initial datum z0 has a nontrivial component outside ran E.
class InconsistentIC : public Error {
  public:
    InconsistentIC(double residual, const std::string& what)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

/// The algebraic block A4 of a coupled system is not invertible.
class SingularA4 : public Error {
  public:
    using Error::Error;
};

/// The Schur complement S1(mu) is numerically singular.
class SingularSchur : public Error {
  public:
    SingularSchur(std::complex<double> mu, const std::string& what)
        : Error(what), mu_(mu) {}
    std::complex<double> point() const noexcept { return mu_; }

  private:
    std::complex<double> mu_;
};

/// A spatial sample point lies outside the open interval (0, pi).
class GridOutOfRange : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// Text-format error carrying a 1-based line and column.
class ParseError : public Error {
  public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace pencil
