#pragma once

#include <optional>

#include "pencil/types.hpp"

namespace pencil {

/// Pointwise membership probe for the resolvent set of (E, A).
struct ResolventSample {
    Complex s;
    bool in_resolvent_set = false;
    /// Condition number of sE - A; absent when numerically singular.
    std::optional<double> condition_estimate;
};

ResolventSample probe_resolvent(const Pencil& p, Complex s,
                                double rank_tol = -1.0);

/// (sE - A)^{-1}. Throws SingularAtS when the smallest singular value of
/// sE - A falls below the rank threshold.
Matrix resolvent(const Pencil& p, Complex s, double rank_tol = -1.0);

/// Right E-resolvent R^E(s, A) = (sE - A)^{-1} E.
Matrix right_e_resolvent(const Pencil& p, Complex s, double rank_tol = -1.0);

/// Left E-resolvent L^E(s, A) = E (sE - A)^{-1}.
Matrix left_e_resolvent(const Pencil& p, Complex s, double rank_tol = -1.0);

}  // namespace pencil
