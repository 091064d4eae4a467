#pragma once

#include "wco/report.hpp"
#include "wco/system.hpp"

namespace wco {

/// Weak centeredness through the density: h is mu_w-a.e. equal to its
/// conditional expectation, i.e. h is constant on the mu_w-carried part of
/// every fiber. Closed-form; no matrices involved.
PropertyReport is_weakly_centered(const WcoSystem& sys,
                                  double tol = kDefaultTol);

/// The power variant: h^alpha = E(h^alpha) mu_w-a.e., alpha != 0. For
/// negative alpha the comparison only makes sense where h > 0; if a
/// mu_w-carried atom with h = 0 shows up the check is reported as not
/// applicable rather than pretending 0^alpha means something.
PropertyReport is_weakly_centered_alpha(const WcoSystem& sys, double alpha,
                                        double tol = kDefaultTol);

/// Quasinormal: h = h o phi mu_w-a.e.
PropertyReport is_quasinormal(const WcoSystem& sys, double tol = kDefaultTol);

/// Hyponormal: h o phi <= h mu_w-a.e. (one-sided, so the tolerance only
/// guards against noise pushing a tie over the line).
PropertyReport is_hyponormal(const WcoSystem& sys, double tol = kDefaultTol);

/// Cohyponormal: T T* <= T* T, decided through the matrix realization
/// (smallest eigenvalue of T*T - TT* above -tol).
PropertyReport is_cohyponormal(const WcoSystem& sys, double tol = kDefaultTol);

/// Centered: the doubly-infinite string ..., T^2 (T^2)*, T T*, T* T,
/// (T^2)* T^2, ... mutually commutes. Checked through the matrix
/// realization for powers up to `depth`.
PropertyReport is_centered(const WcoSystem& sys, int depth = 3,
                           double tol = kDefaultTol);

/// Scalar multiple of an isometry: h constant mu-a.e. (equivalently both
/// the system and its adjoint-free criterion collapse).
PropertyReport is_isometry_multiple(const WcoSystem& sys,
                                    double tol = kDefaultTol);

/// All closed-form checks plus the matrix-only ones, for the CLI and the
/// bindings.
std::vector<PropertyReport> analyze_properties(const WcoSystem& sys,
                                               double tol = kDefaultTol);

}  // namespace wco
