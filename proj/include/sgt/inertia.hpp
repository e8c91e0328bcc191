#pragma once

#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Counts of positive, negative and zero eigenvalues of an adjacency matrix.
struct InertiaTriple {
  int p_plus = 0;
  int n_minus = 0;
  int eta = 0;

  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

std::string to_string(const InertiaTriple& t);

inline constexpr double kDefaultZeroTolerance = 1e-8;

// Eigenvalues in non-increasing order plus the tolerance used to call a
// value zero when counting signs.
class Spectrum {
public:
  explicit Spectrum(std::vector<double> values, double zero_tolerance = kDefaultZeroTolerance);

  const std::vector<double>& values() const { return values_; }
  double zero_tolerance() const { return zero_tolerance_; }
  InertiaTriple sign_counts() const;

private:
  std::vector<double> values_;
  double zero_tolerance_;
};

// Exact inertia of the signed adjacency matrix via symmetric congruence
// elimination over rationals (Sylvester's law of inertia).
InertiaTriple exact_inertia(const SignedGraph& g);

// Floating-point eigenvalues via a cyclic Jacobi iteration. Independent of
// exact_inertia; used as a cross-check engine.
Spectrum float_spectrum(const SignedGraph& g);

// Eigenvalues of the signed n-cycle in closed form: 2cos(2*pi*j/n) for the
// balanced cycle, 2cos((2j-1)*pi/n) for the unbalanced one.
Spectrum cycle_spectrum_closed_form(int n, bool balanced);

// Inertia of the signed n-cycle computed by exact integer classification of
// the closed-form angles (no floating point).
InertiaTriple cycle_inertia(int n, bool balanced);

// Repeatedly removes a pendant vertex together with its neighbor. Each step
// adds exactly one positive and one negative eigenvalue, so
//   p_plus(g) = reductions + p_plus(residual), same for n_minus,
// while eta is unchanged.
struct PendantReduction {
  SignedGraph residual;
  int reductions = 0;
};
PendantReduction pendant_reduce(const SignedGraph& g);

// p_plus computed through pendant reduction followed by exact_inertia.
int positive_inertia(const SignedGraph& g);

}  // namespace sgt
