// Derivative structure of domination polynomials.
//
// Summing the vertex recurrence over all vertices relates D(G) to its
// derivative: with the correction sum
//
//   A(G) = sum over vertices v of [ D(G-v) - D(G/v) - D(G-N[v]) ]
//
// every derivative order i satisfies
//
//   (n - i) * D^(i)(G) = (1+x) * D^(i+1)(G) + A^(i)(G),      n = |V(G)|,
//
// and unwinding that chain recovers D(G) from A(G) alone:
//
//   D(G) = (1+x)^n + sum_{i=0}^{n-1} (1+x)^i * (n-i-1)!/n! * A^(i)(G).
//
// The reconstruction is evaluated entirely over the integers: the sum is
// accumulated with factorial weights n!/(n-i-1)!^{-1} cleared, asserted
// divisible by n!, then divided exactly.
#pragma once

#include "dompoly/evaluator.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {
namespace calculus {

// The correction sum A(G) above.
Polynomial deletion_contraction_sum(const Graph& g, const Evaluator& ev);

// Checks (n - i) * D^(i) == (1+x) * D^(i+1) + A^(i) for one derivative
// order i >= 0.
bool check_derivative_identity(const Graph& g, int i, const Evaluator& ev);

// Recovers D(G) from the correction sum; throws std::domain_error if the
// accumulated sum fails the exact divisibility the identity guarantees.
Polynomial reconstruct_from_sum(const Graph& g, const Evaluator& ev);

}  // namespace calculus
}  // namespace dompoly
