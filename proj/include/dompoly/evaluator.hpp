// Dependency-injection point between the recurrence formulas and whatever
// engine evaluates their sub-instances.
//
// Every reduction formula rewrites a domination polynomial in terms of the
// polynomials of derived graphs.  The formulas themselves do not care who
// evaluates those sub-instances: unit tests plug in the brute-force oracle,
// the solver plugs in its own memoized recursion.
#pragma once

#include <functional>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

struct Evaluator {
  // Domination polynomial of a graph.
  std::function<Polynomial(const Graph&)> dom;
  // The "u left undominated" polynomial: sum of x^|W| over subsets W of
  // V - {u} avoiding N(u) and dominating all of V - {u}.
  std::function<Polynomial(const Graph&, Vertex)> p;
};

}  // namespace dompoly
