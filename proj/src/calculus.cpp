#include "dompoly/calculus.hpp"

#include <stdexcept>

namespace dompoly {
namespace calculus {

namespace {

const Polynomial kOnePlusX{1, 1};

BigInt factorial(int n) {
  BigInt f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Polynomial derivative_order(Polynomial p, int order) {
  for (int i = 0; i < order; ++i) p = p.derivative();
  return p;
}

}  // namespace

Polynomial deletion_contraction_sum(const Graph& g, const Evaluator& ev) {
  Polynomial sum;
  vs_for_each(g.vertices(), [&](Vertex v) {
    sum += ev.dom(g.remove_vertex(v)) - ev.dom(g.contract_vertex(v)) -
           ev.dom(g.remove_closed_neighborhood(v));
  });
  return sum;
}

bool check_derivative_identity(const Graph& g, int i, const Evaluator& ev) {
  if (i < 0) throw std::invalid_argument("check_derivative_identity: order must be >= 0");
  const Polynomial d = ev.dom(g);
  const Polynomial a = deletion_contraction_sum(g, ev);
  const Polynomial lhs = Polynomial(g.order() - i) * derivative_order(d, i);
  const Polynomial rhs = kOnePlusX * derivative_order(d, i + 1) + derivative_order(a, i);
  return lhs == rhs;
}

Polynomial reconstruct_from_sum(const Graph& g, const Evaluator& ev) {
  const int n = g.order();
  if (n == 0) return Polynomial(1);
  const Polynomial a = deletion_contraction_sum(g, ev);
  // Accumulate n! * D(G) = n! * (1+x)^n + sum (n-i-1)! * (1+x)^i * A^(i),
  // then divide by n! exactly.
  Polynomial scaled = Polynomial(factorial(n)) * kOnePlusX.pow(static_cast<unsigned>(n));
  Polynomial a_derivative = a;
  for (int i = 0; i < n; ++i) {
    scaled += Polynomial(factorial(n - i - 1)) * kOnePlusX.pow(static_cast<unsigned>(i)) *
              a_derivative;
    a_derivative = a_derivative.derivative();
  }
  return divide_exact(scaled, factorial(n));
}

}  // namespace calculus
}  // namespace dompoly
