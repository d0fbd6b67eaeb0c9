#include <doctest.h>

#include <stdexcept>

#include "dompoly/fixtures.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/splitting.hpp"
#include "dompoly/verify.hpp"

using namespace dompoly;
using namespace dompoly::splitting;

namespace {

const Evaluator kOracle = verify::oracle_evaluator();
const Polynomial kX = Polynomial::x();
const Polynomial kOnePlusX{1, 1};

}  // namespace

TEST_CASE("pair states enumerate the smallest vertex as fastest digit") {
  const auto single = pair_states(0b1);
  REQUIRE(single.size() == 3);
  CHECK(single[0] == PairState{0, 0b1});
  CHECK(single[1] == PairState{0, 0});
  CHECK(single[2] == PairState{0b1, 0b1});

  const auto both = pair_states(0b11);
  REQUIRE(both.size() == 9);
  CHECK(both[0] == PairState{0b00, 0b11});
  CHECK(both[1] == PairState{0b00, 0b10});
  CHECK(both[2] == PairState{0b01, 0b11});
  CHECK(both[3] == PairState{0b00, 0b01});
  CHECK(both[4] == PairState{0b00, 0b00});
  CHECK(both[5] == PairState{0b01, 0b01});
  CHECK(both[6] == PairState{0b10, 0b11});
  CHECK(both[7] == PairState{0b10, 0b10});
  CHECK(both[8] == PairState{0b11, 0b11});
}

TEST_CASE("the seed matrices take their published closed forms") {
  CHECK(p_singleton() == PolyMatrix(3, 3, {Polynomial(1), 0, 0, 0, Polynomial(1), Polynomial(1),
                                           kX, 0, kOnePlusX}));
  CHECK(q_singleton() == PolyMatrix(3, 3, {1, 1, 0, 1, 0, 0, 0, 0, Polynomial{0, 1}}));
  const PolyMatrix d = d_singleton();
  CHECK(d == p_singleton() * q_singleton() * p_singleton().transpose());
  // Entries follow the path pattern on max(i + j - 1, 0) vertices.
  CHECK(d.at(0, 0) == Polynomial(1));
  CHECK(d.at(0, 2) == kX);
  CHECK(d.at(1, 2) == Polynomial{0, 2, 1});
  CHECK(d.at(2, 2) == Polynomial{0, 1, 3, 1});
}

TEST_CASE("interface matrices are kronecker squares over two shared vertices") {
  const PolyMatrix q2 = q_matrix(0b11);
  REQUIRE(q2.rows() == 9);
  CHECK(q2 == kronecker(q_singleton(), q_singleton()));
  CHECK(d_matrix(0b11) == kronecker(d_singleton(), d_singleton()));
  CHECK(p_matrix(0b1) == p_singleton());
  CHECK(d_matrix(0) == PolyMatrix::identity(1));

  // The closed form of a gluing entry matches the materialized matrix.
  const auto states = pair_states(0b11);
  for (size_t r = 0; r < states.size(); ++r) {
    for (size_t c = 0; c < states.size(); ++c) {
      CHECK(q2.at(r, c) == q_entry(0b11, states[r], states[c]));
    }
  }
}

TEST_CASE("the inverse matrices invert exactly") {
  const RationalMatrix identity1 = to_rational(PolyMatrix::identity(3));
  CHECK(to_rational(d_singleton()) * d_matrix_inverse(0b1) == identity1);
  const RationalMatrix identity2 = to_rational(PolyMatrix::identity(9));
  CHECK(to_rational(d_matrix(0b11)) * d_matrix_inverse(0b11) == identity2);
  CHECK(to_rational(p_matrix(0b1) * q_matrix(0b1)) * pq_matrix_inverse(0b1) == identity1);
}

TEST_CASE("stored fixture matrices regenerate from the seeds") {
  const PolyMatrix state = fixtures::generate_state_matrix();
  REQUIRE(state.rows() == 9);
  CHECK(state.at(0, 0) == Polynomial(1));
  CHECK(state.at(8, 8) == Polynomial{0, 1, 3, 1} * Polynomial{0, 1, 3, 1});
  const PolyMatrix scaled = fixtures::generate_scaled_inverse();
  CHECK(scaled.at(8, 8) == Polynomial{1, -2, 1});             // (x-1)^2
  CHECK(scaled.at(0, 0) == Polynomial{0, 0, 3, 1} * Polynomial{0, 0, 3, 1});
  // The scaled inverse really is x^2 (1+x)^4 times the inverse.
  const Polynomial scale = Polynomial{0, 0, 1} * kOnePlusX.pow(4);
  PolyMatrix product(9, 9);
  const PolyMatrix d2 = d_matrix(0b11);
  for (size_t r = 0; r < 9; ++r) {
    for (size_t c = 0; c < 9; ++c) {
      Polynomial sum;
      for (size_t k = 0; k < 9; ++k) sum += scaled.at(r, k) * d2.at(k, c);
      product.at(r, c) = sum;
    }
  }
  for (size_t r = 0; r < 9; ++r) {
    for (size_t c = 0; c < 9; ++c) {
      CHECK(product.at(r, c) == (r == c ? scale : Polynomial()));
    }
  }
}

TEST_CASE("single vertex state vectors match their definitions") {
  CHECK(u_vector(Graph::complete(1), 0, kOracle) ==
        std::array<Polynomial, 3>{Polynomial(), Polynomial(1), Polynomial(1)});
  CHECK(u_vector(Graph::complete(2), 0, kOracle) ==
        std::array<Polynomial, 3>{kX, Polynomial(), kOnePlusX});
  CHECK(d_vector(Graph::complete(2), 0, kOracle) ==
        std::array<Polynomial, 3>{kX, Polynomial{0, 2, 1}, Polynomial{0, 1, 3, 1}});

  // The decorated vector is P*Q applied to the state vector.
  const PolyMatrix pq = p_singleton() * q_singleton();
  for (const Graph& g : verify::all_labeled_graphs(3)) {
    vs_for_each(g.vertices(), [&](Vertex v) {
      const auto u = u_vector(g, v, kOracle);
      const auto d = d_vector(g, v, kOracle);
      const std::vector<Polynomial> mapped = pq * std::vector<Polynomial>{u[0], u[1], u[2]};
      CHECK(mapped == std::vector<Polynomial>{d[0], d[1], d[2]});
    });
  }
}

TEST_CASE("decorated graphs attach pendants then delete dominated vertices") {
  const Graph k2 = Graph::complete(2);
  // State: 0 in the set, 1 dominated from outside.
  const Graph dec = decorated_graph(k2, PairState{0b01, 0b11});
  CHECK(dec.order() == 2);
  CHECK(dec.has_edge(0, 2));       // pendant took id 2
  CHECK_FALSE(dec.has_vertex(1));  // dominated vertex removed

  const std::vector<Polynomial> d2 = d_vector_general(k2, 0b11, kOracle);
  const std::vector<Polynomial> expected = {
      Polynomial(1),        kX, Polynomial{0, 2, 1},    kX,       Polynomial{0, 2, 1},
      Polynomial{0, 1, 3, 1}, Polynomial{0, 2, 1}, Polynomial{0, 1, 3, 1},
      Polynomial{0, 0, 4, 4, 1}};
  CHECK(d2 == expected);
}

TEST_CASE("state vectors agree between enumeration and the linear relation") {
  for (const Graph& g : verify::all_labeled_graphs(3)) {
    const std::vector<VertexSet> interfaces = {0b001, 0b010, 0b011, 0b101};
    for (VertexSet x : interfaces) {
      const auto direct = state_vector_oracle(g, x);
      const auto solved = state_vector(g, x, kOracle);
      CHECK(direct == solved);
      // The decorated vector is the interface matrix applied to the states.
      const auto decorated = d_vector_general(g, x, kOracle);
      CHECK(decorated == (p_matrix(x) * q_matrix(x)) * direct);
    }
  }
}

TEST_CASE("splitting construction validates separators and sides") {
  const Graph p4 = Graph::path(4);
  const Splitting sp = split_at(p4, 0b0010);
  CHECK(sp.shared == 0b0010);
  CHECK(sp.part1.vertices() == 0b0011);
  CHECK(sp.part2.vertices() == 0b1110);
  CHECK(sp.merged() == p4);

  CHECK_THROWS_AS(split_at(p4, 0b0001), std::invalid_argument);  // does not disconnect
  CHECK_THROWS_AS(make_splitting(p4, 0b0010, 0b1000), std::invalid_argument);  // crossing edge
  CHECK_THROWS_AS(make_splitting(p4, 0b0010, 0b0110), std::invalid_argument);  // overlaps shared
}

TEST_CASE("separator edges go to exactly one side") {
  // Two triangles sharing the edge {0, 1}.
  const Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const Splitting first = make_splitting(diamond, 0b0011, 0b0100, true);
  CHECK(first.part1.has_edge(0, 1));
  CHECK_FALSE(first.part2.has_edge(0, 1));
  CHECK(first.merged() == diamond);
  const Splitting second = make_splitting(diamond, 0b0011, 0b0100, false);
  CHECK_FALSE(second.part1.has_edge(0, 1));
  CHECK(second.part2.has_edge(0, 1));
  CHECK(second.merged() == diamond);

  const Polynomial expected = oracle::brute_force(diamond);
  for (const Splitting& sp : {first, second}) {
    CHECK(general_split(sp, kOracle, SplitFormula::kStateQ) == expected);
    CHECK(general_split(sp, kOracle, SplitFormula::kDecoratedInverse) == expected);
  }
}

TEST_CASE("cut vertex gluing reproduces enumeration three ways") {
  const Graph bowtie = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const Polynomial expected = oracle::brute_force(bowtie);
  const Splitting sp = split_at(bowtie, 0b00100);
  CHECK(articulation_split(sp, kOracle) == expected);
  CHECK(articulation_split_dvec(sp, kOracle) == expected);
  CHECK(one_connection_reduction(sp, kOracle) == expected);

  const Graph p5 = Graph::path(5);
  const Splitting mid = split_at(p5, 0b00100);
  CHECK(articulation_split(mid, kOracle) == Polynomial{0, 0, 3, 8, 5, 1});
  CHECK(articulation_split_dvec(mid, kOracle) == Polynomial{0, 0, 3, 8, 5, 1});
  CHECK(one_connection_reduction(mid, kOracle) == Polynomial{0, 0, 3, 8, 5, 1});
}

TEST_CASE("two vertex separators glue through both formulas") {
  const Graph c5 = Graph::cycle(5);
  const Polynomial expected = oracle::brute_force(c5);
  const Splitting sp = split_at(c5, 0b00101);  // vertices 0 and 2
  CHECK(general_split(sp, kOracle, SplitFormula::kStateQ) == expected);
  CHECK(general_split(sp, kOracle, SplitFormula::kDecoratedInverse) == expected);
}

TEST_CASE("the nine term edge identity holds on small graphs") {
  for (const Graph& g : verify::all_labeled_graphs(4)) {
    const Polynomial d = oracle::brute_force(g);
    for (const auto& [u, v] : g.edges()) {
      CHECK(edge_split(g, u, v, kOracle) == d);
    }
  }
  CHECK_THROWS_AS(edge_split(Graph::path(3), 0, 2, kOracle), std::invalid_argument);
}

TEST_CASE("the edge gluing weights have the expected entries") {
  const std::vector<RationalFunction> weights = edge_gluing_weights(kOracle);
  REQUIRE(weights.size() == 9);
  const Polynomial denom = kOnePlusX * kOnePlusX;
  const std::vector<Polynomial> numerators = {
      Polynomial{0, -2},    kX * kOnePlusX, Polynomial{1, -1}, kX * kOnePlusX,
      denom,                -kOnePlusX,     Polynomial{1, -1}, -kOnePlusX,
      Polynomial(2)};
  for (size_t i = 0; i < 9; ++i) {
    CHECK(weights[i] == RationalFunction(numerators[i], denom));
  }
}
