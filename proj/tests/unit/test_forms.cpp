#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "tstar/forms.hpp"
#include "tstar/tstar_ext.hpp"

using namespace tstar;
using tstar::testing::q;

TEST_CASE("EvenForm rejects odd or non-supersymmetric Gram matrices") {
  const GradedBasis b({"x", "a", "c"}, {Parity::Even, Parity::Odd, Parity::Odd});
  MatrixQ cross = MatrixQ::Zero(3, 3);
  cross(0, 1) = cross(1, 0) = 1;
  CHECK_THROWS_AS(EvenForm(b, cross), PreconditionError);

  MatrixQ sym = MatrixQ::Zero(3, 3);
  sym(1, 2) = sym(2, 1) = 1;  // odd block must be antisymmetric
  CHECK_THROWS_AS(EvenForm(b, sym), PreconditionError);

  MatrixQ ok = MatrixQ::Zero(3, 3);
  ok(0, 0) = 1;
  ok(1, 2) = 1;
  ok(2, 1) = -1;
  CHECK_NOTHROW(EvenForm(b, ok));
  CHECK(is_nondegenerate(EvenForm(b, ok)));
}

TEST_CASE("canonical pairing is invariant on semidirect products") {
  for (const auto& [name, g] : testing::gallery()) {
    INFO(name);
    const auto a = tstar_algebra(g, zero_cochain2(g.dim()));
    const EvenForm pairing = canonical_pairing(g.basis());
    CHECK(is_invariant(a, pairing));
    CHECK(testing::invariant_by_matrices(a, pairing.gram()));
    CHECK_FALSE(osp_witness(a, pairing));
    // A signed permutation: one nonzero per row and column, all +-1.
    for (int i = 0; i < pairing.dim(); ++i) {
      int nonzero = 0;
      for (int j = 0; j < pairing.dim(); ++j)
        if (!is_zero(pairing.gram()(i, j))) {
          ++nonzero;
          CHECK(abs(pairing.gram()(i, j)) == 1);
        }
      CHECK(nonzero == 1);
    }
  }
}

TEST_CASE("identity Gram on heisenberg is not invariant") {
  const auto g = stock("heisenberg3").algebra;
  const EvenForm id(g.basis(), MatrixQ::Identity(3, 3));
  CHECK_FALSE(is_invariant(g, id));
  CHECK_FALSE(testing::invariant_by_matrices(g, id.gram()));
  const auto w = invariance_witness(g, id);
  REQUIRE(w);
  CHECK(osp_witness(g, id));
  CHECK_THROWS_AS(QuadraticLieSuperalgebra(g, id), PreconditionError);
}

TEST_CASE("stock quadratic entries carry invariant forms") {
  for (const std::string name : {"oscillator", "hyperbolic-even", "hyperbolic-odd", "euclidean-plane", "line",
                                 "heisenberg3-tstar", "heisenberg3-tstar-plus-line"}) {
    INFO(name);
    const auto s = stock(name);
    REQUIRE(s.form);
    CHECK(testing::invariant_by_matrices(s.algebra, s.form->gram()));
    CHECK_NOTHROW(s.quadratic());
  }
}

TEST_CASE("orthogonal of the derived algebra is the center") {
  std::vector<QuadraticLieSuperalgebra> cases;
  for (const std::string name : {"oscillator", "hyperbolic-odd", "heisenberg3-tstar", "heisenberg3-tstar-plus-line"})
    cases.push_back(stock(name).quadratic());
  for (const auto& [name, g] : testing::gallery()) cases.push_back(build(g, zero_cochain2(g.dim())).total);
  cases.push_back(build_class_C_example(2));
  for (const auto& qa : cases) {
    CHECK(orthogonal(qa.form(), derived_subalgebra(qa.algebra())) == center(qa.algebra()));
  }
}

TEST_CASE("orthogonal and isotropy on the hyperbolic plane") {
  const auto s = stock("hyperbolic-even");
  const EvenForm& b = *s.form;
  const Subspace u = Subspace::span(b.basis(), unit_vector(2, 0));
  CHECK(is_totally_isotropic(b, u));
  CHECK(orthogonal(b, u) == u);
  CHECK(orthogonal(b, Subspace::zero(b.basis())).dim() == 2);
}

TEST_CASE("isotropic complement solves B(h(v), v) = B(v, v) / 2") {
  const GradedBasis basis({"u", "v"}, {Parity::Even, Parity::Even});
  MatrixQ gram(2, 2);
  gram << 0, 1, 1, 2;
  const EvenForm b(basis, gram);
  const Subspace i = Subspace::span(basis, unit_vector(2, 0));
  const MatrixQ c = isotropic_complement(b, i);
  REQUIRE(c.cols() == 1);
  CHECK(c(0, 0) == -1);
  CHECK(c(1, 0) == 1);
}

TEST_CASE("isotropic complement of a tilted Lagrangian") {
  Rng rng(21);
  for (const auto& [name, g] : testing::gallery()) {
    INFO(name);
    const auto ext = build(g, zero_cochain2(g.dim()));
    const EvenForm& b = ext.total.form();
    // Graph {X + phi(X, .)} of a random super-antisymmetric phi.
    const ScalarCochain2 phi = random_scalar2(rng, g.basis());
    const MatrixQ s = s_phi_matrix(g, phi);
    const Subspace i = Subspace::span(b.basis(), MatrixQ(s * ext.base_embedding));
    CHECK(is_totally_isotropic(b, i));
    CHECK(orthogonal(b, i) == i);
    const MatrixQ c = isotropic_complement(b, i);
    CHECK(c.cols() == g.dim());
    CHECK(linalg::is_zero_matrix(MatrixQ(c.transpose() * b.gram() * c)));
    MatrixQ joined(2 * g.dim(), 2 * g.dim());
    joined << i.basis(), c;
    CHECK(linalg::rank(joined) == 2 * g.dim());
  }
}
