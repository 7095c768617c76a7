#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "tstar/superlie.hpp"

using namespace tstar;
using tstar::testing::q;

namespace {

LieSuperalgebra h3() { return stock("heisenberg3").algebra; }

/// Homogeneous random element: a random combination of basis vectors of one
/// parity.
VectorQ random_homogeneous(Rng& rng, const GradedBasis& b, Parity p) {
  VectorQ v = VectorQ::Zero(b.dim());
  for (int i : b.indices(p)) v(i) = random_rational(rng);
  return v;
}

}  // namespace

TEST_CASE("heisenberg bracket and skew symmetry") {
  const auto g = h3();
  CHECK(g.bracket_basis(0, 1) == unit_vector(3, 2));
  CHECK(g.bracket_basis(1, 0) == -unit_vector(3, 2));
  CHECK(g.bracket_basis(0, 2) == VectorQ::Zero(3));
}

TEST_CASE("construction rejects grading and skew violations") {
  const GradedBasis b({"x", "a"}, {Parity::Even, Parity::Odd});
  Tensor3Q c(2);
  c(0, 1, 0) = 1;  // [even, odd] landing in the even part
  c(1, 0, 0) = -1;
  CHECK_THROWS_AS(LieSuperalgebra(b, c), PreconditionError);

  Tensor3Q s(2);
  s(1, 1, 0) = 1;  // [a, a] = x is allowed for odd a
  CHECK_NOTHROW(LieSuperalgebra(b, s));
  Tensor3Q bad(2);
  bad(0, 1, 1) = 1;  // [x, a] = a without [a, x] = -a
  CHECK_THROWS_AS(LieSuperalgebra(b, bad), PreconditionError);
}

TEST_CASE("from_upper completes the lower triangle") {
  const GradedBasis b({"x", "y", "z"}, {Parity::Even, Parity::Even, Parity::Even});
  Tensor3Q up(3);
  up(0, 1, 2) = 1;
  CHECK(LieSuperalgebra::from_upper(b, up) == h3());
}

TEST_CASE("check_axioms reports a Jacobi witness") {
  // [x,y] = y, [x,z] = y, [y,z] = x fails Jacobi.
  const GradedBasis b({"x", "y", "z"}, {Parity::Even, Parity::Even, Parity::Even});
  Tensor3Q up(3);
  up(0, 1, 1) = 1;
  up(0, 2, 1) = 1;
  up(1, 2, 0) = 1;
  const auto g = LieSuperalgebra::from_upper(b, up);
  const auto r = check_axioms(g);
  CHECK_FALSE(r.ok());
  CHECK(r.ok(AxiomKind::Grading));
  REQUIRE(r.first(AxiomKind::Jacobi));
  CHECK(r.first(AxiomKind::Jacobi)->indices.size() == 3);
  CHECK_FALSE(testing::jacobi_by_adjoint(g));
}

TEST_CASE("gallery algebras satisfy the axioms under both oracles") {
  for (const auto& [name, g] : testing::gallery()) {
    INFO(name);
    CHECK(check_axioms(g).ok());
    CHECK(testing::jacobi_by_adjoint(g));
  }
  for (int n = 1; n <= 2; ++n) CHECK(check_axioms(build_glnn(n)).ok());
  for (int n = 1; n <= 3; ++n) CHECK(check_axioms(build_gn(n)).ok());
}

TEST_CASE("center, series and nilpotency") {
  const auto g = h3();
  const Subspace z = center(g);
  CHECK(z.dim() == 1);
  CHECK(z.contains(VectorQ(unit_vector(3, 2))));
  CHECK(is_nilpotent(g));
  CHECK(lower_central_series(g).back().is_zero());

  const auto s = stock("solvable2d").algebra;
  CHECK(is_solvable(s));
  CHECK_FALSE(is_nilpotent(s));

  const auto gl11 = build_glnn(1);
  CHECK_FALSE(is_nilpotent(gl11));
  const auto lcs = lower_central_series(gl11);
  CHECK_FALSE(lcs.back().is_zero());
  CHECK(lcs.back() == lcs[lcs.size() - 2]);
}

TEST_CASE("coadjoint action on heisenberg by hand") {
  const auto g = h3();
  // (pi(x) z*)(Y) = -z*([x, Y]) = -1 exactly for Y = y.
  DualVector zstar{unit_vector(3, 2), Parity::Even};
  const DualVector out = coadjoint(g, unit_vector(3, 0), zstar);
  CHECK(out.coeffs == -unit_vector(3, 1));
  CHECK(coadjoint_matrix(g, 0).col(2) == -unit_vector(3, 1));
}

TEST_CASE("coadjoint action is a representation") {
  Rng rng(3);
  for (const auto& [name, g] : testing::gallery()) {
    INFO(name);
    const auto& b = g.basis();
    for (int t = 0; t < 12; ++t) {
      const Parity px = static_cast<Parity>(uniform_int(rng, 0, 1));
      const Parity py = static_cast<Parity>(uniform_int(rng, 0, 1));
      const Parity pf = static_cast<Parity>(uniform_int(rng, 0, 1));
      const VectorQ x = random_homogeneous(rng, b, px);
      const VectorQ y = random_homogeneous(rng, b, py);
      const DualVector f{random_homogeneous(rng, b, pf), pf};
      const VectorQ xy = bracket(g, x, y);
      const DualVector lhs = coadjoint(g, xy, f);
      const DualVector yf = coadjoint(g, y, f);
      const DualVector xf = coadjoint(g, x, f);
      const VectorQ rhs = coadjoint(g, x, DualVector{yf.coeffs, py + pf}).coeffs -
                          Rational(koszul(px, py)) * coadjoint(g, y, DualVector{xf.coeffs, px + pf}).coeffs;
      CHECK(lhs.coeffs == rhs);
    }
  }
}

TEST_CASE("quotient of heisenberg by its center is abelian") {
  const auto g = h3();
  const Quotient qt = quotient(g, center(g));
  CHECK(qt.algebra.dim() == 2);
  CHECK(qt.algebra.constants().is_zero());
  CHECK(qt.projection * qt.section == MatrixQ::Identity(2, 2));
  CHECK_THROWS_AS(quotient(g, Subspace::span(g.basis(), unit_vector(3, 0))), PreconditionError);
}

TEST_CASE("class condition and derived subalgebra of g(n)") {
  for (int n = 2; n <= 3; ++n) {
    const auto g = build_gn(n);
    const auto& b = g.basis();
    const Subspace g0 = Subspace::span(b, Subspace::whole(b).even_basis());
    const Subspace g1 = Subspace::span(b, Subspace::whole(b).odd_basis());
    CHECK(bracket_span(g, g1, g1) == g0);
    // [g0, g0] is strictly smaller than g0, so [g1, g1] is not inside it.
    CHECK(bracket_span(g, g0, g0).dim() < g0.dim());
    CHECK_FALSE(class_condition(g));
  }
  CHECK(class_condition(h3()));
  CHECK(class_condition(stock("abelian(0|2)").algebra));
}

TEST_CASE("even change of basis preserves the axioms and invariants") {
  Rng rng(8);
  for (const auto& [name, g] : testing::gallery()) {
    INFO(name);
    const MatrixQ p = testing::random_even_change(rng, g.basis());
    const auto h = testing::change_basis(g, p);
    CHECK(check_axioms(h).ok());
    CHECK(center(h).dim() == center(g).dim());
    CHECK(derived_subalgebra(h).dim() == derived_subalgebra(g).dim());
    CHECK(is_nilpotent(h) == is_nilpotent(g));
  }
}

TEST_CASE("direct sum keeps the summands apart") {
  const auto s = direct_sum(h3(), stock("abelian(0|1)").algebra);
  CHECK(s.dim() == 4);
  CHECK(check_axioms(s).ok());
  CHECK(center(s).dim() == 2);
}
