#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "tstar/gallery.hpp"

using namespace tstar;

namespace {

struct Unit {
  int row, col;
  bool odd;
};

/// Position of each gl(n,n) basis vector in the 2n x 2n matrix: blocks A, D,
/// B, C in that order, each row-major.
std::vector<Unit> glnn_units(int n) {
  std::vector<Unit> out;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.push_back({r, c, false});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.push_back({n + r, n + c, false});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.push_back({r, n + c, true});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.push_back({n + r, c, true});
  return out;
}

/// Position read off a g(n) name such as a12, b22, c13.
Unit gn_unit(const std::string& name, int n) {
  const int i = name[1] - '1', j = name[2] - '1';
  switch (name[0]) {
    case 'a': return {i, j, false};
    case 'd': return {n + i, n + j, false};
    case 'b': return {i, n + j, true};
    default: return {n + i, j, true};
  }
}

MatrixQ unit_matrix(int n, const Unit& u) {
  MatrixQ m = MatrixQ::Zero(2 * n, 2 * n);
  m(u.row, u.col) = 1;
  return m;
}

/// Checks every bracket of g against the matrix supercommutator, reading
/// coordinates off the matrix entries.
void check_against_matrices(const LieSuperalgebra& g, int n, const std::vector<Unit>& units) {
  const int d = g.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const MatrixQ x = unit_matrix(n, units[static_cast<std::size_t>(i)]);
      const MatrixQ y = unit_matrix(n, units[static_cast<std::size_t>(j)]);
      const int s = units[static_cast<std::size_t>(i)].odd && units[static_cast<std::size_t>(j)].odd ? -1 : 1;
      MatrixQ comm = x * y - Rational(s) * y * x;
      const VectorQ br = g.bracket_basis(i, j);
      for (int k = 0; k < d; ++k) {
        const Unit& u = units[static_cast<std::size_t>(k)];
        CHECK(br(k) == comm(u.row, u.col));
        comm(u.row, u.col) = 0;
      }
      CHECK(comm.isZero());  // closure
    }
}

}  // namespace

TEST_CASE("gl(1,1) brackets") {
  const auto g = build_glnn(1);
  REQUIRE(g.dim() == 4);
  CHECK(g.basis().even_dim() == 2);
  // E11, E22, E12, E21.
  CHECK(g.bracket_basis(0, 2) == unit_vector(4, 2));
  const VectorQ e11_plus_e22 = unit_vector(4, 0) + unit_vector(4, 1);
  CHECK(g.bracket_basis(2, 3) == e11_plus_e22);
  CHECK(g.bracket_basis(3, 2) == e11_plus_e22);
  CHECK(check_axioms(g).ok());
}

TEST_CASE("gl(n,n) matches matrix supercommutators") {
  for (int n = 1; n <= 2; ++n) {
    INFO(n);
    const auto g = build_glnn(n);
    CHECK(g.dim() == 4 * n * n);
    check_against_matrices(g, n, glnn_units(n));
  }
}

TEST_CASE("g(n) dimensions by counting matrix positions") {
  for (int n = 1; n <= 3; ++n) {
    INFO(n);
    int even = 0, odd = 0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (r < c) even += 2, odd += 1;  // A, D, C strictly upper
        if (r <= c) odd += 1;            // B upper
      }
    const auto g = build_gn(n);
    CHECK(g.dim() == n * (2 * n - 1));
    CHECK(g.basis().even_dim() == even);
    CHECK(g.basis().odd_dim() == odd);
    CHECK(even == n * (n - 1));
    CHECK(odd == n * n);
  }
}

TEST_CASE("g(n) matches matrix supercommutators") {
  for (int n = 1; n <= 3; ++n) {
    INFO(n);
    const auto g = build_gn(n);
    std::vector<Unit> units;
    for (const auto& name : g.basis().names()) units.push_back(gn_unit(name, n));
    for (std::size_t k = 0; k < units.size(); ++k)
      CHECK(units[k].odd == (g.parity(static_cast<int>(k)) == Parity::Odd));
    check_against_matrices(g, n, units);
  }
}

TEST_CASE("block elements of g(n)") {
  Rng rng(5);
  const int n = 3;
  const auto g = build_gn(n);
  for (int t = 0; t < 20; ++t) {
    const VectorQ v = random_vector(rng, g.dim());
    BlockMatrixElement m{MatrixQ::Zero(n, n), MatrixQ::Zero(n, n), MatrixQ::Zero(n, n), MatrixQ::Zero(n, n)};
    for (int k = 0; k < g.dim(); ++k) {
      const Unit u = gn_unit(g.basis().name(k), n);
      MatrixQ& blk = u.row < n ? (u.col < n ? m.a : m.b) : (u.col < n ? m.c : m.d);
      blk(u.row % n, u.col % n) = v(k);
    }
    CHECK(m.in_gn());
    CHECK(m.full().rows() == 2 * n);
    BlockMatrixElement even = m;
    even.b.setZero();
    even.c.setZero();
    if (!even.a.isZero() || !even.d.isZero()) CHECK(even.parity() == Parity::Even);
    BlockMatrixElement low = m;
    low.c(2, 0) = 1;  // below the diagonal
    CHECK_FALSE(low.in_gn());
    BlockMatrixElement diag_a = m;
    diag_a.a(1, 1) = 1;
    CHECK_FALSE(diag_a.in_gn());
  }
  BlockMatrixElement odd{MatrixQ::Zero(n, n), MatrixQ::Identity(n, n), MatrixQ::Zero(n, n), MatrixQ::Zero(n, n)};
  CHECK(odd.parity() == Parity::Odd);
  CHECK(odd.in_gn());
  BlockMatrixElement mixed = odd;
  mixed.a(0, 1) = 1;
  CHECK_FALSE(mixed.parity());
}

TEST_CASE("g(n) is nilpotent with a one-dimensional odd center") {
  for (int n = 1; n <= 3; ++n) {
    INFO(n);
    const auto g = build_gn(n);
    CHECK(check_axioms(g).ok());
    CHECK(is_nilpotent(g));
    const Subspace z = center(g);
    CHECK(z.dim() == 1);
    CHECK(z.dim(Parity::Even) == 0);
    CHECK(in_class_C(g));
  }
}

TEST_CASE("class C example") {
  const auto q = build_class_C_example(2);
  CHECK(q.dim() == 12);
  CHECK(is_nilpotent(q.algebra()));
  CHECK(in_class_C(q.algebra()));
  CHECK(testing::invariant_by_matrices(q.algebra(), q.form().gram()));
}

TEST_CASE("stock catalog") {
  CHECK(in_class_C(stock("abelian(0|2)").algebra));
  CHECK_FALSE(in_class_C(stock("abelian(1|2)").algebra));
  const auto h = stock("heisenberg3").algebra;
  CHECK(is_nilpotent(h));
  CHECK(center(h).dim() == 1);
  const auto s = stock("solvable2d").algebra;
  CHECK(is_solvable(s));
  CHECK_FALSE(is_nilpotent(s));
  CHECK_THROWS_AS(stock("no-such-algebra"), std::invalid_argument);
  for (const auto& name : stock_names()) {
    INFO(name);
    if (name == "abelian(P|Q)") continue;  // a family, not an entry
    const auto st = stock(name);
    CHECK(check_axioms(st.algebra).ok());
    CHECK(testing::jacobi_by_adjoint(st.algebra));
    if (st.form) CHECK(testing::invariant_by_matrices(st.algebra, st.form->gram()));
  }
  const auto vol = hat(h, heisenberg_volume_cocycle(h));
  CHECK(vol.f(0, 1, 2) == 1);
}
