// Helpers shared by the unit tests and the acceptance runner. The oracles
// here are deliberately written differently from the library code they
// check (matrix identities instead of index sums).
#ifndef TSTAR_TESTS_SUPPORT_HPP
#define TSTAR_TESTS_SUPPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "tstar/cochains.hpp"
#include "tstar/forms.hpp"
#include "tstar/gallery.hpp"
#include "tstar/linalg.hpp"
#include "tstar/random.hpp"

namespace tstar::testing {

inline Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

/// Algebras the randomized suites run over.
inline std::vector<std::pair<std::string, LieSuperalgebra>> gallery() {
  return {
      {"abelian(3|0)", stock("abelian(3|0)").algebra},
      {"abelian(1|2)", stock("abelian(1|2)").algebra},
      {"abelian(0|2)", stock("abelian(0|2)").algebra},
      {"heisenberg3", stock("heisenberg3").algebra},
      {"solvable2d", stock("solvable2d").algebra},
      {"gl(1,1)", build_glnn(1)},
      {"g(2)", build_gn(2)},
  };
}

/// Jacobi via the adjoint representation:
/// ad[x,y] = ad x ad y - (-1)^{xy} ad y ad x on basis elements.
inline bool jacobi_by_adjoint(const LieSuperalgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatrixQ lhs = MatrixQ::Zero(n, n);
      for (int k = 0; k < n; ++k)
        if (!is_zero(g.c(i, j, k))) lhs += g.c(i, j, k) * g.ad(k);
      const MatrixQ rhs = g.ad(i) * g.ad(j) - Rational(koszul(g.parity(i), g.parity(j))) * g.ad(j) * g.ad(i);
      if (lhs != rhs) return false;
    }
  return true;
}

/// B([x,y],z) = B(x,[y,z]) as ad(x)^T G restricted to row y against G ad(y)
/// restricted to row x.
inline bool invariant_by_matrices(const LieSuperalgebra& g, const MatrixQ& gram) {
  const int n = g.dim();
  for (int x = 0; x < n; ++x) {
    const MatrixQ left = g.ad(x).transpose() * gram;  // (y, z) -> B([x,y], z)
    for (int y = 0; y < n; ++y) {
      const MatrixQ right = gram * g.ad(y);  // (x, z) -> B(x, [y,z])
      if (left.row(y) != right.row(x)) return false;
    }
  }
  return true;
}

/// T*_omega g assembled from the defining formula
/// [X+F, Y+H] = [X,Y] + omega(X,Y) + pi(X)H - (-1)^{xy} pi(Y)F
/// with pi computed by the vector-level coadjoint action.
inline VectorQ tstar_bracket_oracle(const LieSuperalgebra& g, const Cochain2Dual& omega, int a, int b) {
  const int n = g.dim();
  auto split = [&](int idx, VectorQ& x, DualVector& f) {
    x = VectorQ::Zero(n);
    f.coeffs = VectorQ::Zero(n);
    if (idx < n) {
      x(idx) = 1;
    } else {
      f.coeffs(idx - n) = 1;
      f.parity = g.parity(idx - n);
    }
  };
  VectorQ x, y;
  DualVector f, h;
  split(a, x, f);
  split(b, y, h);
  const Parity px = a < n ? g.parity(a) : g.parity(a - n);
  const Parity py = b < n ? g.parity(b) : g.parity(b - n);
  VectorQ out = VectorQ::Zero(2 * n);
  out.head(n) = bracket(g, x, y);
  if (a < n && b < n)
    for (int k = 0; k < n; ++k) out(n + k) = omega.w(a, b, k);
  if (a < n && b >= n) out.tail(n) += coadjoint(g, x, h).coeffs;
  if (b < n && a >= n) out.tail(n) -= Rational(koszul(px, py)) * coadjoint(g, y, f).coeffs;
  return out;
}

/// Even invertible change of basis: random block-diagonal (per parity)
/// matrix, retried until invertible. Columns are the new basis vectors.
inline MatrixQ random_even_change(Rng& rng, const GradedBasis& b) {
  const int n = b.dim();
  while (true) {
    MatrixQ m = MatrixQ::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.parity(i) == b.parity(j)) m(i, j) = random_rational(rng, 2) + (i == j ? 1 : 0);
    if (linalg::rank(m) == n) return m;
  }
}

/// Structure constants in the basis given by the columns of p.
inline LieSuperalgebra change_basis(const LieSuperalgebra& g, const MatrixQ& p) {
  const int n = g.dim();
  const MatrixQ inv = linalg::inverse(p);
  Tensor3Q c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const VectorQ v = inv * bracket(g, p.col(i), p.col(j));
      for (int k = 0; k < n; ++k) c(i, j, k) = v(k);
    }
  return LieSuperalgebra(g.basis(), std::move(c));
}

}  // namespace tstar::testing

#endif  // TSTAR_TESTS_SUPPORT_HPP
