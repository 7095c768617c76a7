#ifndef TSTAR_GALLERY_HPP
#define TSTAR_GALLERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tstar/forms.hpp"
#include "tstar/tstar_ext.hpp"

namespace tstar {

/// Element of gl(n,n) in block form (A B; C D).
struct BlockMatrixElement {
  MatrixQ a, b, c, d;

  MatrixQ full() const;
  /// Even iff B = C = 0, odd iff A = D = 0; empty for inhomogeneous elements.
  std::optional<Parity> parity() const;
  /// A, C, D strictly upper triangular and B upper triangular.
  bool in_gn() const;
};

/// gl(n,n) on matrix units E_ab (1-based), with bracket
/// [M, N] = MN - (-1)^{mn} NM. Basis order: A block, D block (even), then B
/// block, C block (odd), each row-major. Names are `E<a><b>`, or `E<a>_<b>`
/// once 2n > 9.
LieSuperalgebra build_glnn(int n);

/// g(n) inside gl(n,n): A, C, D strictly upper triangular, B upper
/// triangular. Basis order A, D, B, C, row-major, named a<i><j>, d<i><j>,
/// b<i><j>, c<i><j> (with `_` between indices once n > 9).
/// dim = n(2n-1), even part n(n-1), odd part n^2.
LieSuperalgebra build_gn(int n);

/// T*_0 g(n), checked to be nilpotent with a nonzero, purely odd center.
QuadraticLieSuperalgebra build_class_C_example(int n);

/// True iff the center is nonzero and contained in the odd part.
bool in_class_C(const LieSuperalgebra& g);

struct StockAlgebra {
  LieSuperalgebra algebra;
  std::optional<EvenForm> form;  // set for the quadratic entries

  QuadraticLieSuperalgebra quadratic() const;
};

/// Catalog entries (docs/catalog.md lists the structure constants):
///   abelian(P|Q), heisenberg3, solvable2d, oscillator, hyperbolic-even,
///   hyperbolic-odd, euclidean-plane, line, heisenberg3-tstar,
///   heisenberg3-tstar-plus-line.
/// Throws std::invalid_argument for unknown names.
StockAlgebra stock(const std::string& name);
std::vector<std::string> stock_names();

/// The 2-cocycle of heisenberg3 whose hat is the volume form x* ^ y* ^ z*.
Cochain2Dual heisenberg_volume_cocycle(const LieSuperalgebra& h3);

}  // namespace tstar

#endif  // TSTAR_GALLERY_HPP
