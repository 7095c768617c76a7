#include "tstar/gallery.hpp"

#include <map>
#include <regex>
#include <stdexcept>

#include "tstar/linalg.hpp"

namespace tstar {

namespace {

struct Unit {
  int row, col;  // 0-based in the 2n x 2n matrix
  std::string name;
};

Parity unit_parity(int n, int r, int c) { return (r < n) == (c < n) ? Parity::Even : Parity::Odd; }

// Sub-superalgebra of gl(n,n) spanned by matrix units; throws if the span
// is not closed under the superbracket.
LieSuperalgebra from_units(int n, const std::vector<Unit>& units) {
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (const Unit& u : units) {
    index[{u.row, u.col}] = static_cast<int>(names.size());
    names.push_back(u.name);
    parities.push_back(unit_parity(n, u.row, u.col));
  }
  const int dim = static_cast<int>(units.size());
  Tensor3Q c(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Unit& x = units[static_cast<std::size_t>(i)];
      const Unit& y = units[static_cast<std::size_t>(j)];
      std::map<std::pair<int, int>, Rational> out;
      // E_rc E_st = delta_cs E_rt
      if (x.col == y.row) out[{x.row, y.col}] += 1;
      if (y.col == x.row) out[{y.row, x.col}] -= koszul(parities[i], parities[j]);
      for (const auto& [pos, v] : out) {
        if (is_zero(v)) continue;
        const auto it = index.find(pos);
        if (it == index.end())
          throw VerificationError("matrix units are not closed under the superbracket at " + x.name + ", " + y.name);
        c(i, j, it->second) = v;
      }
    }
  return LieSuperalgebra(GradedBasis(std::move(names), std::move(parities)), std::move(c));
}

std::string unit_name(const std::string& prefix, int a, int b, bool separate) {
  return prefix + std::to_string(a) + (separate ? "_" : "") + std::to_string(b);
}

// Block entries (i, j), 0-based within an n x n block, in row-major order.
std::vector<std::pair<int, int>> block_entries(int n, bool strict) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = strict ? i + 1 : i; j < n; ++j) out.emplace_back(i, j);
  return out;
}

bool upper(const MatrixQ& m, bool strict) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if ((strict ? j <= i : j < i) && !is_zero(m(i, j))) return false;
  return true;
}

GradedBasis named(std::vector<std::string> names, std::vector<Parity> parities) {
  return GradedBasis(std::move(names), std::move(parities));
}

Tensor3Q constants(int n, std::initializer_list<std::tuple<int, int, int, int>> entries) {
  Tensor3Q t(n);
  for (const auto& [i, j, k, v] : entries) t(i, j, k) = v;
  return t;
}

}  // namespace

MatrixQ BlockMatrixElement::full() const {
  const Eigen::Index n = a.rows();
  MatrixQ m(2 * n, 2 * n);
  m << a, b, c, d;
  return m;
}

std::optional<Parity> BlockMatrixElement::parity() const {
  const bool even_zero = linalg::is_zero_matrix(a) && linalg::is_zero_matrix(d);
  const bool odd_zero = linalg::is_zero_matrix(b) && linalg::is_zero_matrix(c);
  if (odd_zero) return Parity::Even;
  if (even_zero) return Parity::Odd;
  return std::nullopt;
}

bool BlockMatrixElement::in_gn() const { return upper(a, true) && upper(c, true) && upper(d, true) && upper(b, false); }

LieSuperalgebra build_glnn(int n) {
  if (n < 1) throw std::invalid_argument("build_glnn: n must be at least 1");
  const bool sep = 2 * n > 9;
  std::vector<Unit> units;
  auto add_block = [&](int r0, int c0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        units.push_back({r0 + i, c0 + j, unit_name("E", r0 + i + 1, c0 + j + 1, sep)});
  };
  add_block(0, 0);  // A
  add_block(n, n);  // D
  add_block(0, n);  // B
  add_block(n, 0);  // C
  return from_units(n, units);
}

LieSuperalgebra build_gn(int n) {
  if (n < 1) throw std::invalid_argument("build_gn: n must be at least 1");
  const bool sep = n > 9;
  std::vector<Unit> units;
  auto add_block = [&](const std::string& prefix, int r0, int c0, bool strict) {
    for (const auto& [i, j] : block_entries(n, strict))
      units.push_back({r0 + i, c0 + j, unit_name(prefix, i + 1, j + 1, sep)});
  };
  add_block("a", 0, 0, true);
  add_block("d", n, n, true);
  add_block("b", 0, n, false);
  add_block("c", n, 0, true);
  return from_units(n, units);
}

bool in_class_C(const LieSuperalgebra& g) {
  const Subspace z = center(g);
  return !z.is_zero() && z.dim(Parity::Even) == 0;
}

QuadraticLieSuperalgebra build_class_C_example(int n) {
  const LieSuperalgebra g = build_gn(n);
  TStarExtension e = build(g, zero_cochain2(g.dim()));
  if (!is_nilpotent(e.total.algebra())) throw VerificationError("T*_0 g(n) is not nilpotent");
  if (!in_class_C(e.total.algebra())) throw VerificationError("T*_0 g(n) is not in class C");
  return e.total;
}

QuadraticLieSuperalgebra StockAlgebra::quadratic() const {
  if (!form) throw std::invalid_argument("stock algebra carries no invariant form");
  return QuadraticLieSuperalgebra(algebra, *form);
}

Cochain2Dual heisenberg_volume_cocycle(const LieSuperalgebra& h3) {
  ScalarCochain3 f = zero_cochain3(3);
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (int p = 0; p < 6; ++p) f.f(perms[p][0], perms[p][1], perms[p][2]) = p < 3 ? 1 : -1;
  return unhat(h3, f);
}

std::vector<std::string> stock_names() {
  return {"abelian(P|Q)",    "heisenberg3", "solvable2d", "oscillator", "hyperbolic-even", "hyperbolic-odd",
          "euclidean-plane", "line",        "heisenberg3-tstar", "heisenberg3-tstar-plus-line"};
}

StockAlgebra stock(const std::string& name) {
  using P = Parity;
  static const std::regex abelian_re(R"(abelian\((\d+)\|(\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, abelian_re)) {
    const int p = std::stoi(m[1]);
    const int q = std::stoi(m[2]);
    std::vector<Parity> par(static_cast<std::size_t>(p), P::Even);
    par.insert(par.end(), static_cast<std::size_t>(q), P::Odd);
    return {LieSuperalgebra::abelian(GradedBasis::anonymous(par)), std::nullopt};
  }
  if (name == "heisenberg3")
    return {LieSuperalgebra::from_upper(named({"x", "y", "z"}, {P::Even, P::Even, P::Even}),
                                        constants(3, {{0, 1, 2, 1}})),
            std::nullopt};
  if (name == "solvable2d")
    return {LieSuperalgebra::from_upper(named({"e1", "e2"}, {P::Even, P::Even}), constants(2, {{0, 1, 1, 1}})),
            std::nullopt};
  if (name == "oscillator") {
    GradedBasis b = named({"t", "p", "q", "z"}, {P::Even, P::Even, P::Even, P::Even});
    LieSuperalgebra g = LieSuperalgebra::from_upper(b, constants(4, {{0, 1, 1, 1}, {0, 2, 2, -1}, {1, 2, 3, 1}}));
    MatrixQ gram = MatrixQ::Zero(4, 4);
    gram(0, 3) = gram(3, 0) = gram(1, 2) = gram(2, 1) = 1;
    return {std::move(g), EvenForm(b, gram)};
  }
  if (name == "hyperbolic-even" || name == "hyperbolic-odd" || name == "euclidean-plane") {
    const P p = name == "hyperbolic-odd" ? P::Odd : P::Even;
    GradedBasis b = named({"u", "v"}, {p, p});
    MatrixQ gram = MatrixQ::Zero(2, 2);
    if (name == "euclidean-plane") {
      gram = MatrixQ::Identity(2, 2);
    } else {
      gram(0, 1) = 1;
      gram(1, 0) = p == P::Odd ? -1 : 1;
    }
    return {LieSuperalgebra::abelian(b), EvenForm(b, gram)};
  }
  if (name == "line") {
    GradedBasis b = named({"e"}, {P::Even});
    return {LieSuperalgebra::abelian(b), EvenForm(b, MatrixQ::Identity(1, 1))};
  }
  if (name == "heisenberg3-tstar") {
    const LieSuperalgebra h3 = stock("heisenberg3").algebra;
    const QuadraticLieSuperalgebra q = build(h3, heisenberg_volume_cocycle(h3)).total;
    return {q.algebra(), q.form()};
  }
  if (name == "heisenberg3-tstar-plus-line") {
    const LieSuperalgebra h3 = stock("heisenberg3").algebra;
    const QuadraticLieSuperalgebra q = orthogonal_sum(build(h3, zero_cochain2(3)).total, stock("line").quadratic());
    return {q.algebra(), q.form()};
  }
  throw std::invalid_argument("unknown stock algebra '" + name + "'");
}

}  // namespace tstar
