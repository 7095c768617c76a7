#include "tstar/cochains.hpp"

#include <algorithm>
#include <map>
#include <type_traits>

#include "tstar/linalg.hpp"

namespace tstar {

namespace {

int pb(const GradedBasis& b, int i) { return bit(b.parity(i)); }

VectorQ flatten(const std::vector<Rational>& data) {
  VectorQ v(static_cast<Eigen::Index>(data.size()));
  for (std::size_t t = 0; t < data.size(); ++t) v(static_cast<Eigen::Index>(t)) = data[t];
  return v;
}

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

// row -= f * pivot, both sorted.
SparseRow axpy(const SparseRow& row, const Rational& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -f * pivot[b].second);
      ++b;
    } else {
      Rational v = row[a].second - f * pivot[b].second;
      if (!is_zero(v)) out.emplace_back(row[a].first, std::move(v));
      ++a, ++b;
    }
  }
  return out;
}

// Sparse linear combination of unknowns. Running the residual formulas on
// these instead of rationals yields each residual entry as an equation.
struct LinearForm {
  SparseRow terms;

  LinearForm() = default;
  LinearForm(int zero) { (void)zero; }  // only 0, so formulas can write `V r = 0`
  LinearForm& operator+=(const LinearForm& o) {
    terms = axpy(terms, Rational(-1), o.terms);
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    terms = axpy(terms, Rational(1), o.terms);
    return *this;
  }
  friend LinearForm operator*(const Rational& s, LinearForm l) {
    if (is_zero(s)) return {};
    for (auto& [c, v] : l.terms) v *= s;
    return l;
  }
  friend LinearForm operator*(int s, LinearForm l) { return Rational(s) * std::move(l); }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
};

// Generic cochain tensor with coordinate t as the unknown x_t.
class SymbolicTensor {
 public:
  template <typename Expand>
  SymbolicTensor(int n, int unknowns, Expand expand) : n_(n), e_(static_cast<std::size_t>(n) * n * n) {
    for (int t = 0; t < unknowns; ++t) {
      const Tensor3Q u = expand(unit_vector(unknowns, t));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (!is_zero(u(i, j, k))) e_[index(i, j, k)].terms.emplace_back(t, u(i, j, k));
    }
  }
  const LinearForm& operator()(int i, int j, int k) const { return e_[index(i, j, k)]; }

 private:
  std::size_t index(int i, int j, int k) const { return (static_cast<std::size_t>(i) * n_ + j) * n_ + k; }
  int n_;
  std::vector<LinearForm> e_;
};

// Kernel of a system of sparse equations in `unknowns` variables. Rows are
// reduced one at a time against a sparse echelon basis, then the kernel is
// read off by back substitution. Same basis as linalg::kernel (one free
// variable set to 1, the other free variables to 0).
MatrixQ kernel_of_constraints(const std::vector<const std::vector<LinearForm>*>& systems, int unknowns) {
  if (unknowns == 0) return MatrixQ(0, 0);
  std::map<int, SparseRow> pivots;  // leading column -> row with leading entry 1
  for (const auto* sys : systems)
    for (const LinearForm& eq : *sys) {
      if (static_cast<int>(pivots.size()) == unknowns) break;
      SparseRow row = eq.terms;
      while (!row.empty()) {
        const auto it = pivots.find(row.front().first);
        if (it == pivots.end()) break;
        row = axpy(row, row.front().second, it->second);
      }
      if (row.empty()) continue;
      const Rational inv = 1 / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      pivots.emplace(row.front().first, std::move(row));
    }
  std::vector<int> free;
  for (int c = 0; c < unknowns; ++c)
    if (!pivots.count(c)) free.push_back(c);
  MatrixQ basis = MatrixQ::Zero(unknowns, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    basis(free[k], col) = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational s = 0;
      for (std::size_t t = 1; t < it->second.size(); ++t) s += it->second[t].second * basis(it->second[t].first, col);
      basis(it->first, col) = -s;
    }
  }
  return basis;
}

// Residual of the 2-cocycle identity, indexed ((a*n + b)*n + c)*n + d.
template <typename W, typename V = std::decay_t<std::invoke_result_t<const W&, int, int, int>>>
std::vector<V> cocycle2_residual(const LieSuperalgebra& g, const W& w) {
  const int n = g.dim();
  const GradedBasis& bs = g.basis();
  std::vector<V> out(static_cast<std::size_t>(n) * n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int x = pb(bs, a), y = pb(bs, b), z = pb(bs, c);
        const int s1 = sign_pow(x * (y + z));
        const int s2 = sign_pow(z * (x + y));
        for (int d = 0; d < n; ++d) {
          V r = 0;
          for (const auto& [m, v] : g.terms(b, c)) r += v * w(a, m, d);
          for (const auto& [m, v] : g.terms(c, a)) r += s1 * v * w(b, m, d);
          for (const auto& [m, v] : g.terms(a, b)) r += s2 * v * w(c, m, d);
          // pi(X) F (e_d) = -(-1)^{x f} F([X, e_d]) with f the parity of F
          for (const auto& [m, v] : g.terms(a, d)) r -= sign_pow(x * (y + z)) * v * w(b, c, m);
          for (const auto& [m, v] : g.terms(b, d)) r -= s1 * sign_pow(y * (z + x)) * v * w(c, a, m);
          for (const auto& [m, v] : g.terms(c, d)) r -= s2 * sign_pow(z * (x + y)) * v * w(a, b, m);
          out[((static_cast<std::size_t>(a) * n + b) * n + c) * n + d] = std::move(r);
        }
      }
  return out;
}

template <typename W, typename V = std::decay_t<std::invoke_result_t<const W&, int, int, int>>>
std::vector<V> supercyclic_residual(const GradedBasis& bs, const W& w) {
  const int n = bs.dim();
  std::vector<V> out(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        out[(static_cast<std::size_t>(a) * n + b) * n + c] =
            w(a, b, c) - sign_pow(pb(bs, a) * (pb(bs, b) + pb(bs, c))) * w(b, c, a);
  return out;
}

template <typename W, typename V = std::decay_t<std::invoke_result_t<const W&, int, int, int>>>
std::vector<V> closed3_residual(const LieSuperalgebra& g, const W& f) {
  const int n = g.dim();
  const GradedBasis& bs = g.basis();
  std::vector<V> out(static_cast<std::size_t>(n) * n * n * n);
  auto term = [&](int i, int j, int k, int l) {  // f([e_i, e_j], e_k, e_l)
    V s = 0;
    for (const auto& [m, v] : g.terms(i, j)) s += v * f(m, k, l);
    return s;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const int x = pb(bs, a), y = pb(bs, b), z = pb(bs, c), v = pb(bs, d);
          V r = term(a, b, c, d);
          r -= sign_pow(y * z) * term(a, c, b, d);
          r += sign_pow(x * (y + z)) * term(b, c, a, d);
          r += sign_pow((y + z) * v) * term(a, d, b, c);
          r -= sign_pow(x * (y + v) + v * z) * term(b, d, a, c);
          r += sign_pow((x + y) * (z + v)) * term(c, d, a, b);
          out[((static_cast<std::size_t>(a) * n + b) * n + c) * n + d] = std::move(r);
        }
  return out;
}

template <std::size_t N>
std::optional<std::array<int, N>> first_nonzero(const std::vector<Rational>& r, int n) {
  for (std::size_t t = 0; t < r.size(); ++t) {
    if (is_zero(r[t])) continue;
    std::array<int, N> idx{};
    std::size_t rest = t;
    for (std::size_t s = N; s-- > 0;) {
      idx[s] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    return idx;
  }
  return std::nullopt;
}

template <typename Coord>
std::map<Coord, int> coordinate_index(const std::vector<Coord>& coords) {
  std::map<Coord, int> index;
  for (std::size_t t = 0; t < coords.size(); ++t) index.emplace(coords[t], static_cast<int>(t));
  return index;
}

}  // namespace

Cochain2Dual zero_cochain2(int n) { return {Tensor3Q(n)}; }
ScalarCochain3 zero_cochain3(int n) { return {Tensor3Q(n)}; }
ScalarCochain2 zero_scalar2(int n) { return {MatrixQ::Zero(n, n)}; }

std::optional<std::array<int, 3>> cochain2_violation(const GradedBasis& bs, const Cochain2Dual& omega) {
  const int n = bs.dim();
  if (omega.w.size() != n) throw std::invalid_argument("cochain size does not match the basis");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!is_zero(omega.w(i, j, k)) && ((pb(bs, i) + pb(bs, j) + pb(bs, k)) & 1)) return std::array{i, j, k};
        if (omega.w(i, j, k) != -sign_pow(pb(bs, i) * pb(bs, j)) * omega.w(j, i, k)) return std::array{i, j, k};
      }
  return std::nullopt;
}

std::optional<std::array<int, 3>> cochain3_violation(const GradedBasis& bs, const ScalarCochain3& f) {
  const int n = bs.dim();
  if (f.f.size() != n) throw std::invalid_argument("cochain size does not match the basis");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!is_zero(f.f(i, j, k)) && ((pb(bs, i) + pb(bs, j) + pb(bs, k)) & 1)) return std::array{i, j, k};
        if (f.f(i, j, k) != -sign_pow(pb(bs, i) * pb(bs, j)) * f.f(j, i, k)) return std::array{i, j, k};
        if (f.f(i, j, k) != -sign_pow(pb(bs, j) * pb(bs, k)) * f.f(i, k, j)) return std::array{i, j, k};
      }
  return std::nullopt;
}

std::optional<std::array<int, 2>> scalar2_violation(const GradedBasis& bs, const ScalarCochain2& phi) {
  const int n = bs.dim();
  if (phi.p.rows() != n || phi.p.cols() != n) throw std::invalid_argument("cochain size does not match the basis");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_zero(phi.p(i, j)) && bs.parity(i) != bs.parity(j)) return std::array{i, j};
      if (phi.p(i, j) != -sign_pow(pb(bs, i) * pb(bs, j)) * phi.p(j, i)) return std::array{i, j};
    }
  return std::nullopt;
}

std::vector<std::array<int, 3>> cochain3_free_coordinates(const GradedBasis& bs) {
  const int n = bs.dim();
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        if ((pb(bs, i) + pb(bs, j) + pb(bs, k)) & 1) continue;
        if (i == j && bs.parity(i) == Parity::Even) continue;
        if (j == k && bs.parity(j) == Parity::Even) continue;
        out.push_back({i, j, k});
      }
  return out;
}

std::vector<std::array<int, 3>> cochain2_free_coordinates(const GradedBasis& bs) {
  const int n = bs.dim();
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j && bs.parity(i) == Parity::Even) continue;
      for (int k = 0; k < n; ++k)
        if (((pb(bs, i) + pb(bs, j) + pb(bs, k)) & 1) == 0) out.push_back({i, j, k});
    }
  return out;
}

std::vector<std::array<int, 2>> scalar2_free_coordinates(const GradedBasis& bs) {
  const int n = bs.dim();
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (bs.parity(i) != bs.parity(j)) continue;
      if (i == j && bs.parity(i) == Parity::Even) continue;
      out.push_back({i, j});
    }
  return out;
}

int super_sort_sign(const GradedBasis& bs, std::array<int, 3>& idx) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int s = 0; s + 1 < 3 - pass; ++s)
      if (idx[s] > idx[s + 1]) {
        sign *= -sign_pow(pb(bs, idx[s]) * pb(bs, idx[s + 1]));
        std::swap(idx[s], idx[s + 1]);
      }
  for (int s = 0; s + 1 < 3; ++s)
    if (idx[s] == idx[s + 1] && bs.parity(idx[s]) == Parity::Even) return 0;
  return sign;
}

ScalarCochain3 expand_cochain3(const GradedBasis& bs, const VectorQ& coords) {
  const int n = bs.dim();
  const auto free = cochain3_free_coordinates(bs);
  if (coords.size() != static_cast<Eigen::Index>(free.size()))
    throw std::invalid_argument("expand_cochain3: wrong number of coordinates");
  const auto index = coordinate_index(free);
  ScalarCochain3 out = zero_cochain3(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::array<int, 3> t{a, b, c};
        const int s = super_sort_sign(bs, t);
        if (s == 0) continue;
        const auto it = index.find(t);
        if (it != index.end()) out.f(a, b, c) = s * coords(it->second);
      }
  return out;
}

Cochain2Dual expand_cochain2(const GradedBasis& bs, const VectorQ& coords) {
  const int n = bs.dim();
  const auto free = cochain2_free_coordinates(bs);
  if (coords.size() != static_cast<Eigen::Index>(free.size()))
    throw std::invalid_argument("expand_cochain2: wrong number of coordinates");
  Cochain2Dual out = zero_cochain2(n);
  for (std::size_t t = 0; t < free.size(); ++t) {
    const auto [i, j, k] = free[t];
    const Rational& v = coords(static_cast<Eigen::Index>(t));
    out.w(i, j, k) = v;
    if (i != j) out.w(j, i, k) = -sign_pow(pb(bs, i) * pb(bs, j)) * v;
  }
  return out;
}

ScalarCochain2 expand_scalar2(const GradedBasis& bs, const VectorQ& coords) {
  const int n = bs.dim();
  const auto free = scalar2_free_coordinates(bs);
  if (coords.size() != static_cast<Eigen::Index>(free.size()))
    throw std::invalid_argument("expand_scalar2: wrong number of coordinates");
  ScalarCochain2 out = zero_scalar2(n);
  for (std::size_t t = 0; t < free.size(); ++t) {
    const auto [i, j] = free[t];
    const Rational& v = coords(static_cast<Eigen::Index>(t));
    out.p(i, j) = v;
    if (i != j) out.p(j, i) = -sign_pow(pb(bs, i) * pb(bs, j)) * v;
  }
  return out;
}

std::optional<std::array<int, 3>> cocycle2_witness(const LieSuperalgebra& g, const Cochain2Dual& omega) {
  if (omega.w.size() != g.dim()) throw std::invalid_argument("cocycle2: cochain does not match the algebra");
  const auto r = first_nonzero<4>(cocycle2_residual(g, omega.w), g.dim());
  if (!r) return std::nullopt;
  return std::array{(*r)[0], (*r)[1], (*r)[2]};
}

bool is_cocycle2(const LieSuperalgebra& g, const Cochain2Dual& omega) { return !cocycle2_witness(g, omega); }

std::optional<std::array<int, 3>> supercyclic_witness(const GradedBasis& bs, const Cochain2Dual& omega) {
  return first_nonzero<3>(supercyclic_residual(bs, omega.w), bs.dim());
}

bool is_supercyclic(const GradedBasis& bs, const Cochain2Dual& omega) { return !supercyclic_witness(bs, omega); }

std::optional<std::array<int, 4>> closed3_witness(const LieSuperalgebra& g, const ScalarCochain3& f) {
  if (f.f.size() != g.dim()) throw std::invalid_argument("closed3: cochain does not match the algebra");
  return first_nonzero<4>(closed3_residual(g, f.f), g.dim());
}

bool is_closed3(const LieSuperalgebra& g, const ScalarCochain3& f) { return !closed3_witness(g, f); }

ScalarCochain3 delta_scalar2(const LieSuperalgebra& g, const ScalarCochain2& phi) {
  const int n = g.dim();
  const GradedBasis& bs = g.basis();
  ScalarCochain3 out = zero_cochain3(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int x = pb(bs, a), y = pb(bs, b), z = pb(bs, c);
        Rational r = 0;
        for (const auto& [m, v] : g.terms(a, b)) r -= v * phi.p(m, c);
        for (const auto& [m, v] : g.terms(a, c)) r += sign_pow(y * z) * v * phi.p(m, b);
        for (const auto& [m, v] : g.terms(b, c)) r -= sign_pow(x * (y + z)) * v * phi.p(m, a);
        out.f(a, b, c) = std::move(r);
      }
  return out;
}

ScalarCochain3 hat(const LieSuperalgebra& g, const Cochain2Dual& omega) {
  if (const auto v = cochain2_violation(g.basis(), omega))
    throw PreconditionError("hat: not an even super-antisymmetric cochain", {(*v)[0], (*v)[1], (*v)[2]});
  if (const auto v = supercyclic_witness(g.basis(), omega))
    throw PreconditionError("hat: cochain is not supercyclic", {(*v)[0], (*v)[1], (*v)[2]});
  if (const auto v = cocycle2_witness(g, omega))
    throw PreconditionError("hat: cochain is not a 2-cocycle", {(*v)[0], (*v)[1], (*v)[2]});
  return {omega.w};
}

Cochain2Dual unhat(const LieSuperalgebra& g, const ScalarCochain3& f) {
  if (const auto v = cochain3_violation(g.basis(), f))
    throw PreconditionError("unhat: not an even super-alternating 3-form", {(*v)[0], (*v)[1], (*v)[2]});
  if (const auto v = closed3_witness(g, f))
    throw PreconditionError("unhat: 3-form is not closed", {(*v)[0], (*v)[1], (*v)[2], (*v)[3]});
  return {f.f};
}

Cochain2Dual as_cochain2(const ScalarCochain3& f) { return {f.f}; }

std::vector<ScalarCochain3> z3_basis(const LieSuperalgebra& g) {
  const GradedBasis& bs = g.basis();
  const int m = static_cast<int>(cochain3_free_coordinates(bs).size());
  const SymbolicTensor f(g.dim(), m, [&](const VectorQ& v) { return expand_cochain3(bs, v).f; });
  const auto eqs = closed3_residual(g, f);
  const MatrixQ ker = kernel_of_constraints({&eqs}, m);
  std::vector<ScalarCochain3> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) out.push_back(expand_cochain3(bs, ker.col(c)));
  return out;
}

std::vector<ScalarCochain3> b3_basis(const LieSuperalgebra& g) {
  const GradedBasis& bs = g.basis();
  const int m = static_cast<int>(scalar2_free_coordinates(bs).size());
  const int n = g.dim();
  std::vector<ScalarCochain3> images;
  MatrixQ cols(static_cast<Eigen::Index>(n) * n * n, m);
  for (int t = 0; t < m; ++t) {
    images.push_back(delta_scalar2(g, expand_scalar2(bs, unit_vector(m, t))));
    cols.col(t) = flatten(images.back().f.data());
  }
  std::vector<ScalarCochain3> out;
  if (m == 0) return out;
  for (auto c : linalg::independent_columns(cols)) out.push_back(images[static_cast<std::size_t>(c)]);
  return out;
}

int h3_dim(const LieSuperalgebra& g) {
  return static_cast<int>(z3_basis(g).size()) - static_cast<int>(b3_basis(g).size());
}

std::vector<Cochain2Dual> z2_basis(const LieSuperalgebra& g) {
  const GradedBasis& bs = g.basis();
  const int m = static_cast<int>(cochain2_free_coordinates(bs).size());
  const SymbolicTensor w(g.dim(), m, [&](const VectorQ& v) { return expand_cochain2(bs, v).w; });
  const auto eqs = cocycle2_residual(g, w);
  const MatrixQ ker = kernel_of_constraints({&eqs}, m);
  std::vector<Cochain2Dual> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) out.push_back(expand_cochain2(bs, ker.col(c)));
  return out;
}

std::vector<Cochain2Dual> supercyclic_z2_basis(const LieSuperalgebra& g) {
  const GradedBasis& bs = g.basis();
  const int m = static_cast<int>(cochain2_free_coordinates(bs).size());
  const SymbolicTensor w(g.dim(), m, [&](const VectorQ& v) { return expand_cochain2(bs, v).w; });
  const auto cyc = supercyclic_residual(bs, w);
  const auto eqs = cocycle2_residual(g, w);
  const MatrixQ ker = kernel_of_constraints({&cyc, &eqs}, m);
  std::vector<Cochain2Dual> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) out.push_back(expand_cochain2(bs, ker.col(c)));
  return out;
}

std::optional<ScalarCochain2> cohomologous(const LieSuperalgebra& g, const ScalarCochain3& f1,
                                           const ScalarCochain3& f2) {
  if (!is_closed3(g, f1)) throw PreconditionError("cohomologous: first cochain is not closed");
  if (!is_closed3(g, f2)) throw PreconditionError("cohomologous: second cochain is not closed");
  const GradedBasis& bs = g.basis();
  const int n = g.dim();
  const int m = static_cast<int>(scalar2_free_coordinates(bs).size());
  const VectorQ rhs = flatten((f1.f - f2.f).data());
  if (m == 0) {
    if (linalg::is_zero_matrix(rhs)) return zero_scalar2(n);
    return std::nullopt;
  }
  MatrixQ cols(static_cast<Eigen::Index>(n) * n * n, m);
  for (int t = 0; t < m; ++t) cols.col(t) = flatten(delta_scalar2(g, expand_scalar2(bs, unit_vector(m, t))).f.data());
  const auto sol = linalg::solve(cols, rhs);
  if (!sol.particular) return std::nullopt;
  return expand_scalar2(bs, *sol.particular);
}

}  // namespace tstar
