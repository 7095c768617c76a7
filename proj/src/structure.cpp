#include "tstar/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tstar/linalg.hpp"
#include "tstar/number_theory.hpp"

namespace tstar {

namespace {

std::string variable(int i, int m) {
  if (m <= 4) return std::string(1, "xyzw"[i]);
  return "x" + std::to_string(i + 1);
}

void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& monomial) {
  if (is_zero(c)) return;
  const Rational a = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (a != 1) os << to_string(a) << "*";
  os << monomial;
  first = false;
}

constexpr int kCombinationBound = 4;

MatrixQ append_column(const MatrixQ& m, const VectorQ& v) {
  MatrixQ out(v.size(), m.cols() + 1);
  out << m, v;
  return out;
}

// Columns of `a` followed by those of `b`.
MatrixQ join(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

struct WeightBlock {
  std::vector<Rational> weight;
  MatrixQ basis;  // columns in quotient coordinates
  bool zero_weight() const {
    for (const Rational& l : weight)
      if (!is_zero(l)) return false;
    return true;
  }
};

// Joint rational eigenspaces of commuting operators on the span of `v`.
void joint_eigenspaces(const std::vector<MatrixQ>& ops, const MatrixQ& v, std::size_t t,
                       std::vector<Rational>& weight, std::vector<WeightBlock>& out, std::string& missing) {
  if (t == ops.size()) {
    out.push_back({weight, v});
    return;
  }
  const MatrixQ image = ops[t] * v;
  MatrixQ x(v.cols(), v.cols());
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    const auto sol = linalg::solve(v, VectorQ(image.col(c)));
    if (!sol.particular) throw VerificationError("max_isotropic_ideal: operators do not preserve a weight space");
    x.col(c) = *sol.particular;
  }
  std::vector<Rational> roots;
  if (linalg::is_zero_matrix(x)) {
    roots.push_back(0);
  } else {
    roots = rational_roots(linalg::characteristic_polynomial(x));
    if (roots.empty()) {
      std::ostringstream os;
      const auto c = linalg::characteristic_polynomial(x);
      bool first = true;
      for (std::size_t i = c.size(); i-- > 0;)
        append_term(os, first, c[i], i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i)));
      missing = os.str();
    }
  }
  for (const Rational& l : roots) {
    MatrixQ shifted = x;
    for (Eigen::Index i = 0; i < x.rows(); ++i) shifted(i, i) -= l;
    weight.push_back(l);
    joint_eigenspaces(ops, v * linalg::kernel(shifted), t + 1, weight, out, missing);
    weight.pop_back();
  }
}

// Homogeneous vector v in W^perp with W + span{v} an isotropic graded ideal
// of one more dimension.
VectorQ next_vector(const QuadraticLieSuperalgebra& q, const Subspace& w, const std::vector<VectorQ>& h) {
  const LieSuperalgebra& g = q.algebra();
  const GradedBasis& basis = q.basis();
  const int n = q.dim();
  const Subspace wp = orthogonal(q.form(), w);
  const MatrixQ wpb = wp.basis();

  // S = {v in W^perp : [y, v] in W for y in h}
  const MatrixQ ann = w.dim() == 0 ? MatrixQ(MatrixQ::Identity(n, n))
                                   : MatrixQ(linalg::kernel(MatrixQ(w.basis().transpose())).transpose());
  MatrixQ sys(0, wpb.cols());
  for (const VectorQ& y : h) {
    const MatrixQ block = ann * g.ad(y) * wpb;
    MatrixQ grown(sys.rows() + block.rows(), wpb.cols());
    grown << sys, block;
    sys = std::move(grown);
  }
  const MatrixQ s_cols = sys.rows() == 0 ? wpb : MatrixQ(wpb * linalg::kernel(sys));
  const Subspace s = Subspace::span(basis, s_cols);

  const std::vector<int> even_idx = basis.indices(Parity::Even);
  std::string missing;
  std::optional<MatrixQ> zero_block_gram;

  for (Parity p : {Parity::Odd, Parity::Even}) {
    const MatrixQ& wb = w.basis_of(p);
    const MatrixQ& sb = s.basis_of(p);
    MatrixQ reps(n, 0);
    for (Eigen::Index c : linalg::independent_columns(join(wb, sb)))
      if (c >= wb.cols()) reps = append_column(reps, sb.col(c - wb.cols()));
    if (reps.cols() == 0) continue;
    const MatrixQ frame = join(wb, reps);

    std::vector<MatrixQ> ops;
    for (int i : even_idx) {
      MatrixQ t(reps.cols(), reps.cols());
      const MatrixQ image = g.ad(i) * reps;
      for (Eigen::Index c = 0; c < reps.cols(); ++c) {
        const auto sol = linalg::solve(frame, VectorQ(image.col(c)));
        if (!sol.particular) throw VerificationError("max_isotropic_ideal: candidate space is not invariant");
        t.col(c) = sol.particular->tail(reps.cols());
      }
      if (!linalg::is_zero_matrix(t)) ops.push_back(std::move(t));
    }

    std::vector<WeightBlock> blocks;
    std::vector<Rational> weight;
    joint_eigenspaces(ops, MatrixQ::Identity(reps.cols(), reps.cols()), 0, weight, blocks, missing);

    if (p == Parity::Odd) {
      if (!blocks.empty()) return reps * blocks.front().basis.col(0);
      continue;
    }
    for (const WeightBlock& b : blocks)
      if (!b.zero_weight()) return reps * b.basis.col(0);
    for (const WeightBlock& b : blocks) {
      const MatrixQ vecs = reps * b.basis;
      const MatrixQ gram = vecs.transpose() * q.form().gram() * vecs;
      if (const auto iso = find_isotropic_vector(gram)) return vecs * *iso;
      zero_block_gram = gram;
    }
  }
  if (zero_block_gram) {
    const std::string quad = quadric_string(*zero_block_gram);
    throw RationalPointNotFound("no rational isotropic vector on the quadric " + quad + " = 0", quad,
                                *zero_block_gram);
  }
  throw RationalPointNotFound("induced action has no rational eigenvalue; characteristic polynomial " + missing,
                              "", MatrixQ());
}

}  // namespace

std::string quadric_string(const MatrixQ& gram) {
  const int m = static_cast<int>(gram.rows());
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m; ++i) append_term(os, first, gram(i, i), variable(i, m) + "^2");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      append_term(os, first, gram(i, j) + gram(j, i), variable(i, m) + "*" + variable(j, m));
  if (first) return "0";
  return os.str();
}

std::optional<VectorQ> find_isotropic_vector(const MatrixQ& gram) {
  const Eigen::Index d = gram.rows();
  if (d == 0) return std::nullopt;
  for (Eigen::Index i = 0; i < d; ++i)
    if (is_zero(gram(i, i))) return unit_vector(static_cast<int>(d), static_cast<int>(i));
  const MatrixQ rad = linalg::kernel(gram);
  if (rad.cols() > 0) return VectorQ(rad.col(0));

  // Symmetric elimination: p^T gram p = diag. A vanishing pivot is itself isotropic.
  MatrixQ p = MatrixQ::Identity(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const MatrixQ a = p.transpose() * gram * p;
    if (is_zero(a(i, i))) return VectorQ(p.col(i));
    for (Eigen::Index j = i + 1; j < d; ++j) p.col(j) -= (a(i, j) / a(i, i)) * p.col(i);
  }
  {
    const MatrixQ a = p.transpose() * gram * p;
    for (Eigen::Index k = 0; k < d; ++k)
      for (Eigen::Index l = k + 1; l < d; ++l)
        if (const auto r = rational_sqrt(-a(l, l) / a(k, k))) return VectorQ(*r * p.col(k) + p.col(l));
  }
  // Rescale so that the diagonal holds squarefree integers.
  std::vector<std::optional<Integer>> core(static_cast<std::size_t>(d));
  {
    const MatrixQ a = p.transpose() * gram * p;
    for (Eigen::Index i = 0; i < d; ++i) {
      const auto sn = squarefree_decomposition(numerator(a(i, i)));
      const auto sd = squarefree_decomposition(denominator(a(i, i)));
      if (!sn || !sd) continue;
      // num/den = (rn / (rd cd))^2 cn cd
      p.col(i) *= Rational(sd->root * sd->core, sn->root);
      core[static_cast<std::size_t>(i)] = sn->core * sd->core;
    }
  }
  auto checked = [&](const VectorQ& v) -> std::optional<VectorQ> {
    if (linalg::is_zero_matrix(v) || !is_zero(v.dot(gram * v))) return std::nullopt;
    return v;
  };
  auto usable = [&](std::initializer_list<Eigen::Index> idx) {
    for (Eigen::Index i : idx)
      if (!core[static_cast<std::size_t>(i)]) return false;
    return true;
  };

  // Ternary subforms <a_k, a_l, q(v)>, first with v a third diagonal vector,
  // then with v a small combination of two others.
  auto try_ternary = [&](Eigen::Index k, Eigen::Index l, const VectorQ& coeffs) -> std::optional<VectorQ> {
    Integer qv = 0;
    for (Eigen::Index i = 0; i < d; ++i)
      if (!is_zero(coeffs(i))) qv += *core[i] * numerator(coeffs(i)) * numerator(coeffs(i));
    const VectorQ v = p * coeffs;
    if (qv == 0) return checked(v);
    const auto sol = solve_ternary(*core[k], *core[l], qv);
    if (!sol) return std::nullopt;
    return checked(Rational((*sol)[0]) * p.col(k) + Rational((*sol)[1]) * p.col(l) + Rational((*sol)[2]) * v);
  };
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = k + 1; l < d; ++l)
      for (Eigen::Index m = l + 1; m < d; ++m)
        if (usable({k, l, m}))
          if (auto v = try_ternary(k, l, unit_vector(static_cast<int>(d), static_cast<int>(m)))) return v;
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = k + 1; l < d; ++l)
      for (Eigen::Index m = 0; m < d; ++m)
        for (Eigen::Index o = m + 1; o < d; ++o) {
          if (m == k || m == l || o == k || o == l || !usable({k, l, m, o})) continue;
          for (int s = 1; s <= kCombinationBound; ++s)
            for (int t = -kCombinationBound; t <= kCombinationBound; ++t) {
              if (t == 0 || std::gcd(s, t) != 1) continue;
              VectorQ c = VectorQ::Zero(d);
              c(m) = s;
              c(o) = t;
              if (auto v = try_ternary(k, l, c)) return v;
            }
        }
  return std::nullopt;
}

IsotropicFlagResult max_isotropic_ideal(const QuadraticLieSuperalgebra& q) {
  const LieSuperalgebra& g = q.algebra();
  const GradedBasis& basis = q.basis();
  if (!is_nilpotent(g) && !(is_solvable(g) && class_condition(g)))
    throw PreconditionError("max_isotropic_ideal: algebra is neither nilpotent nor solvable with [g1,g1] in [g0,g0]");
  const int n = q.dim();

  std::vector<VectorQ> h;
  {
    const Subspace derived = derived_subalgebra(g);
    const MatrixQ db = derived.basis();
    MatrixQ cols = db;
    for (int i : basis.indices(Parity::Odd)) cols = append_column(cols, unit_vector(n, i));
    const MatrixQ hb = Subspace::span(basis, cols).basis();
    for (Eigen::Index c = 0; c < hb.cols(); ++c) h.push_back(hb.col(c));
  }

  IsotropicFlagResult out;
  Subspace w = Subspace::zero(basis);
  out.chain.push_back(w);
  while (w.dim() < n / 2) {
    const VectorQ v = next_vector(q, w, h);
    Subspace next;
    try {
      next = Subspace::span(basis, append_column(w.basis(), v));
    } catch (const PreconditionError&) {
      throw VerificationError("max_isotropic_ideal: chosen vector is not homogeneous");
    }
    if (next.dim() != w.dim() + 1) throw VerificationError("max_isotropic_ideal: flag did not grow");
    if (!is_totally_isotropic(q.form(), next)) throw VerificationError("max_isotropic_ideal: flag step not isotropic");
    if (!is_ideal(g, next)) throw VerificationError("max_isotropic_ideal: flag step not an ideal");
    w = std::move(next);
    out.chain.push_back(w);
  }

  const Subspace wp = orthogonal(q.form(), w);
  if (n % 2 == 0 && !(wp == w)) throw VerificationError("max_isotropic_ideal: W_max differs from its orthogonal");
  if (n % 2 == 1 && wp.dim() - w.dim() != 1)
    throw VerificationError("max_isotropic_ideal: W_max has orthogonal of the wrong dimension");
  if (!w.contains(bracket_span(g, Subspace::whole(basis), wp)))
    throw VerificationError("max_isotropic_ideal: [g, W_max^perp] is not inside W_max");

  out.w_max = w;
  out.achieved_dim = w.dim();
  return out;
}

const char* to_string(DimensionCase c) { return c == DimensionCase::Even ? "even" : "odd"; }

Decomposition decompose(const QuadraticLieSuperalgebra& q) {
  Decomposition d;
  d.flag = max_isotropic_ideal(q);
  d.ideal = d.flag.w_max;
  const int n = q.dim();
  if (n % 2 == 0) {
    Recognition r = recognize(q, d.ideal);
    d.parity_case = DimensionCase::Even;
    d.extension = std::move(r.extension);
    d.embedding = std::move(r.map);
  } else {
    const MatrixQ section = d.ideal.coordinate_complement();
    Recognition r = extension_along_section(q, d.ideal, section, coordinate_names(q.basis(), section));
    const QuadraticLieSuperalgebra& total = r.extension.total;
    Subspace image;
    try {
      image = Subspace::span(total.basis(), r.map);
    } catch (const PreconditionError&) {
      throw VerificationError("decompose: image of the embedding is not graded");
    }
    if (image.dim() != n || total.dim() != n + 1)
      throw VerificationError("decompose: image does not have codimension 1");
    if (!is_ideal(total.algebra(), image)) throw VerificationError("decompose: image is not an ideal");
    const MatrixQ restricted = r.map.transpose() * total.form().gram() * r.map;
    if (linalg::rank(restricted) != n) throw VerificationError("decompose: form is degenerate on the image");
    d.parity_case = DimensionCase::Odd;
    d.extension = std::move(r.extension);
    d.embedding = std::move(r.map);
  }
  d.quotient = d.extension.base;
  return d;
}

}  // namespace tstar
