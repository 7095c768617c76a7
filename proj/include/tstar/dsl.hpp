#ifndef TSTAR_DSL_HPP
#define TSTAR_DSL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tstar/cochains.hpp"
#include "tstar/forms.hpp"

namespace tstar::dsl {

/// Line-oriented algebra description (docs/grammar.ebnf):
///
///   basis x:even y:even z:odd
///   bracket [x,y] = z - 1/2*y
///   form B(x,y) = 1
///   cochain2 w(x,y;z) = 1       # omega(x,y)(z)
///   cochain3 f(x,y,z) = 1
///   scalar2 phi(x,y) = 1
///
/// Entries not written are zero; the partner entries forced by
/// super-skew-symmetry (brackets, cochains) or supersymmetry (form) are
/// filled in, and writing one that disagrees is an error.
struct AlgebraDocument {
  GradedBasis basis;
  Tensor3Q brackets;
  std::optional<MatrixQ> gram;  // present iff the text has a form line
  std::vector<std::pair<std::string, Cochain2Dual>> cochain2;
  std::vector<std::pair<std::string, ScalarCochain3>> cochain3;
  std::vector<std::pair<std::string, ScalarCochain2>> scalar2;

  LieSuperalgebra algebra() const;
  /// Throws std::invalid_argument when the document has no form.
  EvenForm form() const;
  QuadraticLieSuperalgebra quadratic() const;

  const Cochain2Dual* find_cochain2(const std::string& name) const;
  const ScalarCochain3* find_cochain3(const std::string& name) const;
  const ScalarCochain2* find_scalar2(const std::string& name) const;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Undeclared, Contradiction, Parity, Duplicate };
  ParseError(Kind kind, int line, int column, const std::string& message);
  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};
const char* to_string(ParseError::Kind k);

AlgebraDocument parse(std::string_view text);

/// Canonical text: basis, then the nonzero brackets [a,b] with a <= b, form
/// entries with a <= b, and cochains on their free coordinates.
std::string emit(const AlgebraDocument& doc);

AlgebraDocument document(const LieSuperalgebra& g);
AlgebraDocument document(const QuadraticLieSuperalgebra& q);

/// Comma-separated linear combinations of basis labels, as in
/// "x* + y*, 2*z"; each becomes one column.
MatrixQ parse_vectors(const GradedBasis& basis, std::string_view text);

/// Linear combination in DSL syntax, "0" for the zero vector.
std::string format_vector(const GradedBasis& basis, const VectorQ& v);

}  // namespace tstar::dsl

#endif  // TSTAR_DSL_HPP
