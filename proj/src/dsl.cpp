#include "tstar/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace tstar::dsl {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

const char* to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::Undeclared: return "undeclared label";
    case ParseError::Kind::Contradiction: return "contradiction";
    case ParseError::Kind::Parity: return "parity";
    case ParseError::Kind::Duplicate: return "duplicate";
  }
  return "?";
}

namespace {

using Kind = ParseError::Kind;

bool label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Cursor {
 public:
  Cursor(std::string_view text, int line) : s_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(Kind::Syntax, std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(Kind k, const std::string& msg) const { throw ParseError(k, line_, column(), msg); }
  [[noreturn]] void fail_at(Kind k, int col, const std::string& msg) const { throw ParseError(k, line_, col, msg); }

  std::string word() {
    skip_ws();
    if (pos_ >= s_.size() || !label_start(s_[pos_])) fail(Kind::Syntax, "expected a name");
    const std::size_t b = pos_;
    while (pos_ < s_.size() && label_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  std::string label() {
    std::string w = word();
    while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '\'')) w += s_[pos_++];
    return w;
  }
  bool at_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c));
  }
  Rational number() {
    skip_ws();
    const std::size_t b = pos_;
    const int col = column();
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    try {
      return parse_rational(s_.substr(b, pos_ - b));
    } catch (const std::invalid_argument& e) {
      fail_at(Kind::Syntax, col, e.what());
    }
  }
  /// ['+'|'-'] number
  Rational signed_number() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    if (!at_number()) fail(Kind::Syntax, "expected a rational number");
    const Rational q = number();
    return neg ? Rational(-q) : q;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

int lookup(const GradedBasis& b, Cursor& cur) {
  cur.skip_ws();
  const int start = cur.column();
  const std::string name = cur.label();
  const auto i = b.index_of(name);
  if (!i) cur.fail_at(Kind::Undeclared, start, "undeclared label '" + name + "'");
  return *i;
}

// expr := ['+'|'-'] term (('+'|'-') term)* ; term := number ['*' label] | label
VectorQ expression(const GradedBasis& b, Cursor& cur) {
  VectorQ v = VectorQ::Zero(b.dim());
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (cur.accept('-'))
      sign = -1;
    else if (!cur.accept('+') && !first)
      break;
    first = false;
    if (cur.at_number()) {
      const int col = cur.column();
      const Rational c = cur.number();
      if (cur.accept('*')) {
        v(lookup(b, cur)) += sign * c;
      } else if (!is_zero(c)) {
        cur.fail_at(Kind::Syntax, col, "constant term in a linear combination");
      }
    } else {
      v(lookup(b, cur)) += sign;
    }
    const char n = cur.peek();
    if (n != '+' && n != '-') break;
  }
  return v;
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Entries written so far, for contradiction checks against completions.
template <std::size_t N>
class Ledger {
 public:
  void set(const std::array<int, N>& key, const Rational& value, const Cursor& cur, int col, const char* what) {
    const auto [it, fresh] = seen_.emplace(key, value);
    if (!fresh && it->second != value)
      cur.fail_at(Kind::Contradiction, col,
                  std::string(what) + " contradicts an earlier entry (" + tstar::to_string(it->second) + " vs " +
                      tstar::to_string(value) + ")");
  }

 private:
  std::map<std::array<int, N>, Rational> seen_;
};

struct Named2 {
  Cochain2Dual value;
  Ledger<3> ledger;
};
struct Named3 {
  ScalarCochain3 value;
  Ledger<3> ledger;
};
struct NamedS {
  ScalarCochain2 value;
  Ledger<2> ledger;
};

template <typename T>
T* find_named(std::vector<std::pair<std::string, T>>& v, const std::string& name) {
  for (auto& [n, x] : v)
    if (n == name) return &x;
  return nullptr;
}

template <typename T>
const T* find_named(const std::vector<std::pair<std::string, T>>& v, const std::string& name) {
  for (const auto& [n, x] : v)
    if (n == name) return &x;
  return nullptr;
}

std::string coefficient_term(const Rational& c, const std::string& label, bool first) {
  std::string out;
  const Rational a = abs(c);
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (a != 1) out += tstar::to_string(a) + "*";
  return out + label;
}

}  // namespace

LieSuperalgebra AlgebraDocument::algebra() const { return LieSuperalgebra(basis, brackets); }

EvenForm AlgebraDocument::form() const {
  if (!gram) throw std::invalid_argument("document has no form lines");
  return EvenForm(basis, *gram);
}

QuadraticLieSuperalgebra AlgebraDocument::quadratic() const { return QuadraticLieSuperalgebra(algebra(), form()); }

const Cochain2Dual* AlgebraDocument::find_cochain2(const std::string& name) const { return find_named(cochain2, name); }
const ScalarCochain3* AlgebraDocument::find_cochain3(const std::string& name) const {
  return find_named(cochain3, name);
}
const ScalarCochain2* AlgebraDocument::find_scalar2(const std::string& name) const { return find_named(scalar2, name); }

AlgebraDocument parse(std::string_view text) {
  AlgebraDocument doc;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  bool frozen = false;
  Ledger<3> bracket_ledger;
  Ledger<2> form_ledger;
  std::vector<std::pair<std::string, Named2>> c2;
  std::vector<std::pair<std::string, Named3>> c3;
  std::vector<std::pair<std::string, NamedS>> s2;
  std::map<std::string, std::string> cochain_kind;

  auto freeze = [&](const Cursor& cur) {
    if (frozen) return;
    try {
      doc.basis = GradedBasis(names, parities);
    } catch (const std::exception& e) {
      cur.fail(Kind::Duplicate, e.what());
    }
    doc.brackets = Tensor3Q(doc.basis.dim());
    frozen = true;
  };
  auto claim_name = [&](const std::string& name, const std::string& kind, const Cursor& cur, int col) {
    const auto [it, fresh] = cochain_kind.emplace(name, kind);
    if (!fresh && it->second != kind)
      cur.fail_at(Kind::Duplicate, col, "name '" + name + "' is already used by a " + it->second);
  };

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const int kw_col = cur.column();
    const std::string kw = cur.word();
    const GradedBasis& b = doc.basis;

    if (kw == "basis") {
      if (frozen) cur.fail_at(Kind::Syntax, kw_col, "basis lines must come before all other lines");
      while (!cur.at_end()) {
        const int col = cur.column();
        const std::string name = cur.label();
        cur.expect(':');
        const std::string p = cur.word();
        if (p != "even" && p != "odd") cur.fail(Kind::Syntax, "parity must be 'even' or 'odd'");
        if (std::find(names.begin(), names.end(), name) != names.end())
          cur.fail_at(Kind::Duplicate, col, "label '" + name + "' declared twice");
        names.push_back(name);
        parities.push_back(p == "even" ? Parity::Even : Parity::Odd);
      }
    } else if (kw == "bracket") {
      freeze(cur);
      const int col = cur.column();
      cur.expect('[');
      const int i = lookup(b, cur);
      cur.expect(',');
      const int j = lookup(b, cur);
      cur.expect(']');
      cur.expect('=');
      const int rhs_col = cur.column();
      const VectorQ v = expression(b, cur);
      if (!cur.at_end()) cur.fail(Kind::Syntax, "unexpected text after the bracket value");
      const Parity target = b.parity(i) + b.parity(j);
      for (int k = 0; k < b.dim(); ++k)
        if (!is_zero(v(k)) && b.parity(k) != target)
          cur.fail_at(Kind::Parity, rhs_col,
                      "[" + b.name(i) + "," + b.name(j) + "] is " + parity_name(target) + " but '" + b.name(k) +
                          "' is " + parity_name(b.parity(k)));
      const int s = -koszul(b.parity(i), b.parity(j));
      for (int k = 0; k < b.dim(); ++k) {
        bracket_ledger.set({i, j, k}, v(k), cur, col, "bracket");
        bracket_ledger.set({j, i, k}, s * v(k), cur, col, "bracket (by super-skew-symmetry)");
        doc.brackets(i, j, k) = v(k);
        doc.brackets(j, i, k) = s * v(k);
      }
    } else if (kw == "form") {
      freeze(cur);
      const int col = cur.column();
      const std::string fname = cur.word();
      if (fname != "B") cur.fail_at(Kind::Syntax, col, "the form is written B(a,b)");
      cur.expect('(');
      const int i = lookup(b, cur);
      cur.expect(',');
      const int j = lookup(b, cur);
      cur.expect(')');
      cur.expect('=');
      const Rational q = cur.signed_number();
      if (!cur.at_end()) cur.fail(Kind::Syntax, "unexpected text after the form value");
      if (!is_zero(q) && b.parity(i) != b.parity(j))
        cur.fail_at(Kind::Parity, col, "the form is even: B(" + b.name(i) + "," + b.name(j) + ") must vanish");
      if (!doc.gram) doc.gram = MatrixQ::Zero(b.dim(), b.dim());
      const int s = koszul(b.parity(i), b.parity(j));
      form_ledger.set({i, j}, q, cur, col, "form entry");
      form_ledger.set({j, i}, s * q, cur, col, "form entry (by supersymmetry)");
      (*doc.gram)(i, j) = q;
      (*doc.gram)(j, i) = s * q;
    } else if (kw == "cochain2") {
      freeze(cur);
      const int col = cur.column();
      const std::string name = cur.word();
      claim_name(name, "cochain2", cur, col);
      cur.expect('(');
      const int i = lookup(b, cur);
      cur.expect(',');
      const int j = lookup(b, cur);
      cur.expect(';');
      const int k = lookup(b, cur);
      cur.expect(')');
      cur.expect('=');
      const Rational q = cur.signed_number();
      if (!cur.at_end()) cur.fail(Kind::Syntax, "unexpected text after the cochain value");
      if (!is_zero(q) && (b.parity(i) + b.parity(j) + b.parity(k)) != Parity::Even)
        cur.fail_at(Kind::Parity, col, "cochain2 entries are even: " + name + "(" + b.name(i) + "," + b.name(j) + ";" +
                                           b.name(k) + ") must vanish");
      Named2* c = find_named(c2, name);
      if (!c) {
        c2.push_back({name, Named2{zero_cochain2(b.dim()), {}}});
        c = &c2.back().second;
      }
      const int s = -koszul(b.parity(i), b.parity(j));
      c->ledger.set({i, j, k}, q, cur, col, "cochain2 entry");
      c->ledger.set({j, i, k}, s * q, cur, col, "cochain2 entry (by super-antisymmetry)");
      c->value.w(i, j, k) = q;
      c->value.w(j, i, k) = s * q;
    } else if (kw == "cochain3") {
      freeze(cur);
      const int col = cur.column();
      const std::string name = cur.word();
      claim_name(name, "cochain3", cur, col);
      cur.expect('(');
      std::array<int, 3> idx{};
      idx[0] = lookup(b, cur);
      cur.expect(',');
      idx[1] = lookup(b, cur);
      cur.expect(',');
      idx[2] = lookup(b, cur);
      cur.expect(')');
      cur.expect('=');
      const Rational q = cur.signed_number();
      if (!cur.at_end()) cur.fail(Kind::Syntax, "unexpected text after the cochain value");
      if (!is_zero(q) && (b.parity(idx[0]) + b.parity(idx[1]) + b.parity(idx[2])) != Parity::Even)
        cur.fail_at(Kind::Parity, col, "cochain3 entries are even: this entry must vanish");
      Named3* c = find_named(c3, name);
      if (!c) {
        c3.push_back({name, Named3{zero_cochain3(b.dim()), {}}});
        c = &c3.back().second;
      }
      // Every reordering, with the Koszul sign collected over inverted pairs.
      std::array<int, 3> perm{0, 1, 2};
      do {
        int s = 1;
        for (int x = 0; x < 3; ++x)
          for (int y = x + 1; y < 3; ++y)
            if (perm[static_cast<std::size_t>(x)] > perm[static_cast<std::size_t>(y)])
              s *= -koszul(b.parity(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])]),
                           b.parity(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(y)])]));
        const std::array<int, 3> key{idx[static_cast<std::size_t>(perm[0])], idx[static_cast<std::size_t>(perm[1])],
                                     idx[static_cast<std::size_t>(perm[2])]};
        c->ledger.set(key, s * q, cur, col, "cochain3 entry (by super-alternation)");
        c->value.f(key[0], key[1], key[2]) = s * q;
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else if (kw == "scalar2") {
      freeze(cur);
      const int col = cur.column();
      const std::string name = cur.word();
      claim_name(name, "scalar2", cur, col);
      cur.expect('(');
      const int i = lookup(b, cur);
      cur.expect(',');
      const int j = lookup(b, cur);
      cur.expect(')');
      cur.expect('=');
      const Rational q = cur.signed_number();
      if (!cur.at_end()) cur.fail(Kind::Syntax, "unexpected text after the cochain value");
      if (!is_zero(q) && b.parity(i) != b.parity(j))
        cur.fail_at(Kind::Parity, col, "scalar2 entries are even: " + name + "(" + b.name(i) + "," + b.name(j) +
                                           ") must vanish");
      NamedS* c = find_named(s2, name);
      if (!c) {
        s2.push_back({name, NamedS{zero_scalar2(b.dim()), {}}});
        c = &s2.back().second;
      }
      const int s = -koszul(b.parity(i), b.parity(j));
      c->ledger.set({i, j}, q, cur, col, "scalar2 entry");
      c->ledger.set({j, i}, s * q, cur, col, "scalar2 entry (by super-antisymmetry)");
      c->value.p(i, j) = q;
      c->value.p(j, i) = s * q;
    } else {
      cur.fail_at(Kind::Syntax, kw_col, "unknown statement '" + kw + "'");
    }
    if (end == text.size()) break;
  }
  freeze(Cursor("", line_no));
  for (auto& [n, c] : c2) doc.cochain2.emplace_back(n, std::move(c.value));
  for (auto& [n, c] : c3) doc.cochain3.emplace_back(n, std::move(c.value));
  for (auto& [n, c] : s2) doc.scalar2.emplace_back(n, std::move(c.value));
  return doc;
}

std::string format_vector(const GradedBasis& basis, const VectorQ& v) {
  std::string out;
  for (int k = 0; k < basis.dim(); ++k)
    if (!is_zero(v(k))) out += coefficient_term(v(k), basis.name(k), out.empty());
  return out.empty() ? "0" : out;
}

std::string emit(const AlgebraDocument& doc) {
  const GradedBasis& b = doc.basis;
  const int n = b.dim();
  std::ostringstream os;
  if (n > 0) {
    os << "basis";
    for (int i = 0; i < n; ++i) os << ' ' << b.name(i) << ':' << parity_name(b.parity(i));
    os << '\n';
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      VectorQ v(n);
      for (int k = 0; k < n; ++k) v(k) = doc.brackets(i, j, k);
      if (v.isZero()) continue;
      os << "bracket [" << b.name(i) << ',' << b.name(j) << "] = " << format_vector(b, v) << '\n';
    }
  if (doc.gram) {
    bool any = false;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (!is_zero((*doc.gram)(i, j))) {
          os << "form B(" << b.name(i) << ',' << b.name(j) << ") = " << tstar::to_string((*doc.gram)(i, j)) << '\n';
          any = true;
        }
    if (!any && n > 0) os << "form B(" << b.name(0) << ',' << b.name(0) << ") = 0\n";
  }
  for (const auto& [name, c] : doc.cochain2) {
    bool any = false;
    for (const auto& [i, j, k] : cochain2_free_coordinates(b))
      if (!is_zero(c.w(i, j, k))) {
        os << "cochain2 " << name << '(' << b.name(i) << ',' << b.name(j) << ';' << b.name(k)
           << ") = " << tstar::to_string(c.w(i, j, k)) << '\n';
        any = true;
      }
    if (!any && n > 0) os << "cochain2 " << name << '(' << b.name(0) << ',' << b.name(0) << ';' << b.name(0) << ") = 0\n";
  }
  for (const auto& [name, c] : doc.cochain3) {
    bool any = false;
    for (const auto& [i, j, k] : cochain3_free_coordinates(b))
      if (!is_zero(c.f(i, j, k))) {
        os << "cochain3 " << name << '(' << b.name(i) << ',' << b.name(j) << ',' << b.name(k)
           << ") = " << tstar::to_string(c.f(i, j, k)) << '\n';
        any = true;
      }
    if (!any && n > 0) os << "cochain3 " << name << '(' << b.name(0) << ',' << b.name(0) << ',' << b.name(0) << ") = 0\n";
  }
  for (const auto& [name, c] : doc.scalar2) {
    bool any = false;
    for (const auto& [i, j] : scalar2_free_coordinates(b))
      if (!is_zero(c.p(i, j))) {
        os << "scalar2 " << name << '(' << b.name(i) << ',' << b.name(j) << ") = " << tstar::to_string(c.p(i, j)) << '\n';
        any = true;
      }
    if (!any && n > 0) os << "scalar2 " << name << '(' << b.name(0) << ',' << b.name(0) << ") = 0\n";
  }
  return os.str();
}

AlgebraDocument document(const LieSuperalgebra& g) {
  AlgebraDocument doc;
  doc.basis = g.basis();
  doc.brackets = g.constants();
  return doc;
}

AlgebraDocument document(const QuadraticLieSuperalgebra& q) {
  AlgebraDocument doc = document(q.algebra());
  doc.gram = q.form().gram();
  return doc;
}

MatrixQ parse_vectors(const GradedBasis& basis, std::string_view text) {
  std::vector<VectorQ> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    Cursor cur(piece, 1);
    if (cur.at_end()) cur.fail(Kind::Syntax, "empty vector in list");
    cols.push_back(expression(basis, cur));
    if (!cur.at_end()) cur.fail(Kind::Syntax, "unexpected text in vector");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  MatrixQ m(basis.dim(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = cols[c];
  return m;
}

}  // namespace tstar::dsl
