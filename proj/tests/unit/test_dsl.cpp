#include "catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tstar/dsl.hpp"
#include "tstar/gallery.hpp"

using namespace tstar;
using tstar::testing::q;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(TSTAR_CORPUS_DIR))
    if (e.path().extension() == ".dsl") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

dsl::ParseError parse_failure(const std::string& text) {
  try {
    dsl::parse(text);
  } catch (const dsl::ParseError& e) {
    return e;
  }
  FAIL("parsed without error: " << text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("corpus files are parse/emit fixed points") {
  const auto files = corpus();
  REQUIRE(files.size() >= 10);
  for (const auto& f : files) {
    INFO(f.filename().string());
    const std::string text = slurp(f);
    const dsl::AlgebraDocument doc = dsl::parse(text);
    const std::string canon = dsl::emit(doc);
    CHECK(dsl::parse(canon) == doc);
    CHECK(dsl::emit(dsl::parse(canon)) == canon);
    if (f.stem().string().find("messy") == std::string::npos) CHECK(canon == text);
  }
}

TEST_CASE("out-of-order text fills partners") {
  const auto doc = dsl::parse(slurp(std::filesystem::path(TSTAR_CORPUS_DIR) / "oscillator_messy.dsl"));
  const auto osc = stock("oscillator");
  CHECK(doc.algebra().constants() == osc.algebra.constants());
  REQUIRE(doc.gram);
  CHECK(*doc.gram == osc.form->gram());
}

TEST_CASE("heisenberg text matches the stock algebra") {
  const auto doc = dsl::parse("basis x:even y:even z:even\nbracket [x,y] = z\n");
  CHECK(doc.algebra().constants() == stock("heisenberg3").algebra.constants());
  CHECK(doc.basis == stock("heisenberg3").algebra.basis());
  CHECK_FALSE(doc.gram);
  CHECK_THROWS_AS(doc.form(), std::invalid_argument);
}

TEST_CASE("documents of gallery algebras roundtrip") {
  for (const auto& [name, g] : testing::gallery()) {
    INFO(name);
    const auto doc = dsl::document(g);
    CHECK(dsl::parse(dsl::emit(doc)).algebra().constants() == g.constants());
  }
  const auto c2 = build_class_C_example(2);
  const auto doc = dsl::parse(dsl::emit(dsl::document(c2)));
  CHECK(doc.quadratic().form() == c2.form());
}

TEST_CASE("cochain lines") {
  const auto doc = dsl::parse(slurp(std::filesystem::path(TSTAR_CORPUS_DIR) / "h3_cochains.dsl"));
  const auto* w = doc.find_cochain2("w");
  REQUIRE(w);
  CHECK(w->w(0, 1, 2) == 1);
  CHECK(w->w(1, 0, 2) == -1);
  const auto* phi = doc.find_scalar2("phi");
  REQUIRE(phi);
  CHECK(phi->p(0, 1) == q(2, 3));
  CHECK(phi->p(1, 0) == q(-2, 3));
  CHECK(doc.find_cochain3("w") == nullptr);

  const auto odd = dsl::parse(slurp(std::filesystem::path(TSTAR_CORPUS_DIR) / "abelian12.dsl"));
  const auto* f = odd.find_cochain3("f");
  REQUIRE(f);
  CHECK(f->f(0, 1, 2) == 1);
  CHECK(f->f(0, 2, 1) == 1);  // odd-odd swap keeps the sign
  CHECK(f->f(1, 0, 2) == -1);
  const auto* p = odd.find_scalar2("phi");
  REQUIRE(p);
  CHECK(p->p(1, 2) == p->p(2, 1));
}

TEST_CASE("parse errors carry kind, line and column") {
  struct Case {
    std::string text;
    dsl::ParseError::Kind kind;
    int line, column;
  };
  const std::string head = "basis x:even y:even z:odd\n";
  const Case cases[] = {
      {head + "bracket [x,y] = \n", dsl::ParseError::Kind::Syntax, 2, 0},
      {head + "bracket [x,w] = x\n", dsl::ParseError::Kind::Undeclared, 2, 12},
      {head + "bracket [x,y] = x\nbracket [y,x] = y\n", dsl::ParseError::Kind::Contradiction, 3, 0},
      {head + "bracket [x,y] = z\n", dsl::ParseError::Kind::Parity, 2, 0},
      {head + "form B(x,z) = 1\n", dsl::ParseError::Kind::Parity, 2, 0},
      {"basis x:even x:odd\n", dsl::ParseError::Kind::Duplicate, 1, 14},
      {head + "frobnicate\n", dsl::ParseError::Kind::Syntax, 2, 1},
      {head + "bracket [x,y] = 0\nbasis w:even\n", dsl::ParseError::Kind::Syntax, 3, 1},
      {"basis x:even\nbracket [x,x] = 1\n", dsl::ParseError::Kind::Syntax, 2, 0},
      {"basis x:even\nbracket [x,x] = 2/-3*x\n", dsl::ParseError::Kind::Syntax, 2, 0},
  };
  for (const Case& c : cases) {
    INFO(c.text);
    const dsl::ParseError e = parse_failure(c.text);
    CHECK(e.kind() == c.kind);
    CHECK(e.line() == c.line);
    CHECK(e.column() >= 1);
    if (c.column > 0) CHECK(e.column() == c.column);
    CHECK(std::string(e.what()).size() > 0);
  }
}

TEST_CASE("vector lists") {
  const auto e = build(stock("heisenberg3").algebra, zero_cochain2(3));
  const GradedBasis& b = e.total.basis();
  const MatrixQ m = dsl::parse_vectors(b, "x* + y*, 2*z - 1/3*x");
  REQUIRE(m.cols() == 2);
  CHECK(m.col(0) == VectorQ(unit_vector(6, 3) + unit_vector(6, 4)));
  CHECK(m(2, 1) == 2);
  CHECK(m(0, 1) == q(-1, 3));
  CHECK(dsl::format_vector(b, m.col(1)) == "-1/3*x + 2*z");
  CHECK(dsl::format_vector(b, VectorQ::Zero(6)) == "0");
  CHECK(dsl::parse_vectors(b, dsl::format_vector(b, m.col(1))) == MatrixQ(m.col(1)));
  CHECK_THROWS_AS(dsl::parse_vectors(b, "x, , y"), dsl::ParseError);
  CHECK_THROWS_AS(dsl::parse_vectors(b, "w"), dsl::ParseError);
}

TEST_CASE("labels with repeated stars and primes") {
  const auto g = stock("heisenberg3").algebra;
  const auto sum = direct_sum(g, g);
  CHECK(sum.basis().name(3) == "x'");
  const auto doc = dsl::document(sum);
  CHECK(dsl::parse(dsl::emit(doc)) == doc);
  const auto e = build(sum, zero_cochain2(6));
  const auto ext = dsl::document(e.total);
  CHECK(dsl::parse(dsl::emit(ext)) == ext);
  const auto starred = dsl::parse("basis x:even x*:even x**:odd x***:odd\n");
  CHECK(starred.basis.name(3) == "x***");
}
