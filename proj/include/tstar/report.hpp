#ifndef TSTAR_REPORT_HPP
#define TSTAR_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "tstar/graded.hpp"

namespace tstar::cli {

using Json = nlohmann::ordered_json;

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Verification report, schema 1:
///   schema, command, args, input_digest, status, checks[{name, pass,
///   witness}], dimensions, outputs, and `error` for input errors.
/// Key order is fixed, so identical runs give identical bytes.
class Report {
 public:
  Report(std::string command, Json args, std::string_view input);

  /// A failing check must name a witness; an empty one is replaced by a
  /// note saying none was available.
  void check(const std::string& name, bool pass, Json witness = nullptr);
  void input_error(const std::string& kind, const std::string& message, int line = 0, int column = 0);

  Json& dimensions() { return root_["dimensions"]; }
  Json& outputs() { return root_["outputs"]; }
  const Json& json() const { return root_; }

  bool failed() const { return failed_; }
  bool input_failed() const { return input_failed_; }
  int exit_code() const { return input_failed_ ? 2 : failed_ ? 1 : 0; }

  std::string to_json() const;
  std::string to_text() const;

 private:
  void finish_status();

  Json root_;
  bool failed_ = false;
  bool input_failed_ = false;
};

/// Basis labels of an index tuple.
template <typename Indices>
Json labels(const GradedBasis& b, const Indices& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(b.name(i));
  return out;
}

Json matrix_json(const MatrixQ& m);

}  // namespace tstar::cli

#endif  // TSTAR_REPORT_HPP
