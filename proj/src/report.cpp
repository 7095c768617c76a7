#include "tstar/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace tstar::cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

Report::Report(std::string command, Json args, std::string_view input) {
  root_["schema"] = 1;
  root_["command"] = std::move(command);
  root_["args"] = std::move(args);
  root_["input_digest"] = "sha256:" + sha256_hex(input);
  root_["status"] = "pass";
  root_["checks"] = Json::array();
  root_["dimensions"] = Json::object();
  root_["outputs"] = Json::object();
}

void Report::check(const std::string& name, bool pass, Json witness) {
  Json c;
  c["name"] = name;
  c["pass"] = pass;
  if (!pass && witness.is_null()) witness = "no witness available";
  c["witness"] = std::move(witness);
  root_["checks"].push_back(std::move(c));
  if (!pass) failed_ = true;
  finish_status();
}

void Report::input_error(const std::string& kind, const std::string& message, int line, int column) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  if (line > 0) {
    e["line"] = line;
    e["column"] = column;
  }
  root_["error"] = std::move(e);
  input_failed_ = true;
  finish_status();
}

void Report::finish_status() { root_["status"] = input_failed_ ? "error" : failed_ ? "fail" : "pass"; }

std::string Report::to_json() const { return root_.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << root_["command"].get<std::string>() << "\n";
  os << "status: " << root_["status"].get<std::string>() << "\n";
  if (root_.contains("error")) os << "error: " << root_["error"]["message"].get<std::string>() << "\n";
  for (const Json& c : root_["checks"]) {
    os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (!c["pass"].get<bool>()) os << "  witness: " << scalar_text(c["witness"]);
    os << "\n";
  }
  for (const auto& [k, v] : root_["dimensions"].items()) os << "dim " << k << ": " << scalar_text(v) << "\n";
  for (const auto& [k, v] : root_["outputs"].items()) {
    if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      os << k << ":\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
    } else {
      os << k << ": " << scalar_text(v) << "\n";
    }
  }
  return os.str();
}

Json matrix_json(const MatrixQ& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tstar::cli
