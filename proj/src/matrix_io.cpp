#include "qig/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qig {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "line " << line << ", column " << col;
  return os.str();
}

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw ParseError(source + ": " + what);
}

void read_block(const nlohmann::json& doc, const char* field, Index n, const std::string& source,
                Eigen::MatrixXd& out) {
  const auto& rows = doc.at(field);
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
    std::ostringstream os;
    os << "field '" << field << "': expected an array of " << n << " rows";
    fail(source, os.str());
  }
  out.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      std::ostringstream os;
      os << "field '" << field << "' row " << i << ": expected " << n << " entries";
      fail(source, os.str());
    }
    for (Index j = 0; j < n; ++j) {
      const auto& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) {
        std::ostringstream os;
        os << "field '" << field << "' entry [" << i << "][" << j << "]: expected a number, got "
           << v.type_name();
        fail(source, os.str());
      }
      out(i, j) = v.get<double>();
      if (!std::isfinite(out(i, j))) {
        std::ostringstream os;
        os << "field '" << field << "' entry [" << i << "][" << j << "] is not finite";
        fail(source, os.str());
      }
    }
  }
}

}  // namespace

HermitianOperator matrix_from_json(const nlohmann::json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "expected a JSON object with fields n, re, im");
  if (!doc.contains("n")) fail(source, "missing field 'n'");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    fail(source, "field 'n': expected a positive integer");
  }
  const Index n = static_cast<Index>(doc["n"].get<long long>());
  if (!doc.contains("re")) fail(source, "missing field 're'");
  Eigen::MatrixXd re, im = Eigen::MatrixXd::Zero(n, n);
  read_block(doc, "re", n, source, re);
  if (doc.contains("im")) read_block(doc, "im", n, source, im);
  Matrix m(n, n);
  m.real() = re;
  m.imag() = im;
  HermitianOperator a(m);
  const double limit = kSymmetrizationLimit * std::max(m.norm(), 1e-300);
  if (a.symmetrization_residual() > limit) {
    std::ostringstream os;
    os.precision(6);
    os << "matrix is not Hermitian (anti-Hermitian residual " << a.symmetrization_residual()
       << " exceeds " << kSymmetrizationLimit << " * ||A||)";
    fail(source, os.str());
  }
  return a;
}

HermitianOperator parse_matrix(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(source, "JSON syntax error at " + line_col(text, e.byte) + ": " + e.what());
  }
  return matrix_from_json(doc, source);
}

HermitianOperator read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), path);
}

nlohmann::json matrix_to_json(const HermitianOperator& a) {
  const Index n = a.dim();
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  bool complex = false;
  for (Index i = 0; i < n; ++i) {
    nlohmann::json rr = nlohmann::json::array(), ir = nlohmann::json::array();
    for (Index j = 0; j < n; ++j) {
      rr.push_back(a(i, j).real());
      ir.push_back(a(i, j).imag());
      complex = complex || a(i, j).imag() != 0.0;
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  nlohmann::json doc{{"n", n}, {"re", std::move(re)}};
  if (complex) doc["im"] = std::move(im);
  return doc;
}

std::string format_matrix(const HermitianOperator& a) { return matrix_to_json(a).dump(); }

void write_matrix_file(const std::string& path, const HermitianOperator& a) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << format_matrix(a) << '\n';
}

}  // namespace qig
