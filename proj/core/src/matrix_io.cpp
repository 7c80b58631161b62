#include "semihilbert/matrix_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semihilbert/errors.hpp"

namespace semihilbert {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

std::size_t dimension(const json& doc, const char* field) {
  if (!doc.contains(field)) parse_error(std::string("missing field \"") + field + "\"");
  const json& v = doc[field];
  if (!v.is_number_unsigned()) {
    if (v.is_number_integer() && v.get<long long>() < 0) {
      throw Error(ErrorKind::ShapeError, std::string("field \"") + field + "\" is negative");
    }
    parse_error(std::string("field \"") + field + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

void read_part(const json& doc, const char* field, std::size_t rows, std::size_t cols,
               ComplexMatrix& out, bool imaginary) {
  if (!doc.contains(field)) parse_error(std::string("missing field \"") + field + "\"");
  const json& part = doc[field];
  if (!part.is_array() || part.size() != rows) {
    parse_error(std::string("field \"") + field + "\" must be an array of " +
                std::to_string(rows) + " rows");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = part[i];
    const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols) {
      parse_error("field \"" + where + "\" must be an array of " + std::to_string(cols) +
                  " numbers");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row[j].is_number()) {
        parse_error("field \"" + where + "[" + std::to_string(j) + "]\" is not a number");
      }
      const double v = row[j].get<double>();
      if (!std::isfinite(v)) {
        parse_error("field \"" + where + "[" + std::to_string(j) + "]\" is not finite");
      }
      if (imaginary) {
        out(i, j).imag(v);
      } else {
        out(i, j).real(v);
      }
    }
  }
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorKind::ShapeError, "empty matrix");
  if (!m.all_finite()) throw Error(ErrorKind::ShapeError, "matrix has non-finite entries");
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ri = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump() + "\n";
}

ComplexMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error("syntax error at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) parse_error("top level must be an object");
  const std::size_t rows = dimension(doc, "rows");
  const std::size_t cols = dimension(doc, "cols");
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::ShapeError,
                "empty matrix (" + std::to_string(rows) + "x" + std::to_string(cols) + ")");
  }
  ComplexMatrix m(rows, cols);
  read_part(doc, "re", rows, cols, m, false);
  read_part(doc, "im", rows, cols, m, true);
  return m;
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return matrix_from_json(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  const std::string text = matrix_to_json(m);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ConfigError, "cannot write " + path.string());
  out << text;
}

}  // namespace semihilbert
