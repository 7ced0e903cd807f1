#include "arsss/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace arsss {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int parse_small_int(std::string_view key, std::string_view value) {
  const Rational r = parse_rational(value);
  if (!is_integer(r)) {
    throw Error(ErrorCode::ParseError, "header field " + std::string(key) + " is not an integer");
  }
  return static_cast<int>(to_int64(boost::multiprecision::numerator(r)));
}

void parse_header_line(std::string_view line, MatrixHeader& header) {
  for (auto token : split_ws(line.substr(1))) {
    if (token == "block") {
      header.block = true;
      continue;
    }
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "n") header.n = parse_small_int(key, value);
    else if (key == "k") header.k = parse_small_int(key, value);
    else if (key == "L") header.L = parse_small_int(key, value);
    else if (key == "l") header.l = parse_small_int(key, value);
    else if (key == "kind") header.kind = std::string(value);
  }
}

template <class T, class Convert>
Matrix<T> parse_rows(std::string_view text, MatrixHeader* header, Convert convert) {
  std::vector<std::vector<T>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#') {
      if (header) parse_header_line(line.substr(line.find('#')), *header);
      continue;
    }
    // Score summary line written after a constructed matrix.
    if (tokens.front().starts_with("OC=")) continue;
    std::vector<T> row;
    row.reserve(tokens.size());
    for (auto tok : tokens) row.push_back(convert(parse_rational(tok)));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "matrix rows have different lengths");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::ParseError, "matrix text has no rows");
  }
  Matrix<T> m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix(const RatMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_header(const MatrixHeader& h) {
  auto field = [](const char* key, const std::optional<int>& v) {
    return v ? std::string(" ") + key + "=" + std::to_string(*v) : std::string();
  };
  std::string out;
  if (h.block) {
    out = "# block" + field("n", h.n) + field("k", h.k) + field("l", h.l) + " kind=" + h.kind + "\n";
    if (h.L) out += "# L=" + std::to_string(*h.L) + "\n";
  } else {
    out = "# generator" + field("n", h.n) + field("k", h.k) + field("L", h.L) + " kind=" + h.kind + "\n";
  }
  return out;
}

MatrixFile parse_matrix_file(std::string_view text) {
  MatrixFile file;
  file.matrix = parse_rows<std::int64_t>(text, &file.header, [](const Rational& r) {
    if (!is_integer(r)) {
      throw Error(ErrorCode::ParseError, "generator entries must be integers, got " + to_string(r));
    }
    return to_int64(boost::multiprecision::numerator(r));
  });
  return file;
}

RatMatrix parse_rational_matrix(std::string_view text) {
  return parse_rows<Rational>(text, nullptr, [](const Rational& r) { return r; });
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open matrix file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_file(buffer.str());
}

std::string fingerprint(const IntMatrix& m) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : format_matrix(m)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace arsss
