#include "mfpt/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace mfpt {

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

constexpr std::string_view kBanner = "%%MatrixMarket";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_ws(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view tok, std::size_t line, std::size_t col) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (b != e && *b == '+') ++b;
  double v = 0.0;
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc{} || res.ptr != e) {
    throw ParseError("invalid number '" + std::string(tok) + "'", line, col);
  }
  return v;
}

std::size_t parse_index(std::string_view tok, std::size_t line,
                        std::size_t col) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw ParseError("invalid integer '" + std::string(tok) + "'", line, col);
  }
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Mat<double> read_market(std::istream& in, std::string_view banner) {
  std::size_t line_no = 1;
  const auto head = split_ws(banner);
  if (head.size() != 5 || lower(head[1].text) != "matrix") {
    throw ParseError("malformed Matrix Market banner", line_no, 1);
  }
  const std::string layout = lower(head[2].text);
  if (layout != "array" && layout != "coordinate") {
    throw ParseError("unsupported layout '" + std::string(head[2].text) + "'",
                     line_no, head[2].column);
  }
  const std::string field = lower(head[3].text);
  if (field != "real" && field != "double" && field != "integer") {
    throw ParseError("unsupported field '" + std::string(head[3].text) + "'",
                     line_no, head[3].column);
  }
  if (lower(head[4].text) != "general") {
    throw ParseError("only general symmetry is supported", line_no,
                     head[4].column);
  }
  const bool coordinate = layout == "coordinate";

  std::string line;
  std::vector<Token> toks;
  // Next non-comment, non-blank line.
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto t = trim(line);
      if (t.empty() || t.front() == '%') continue;
      toks = split_ws(line);
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("missing size line", line_no + 1, 1);
  const std::size_t want = coordinate ? 3 : 2;
  if (toks.size() != want) {
    throw ParseError("size line needs " + std::to_string(want) + " integers",
                     line_no, 1);
  }
  const std::size_t rows = parse_index(toks[0].text, line_no, toks[0].column);
  const std::size_t cols = parse_index(toks[1].text, line_no, toks[1].column);
  Mat<double> a(rows, cols);

  if (coordinate) {
    const std::size_t nnz = parse_index(toks[2].text, line_no, toks[2].column);
    std::vector<bool> seen(rows * cols, false);
    for (std::size_t k = 0; k < nnz; ++k) {
      if (!next_line()) {
        throw ParseError("expected " + std::to_string(nnz) + " entries, got " +
                             std::to_string(k),
                         line_no + 1, 1);
      }
      if (toks.size() != 3) throw ParseError("entry needs i j value", line_no, 1);
      const std::size_t i = parse_index(toks[0].text, line_no, toks[0].column);
      const std::size_t j = parse_index(toks[1].text, line_no, toks[1].column);
      if (i < 1 || i > rows) {
        throw ParseError("row index out of range", line_no, toks[0].column);
      }
      if (j < 1 || j > cols) {
        throw ParseError("column index out of range", line_no, toks[1].column);
      }
      if (seen[(i - 1) * cols + (j - 1)]) {
        throw ParseError("duplicate entry", line_no, toks[0].column);
      }
      seen[(i - 1) * cols + (j - 1)] = true;
      a(i - 1, j - 1) = parse_double(toks[2].text, line_no, toks[2].column);
    }
  } else {
    // Column-major, one value per line by convention; tolerate several.
    std::size_t k = 0;
    while (k < rows * cols) {
      if (!next_line()) {
        throw ParseError("expected " + std::to_string(rows * cols) +
                             " values, got " + std::to_string(k),
                         line_no + 1, 1);
      }
      for (const auto& t : toks) {
        if (k == rows * cols) {
          throw ParseError("too many values", line_no, t.column);
        }
        a(k % rows, k / rows) = parse_double(t.text, line_no, t.column);
        ++k;
      }
    }
  }
  if (next_line()) throw ParseError("trailing data", line_no, 1);
  return a;
}

Mat<double> read_csv(std::istream& in, std::string first) {
  std::vector<double> data;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::string line = std::move(first);
  bool have = true;
  while (have) {
    ++line_no;
    const auto t = trim(line);
    if (!t.empty() && t.front() != '#') {
      std::size_t count = 0;
      std::size_t pos = 0;
      std::string_view sv(line);
      while (true) {
        const std::size_t comma = sv.find(',', pos);
        const std::size_t end = comma == std::string_view::npos ? sv.size() : comma;
        std::string_view cell = sv.substr(pos, end - pos);
        std::size_t lead = 0;
        while (lead < cell.size() && is_space(cell[lead])) ++lead;
        const auto value = trim(cell);
        if (value.empty()) throw ParseError("empty cell", line_no, pos + 1);
        data.push_back(parse_double(value, line_no, pos + lead + 1));
        ++count;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (rows == 0) {
        cols = count;
      } else if (count != cols) {
        throw ParseError("row has " + std::to_string(count) +
                             " values, expected " + std::to_string(cols),
                         line_no, 1);
      }
      ++rows;
    }
    have = static_cast<bool>(std::getline(in, line));
  }
  return Mat<double>(rows, cols, std::move(data));
}

}  // namespace

Mat<double> read_matrix(std::istream& in) {
  std::string first;
  if (!std::getline(in, first)) throw ParseError("empty input", 1, 1);
  if (std::string_view(first).starts_with(kBanner)) return read_market(in, first);
  return read_csv(in, std::move(first));
}

void write_matrix(std::ostream& out, const Mat<double>& a, MatrixFormat fmt) {
  switch (fmt) {
    case MatrixFormat::Auto:
    case MatrixFormat::MarketCoordinate: {
      std::size_t nnz = 0;
      for (double v : a.data()) nnz += v != 0.0;
      out << "%%MatrixMarket matrix coordinate real general\n";
      out << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n';
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (a(i, j) != 0.0) {
            out << i + 1 << ' ' << j + 1 << ' ' << format_real(a(i, j)) << '\n';
          }
        }
      }
      break;
    }
    case MatrixFormat::MarketArray:
      out << "%%MatrixMarket matrix array real general\n";
      out << a.rows() << ' ' << a.cols() << '\n';
      for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
          out << format_real(a(i, j)) << '\n';
        }
      }
      break;
    case MatrixFormat::Csv:
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (j > 0) out << ',';
          out << format_real(a(i, j));
        }
        out << '\n';
      }
      break;
  }
}

TransitionMatrix<double> load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    Mat<double> a = read_matrix(in);
    if (!a.square()) {
      throw DimensionMismatch("'" + path + "': matrix is " +
                              std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + ", not square");
    }
    return TransitionMatrix<double>(std::move(a));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + std::string(e.what()).substr(
                                       0, std::string(e.what()).rfind(" (line")),
                     e.line(), e.column());
  }
}

void save_matrix(const TransitionMatrix<double>& p, const std::string& path,
                 MatrixFormat fmt) {
  if (fmt == MatrixFormat::Auto) {
    fmt = std::string_view(path).ends_with(".csv") ? MatrixFormat::Csv
                                                   : MatrixFormat::MarketCoordinate;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  write_matrix(out, p.matrix(), fmt);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace mfpt
