#include "pencil/io.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace pencil {

namespace {

constexpr Index kMaxDim = 16384;

struct Line {
    int number = 0;  // 1-based position in the raw text
    std::string_view text;
};

// Significant lines only: blank lines and '#'-prefixed comment lines are
// dropped, raw line numbers are kept for diagnostics.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') {
            lines.push_back({number, line});
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }
    return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

struct Token {
    std::string_view text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && is_space(line[pos])) {
            ++pos;
        }
        if (pos >= line.size()) {
            break;
        }
        const std::size_t start = pos;
        while (pos < line.size() && !is_space(line[pos])) {
            ++pos;
        }
        tokens.push_back(
            {line.substr(start, pos - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

class Reader {
  public:
    explicit Reader(std::string_view text)
        : lines_(significant_lines(text)) {}

    bool done() const { return idx_ >= lines_.size(); }

    const Line& next(const std::string& expectation) {
        if (done()) {
            throw ParseError(last_line() + 1, 1,
                             "unexpected end of input; expected " + expectation);
        }
        return lines_[idx_++];
    }

    void expect_end() {
        if (!done()) {
            const Line& line = lines_[idx_];
            throw ParseError(line.number, 1, "unexpected trailing content");
        }
    }

    int last_line() const {
        return lines_.empty() ? 0 : lines_.back().number;
    }

  private:
    std::vector<Line> lines_;
    std::size_t idx_ = 0;
};

void expect_marker(Reader& reader, std::string_view word) {
    const std::string expectation = "section marker '" + std::string(word) + "'";
    const Line& line = reader.next(expectation);
    const auto tokens = tokenize(line.text);
    if (tokens.size() != 1 || tokens[0].text != word) {
        throw ParseError(line.number, tokens.empty() ? 1 : tokens[0].column,
                         "expected " + expectation);
    }
}

Index expect_count(Reader& reader, std::string_view key) {
    const std::string expectation = "'" + std::string(key) + " <count>'";
    const Line& line = reader.next(expectation);
    const auto tokens = tokenize(line.text);
    if (tokens.size() != 2 || tokens[0].text != key) {
        throw ParseError(line.number, tokens.empty() ? 1 : tokens[0].column,
                         "expected " + expectation);
    }
    long value = 0;
    const auto [ptr, ec] = std::from_chars(
        tokens[1].text.data(), tokens[1].text.data() + tokens[1].text.size(),
        value);
    if (ec != std::errc() || ptr != tokens[1].text.data() + tokens[1].text.size() ||
        value < 1) {
        throw ParseError(line.number, tokens[1].column,
                         "expected a positive integer");
    }
    if (value > kMaxDim) {
        throw ParseError(line.number, tokens[1].column, "dimension too large");
    }
    return static_cast<Index>(value);
}

double parse_real_part(const Line& line, std::size_t& pos, const char* what) {
    const char* begin = line.text.data() + pos;
    const char* end = line.text.data() + line.text.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
        throw ParseError(line.number, static_cast<int>(pos) + 1,
                         std::string("expected ") + what);
    }
    if (!std::isfinite(value)) {
        throw ParseError(line.number, static_cast<int>(pos) + 1,
                         "entry must be finite");
    }
    pos = static_cast<std::size_t>(ptr - line.text.data());
    return value;
}

// One "re:im" entry starting at pos; afterwards pos rests on whitespace or
// the end of the line.
Complex parse_entry(const Line& line, std::size_t& pos) {
    const double re = parse_real_part(line, pos, "a number");
    if (pos >= line.text.size() || line.text[pos] != ':') {
        throw ParseError(line.number, static_cast<int>(pos) + 1,
                         "expected ':' between real and imaginary part");
    }
    ++pos;
    const double im = parse_real_part(line, pos, "an imaginary part");
    if (pos < line.text.size() && !is_space(line.text[pos])) {
        throw ParseError(line.number, static_cast<int>(pos) + 1,
                         "unexpected character after entry");
    }
    return {re, im};
}

void parse_row(Reader& reader, Matrix& M, Index row, Index cols,
               std::string_view section) {
    const Line& line =
        reader.next("a data row of section '" + std::string(section) + "'");
    std::size_t pos = 0;
    Index col = 0;
    while (true) {
        while (pos < line.text.size() && is_space(line.text[pos])) {
            ++pos;
        }
        if (pos >= line.text.size()) {
            break;
        }
        if (col >= cols) {
            throw ParseError(line.number, static_cast<int>(pos) + 1,
                             "row has more than " + std::to_string(cols) +
                                 " entries");
        }
        M(row, col++) = parse_entry(line, pos);
    }
    if (col != cols) {
        throw DimensionMismatch("line " + std::to_string(line.number) +
                                ": row has " + std::to_string(col) +
                                " entries, expected " + std::to_string(cols));
    }
}

Matrix parse_rows(Reader& reader, Index rows, Index cols,
                  std::string_view section) {
    Matrix M(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        parse_row(reader, M, i, cols, section);
    }
    return M;
}

void append_row(std::string& out, const Matrix& M, Index row) {
    for (Index j = 0; j < M.cols(); ++j) {
        if (j > 0) {
            out += ' ';
        }
        out += format_complex(M(row, j));
    }
    out += '\n';
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_complex(Complex v) {
    return format_double(v.real()) + ":" + format_double(v.imag());
}

Pencil parse_pencil(std::string_view text) {
    Reader reader(text);
    {
        const Line& line = reader.next("header 'PENCIL 1'");
        const auto tokens = tokenize(line.text);
        if (tokens.size() != 2 || tokens[0].text != "PENCIL" ||
            tokens[1].text != "1") {
            throw ParseError(line.number, tokens.empty() ? 1 : tokens[0].column,
                             "expected header 'PENCIL 1'");
        }
    }
    const Index n = expect_count(reader, "dim");
    expect_marker(reader, "E");
    Matrix E = parse_rows(reader, n, n, "E");
    expect_marker(reader, "A");
    Matrix A = parse_rows(reader, n, n, "A");
    reader.expect_end();
    return Pencil(std::move(E), std::move(A));
}

std::string print_pencil(const Pencil& p) {
    std::string out = "PENCIL 1\ndim " + std::to_string(p.dim()) + "\nE\n";
    for (Index i = 0; i < p.dim(); ++i) {
        append_row(out, p.E(), i);
    }
    out += "A\n";
    for (Index i = 0; i < p.dim(); ++i) {
        append_row(out, p.A(), i);
    }
    return out;
}

Matrix parse_matrix(std::string_view text) {
    Reader reader(text);
    {
        const Line& line = reader.next("header 'MATRIX 1'");
        const auto tokens = tokenize(line.text);
        if (tokens.size() != 2 || tokens[0].text != "MATRIX" ||
            tokens[1].text != "1") {
            throw ParseError(line.number, tokens.empty() ? 1 : tokens[0].column,
                             "expected header 'MATRIX 1'");
        }
    }
    const Index rows = expect_count(reader, "rows");
    const Index cols = expect_count(reader, "cols");
    Matrix M = parse_rows(reader, rows, cols, "data");
    reader.expect_end();
    return M;
}

std::string print_matrix(const Matrix& M) {
    std::string out = "MATRIX 1\nrows " + std::to_string(M.rows()) +
                      "\ncols " + std::to_string(M.cols()) + "\n";
    for (Index i = 0; i < M.rows(); ++i) {
        append_row(out, M, i);
    }
    return out;
}

Vector parse_vector(std::string_view text) {
    Reader reader(text);
    std::vector<Complex> entries;
    while (!reader.done()) {
        const Line& line = reader.next("a vector entry");
        std::size_t pos = line.text.find_first_not_of(" \t");
        entries.push_back(parse_entry(line, pos));
        while (pos < line.text.size() && is_space(line.text[pos])) {
            ++pos;
        }
        if (pos < line.text.size()) {
            throw ParseError(line.number, static_cast<int>(pos) + 1,
                             "expected one entry per line");
        }
    }
    Vector v(static_cast<Index>(entries.size()));
    for (Index i = 0; i < v.size(); ++i) {
        v(i) = entries[static_cast<std::size_t>(i)];
    }
    return v;
}

std::string print_vector(const Vector& v) {
    std::string out;
    for (Index i = 0; i < v.size(); ++i) {
        out += format_complex(v(i));
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const Trajectory& traj) {
    const Index n = traj.states.empty() ? 0 : traj.states.front().size();
    std::string out = "t,norm_Ex";
    for (Index i = 1; i <= n; ++i) {
        out += ",x" + std::to_string(i) + "_re,x" + std::to_string(i) + "_im";
    }
    out += '\n';
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        out += format_double(traj.times[row]);
        out += ',';
        out += format_double(traj.ex_norms[row]);
        const Vector& state = traj.states[row];
        for (Index i = 0; i < n; ++i) {
            out += ',';
            out += format_double(state(i).real());
            out += ',';
            out += format_double(state(i).imag());
        }
        out += '\n';
    }
    return out;
}

}  // namespace pencil
