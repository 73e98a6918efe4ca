#include "exactgm/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "exactgm/error.hpp"

namespace exactgm {

namespace {

struct Line {
    std::string text;
    int number = 0;
};

/// Significant lines only: blanks and '#' comments are dropped.
std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string trimmed;
        for (char c : raw) {
            if (c == '#') break;
            trimmed.push_back(c);
        }
        std::size_t begin = trimmed.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = trimmed.find_last_not_of(" \t\r");
        lines.push_back({trimmed.substr(begin, end - begin + 1), number});
    }
    return lines;
}

int parse_count(const std::string& token, const Line& line, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + token + "'",
                         line.number);
    }
}

AdjacencyMatrix parse_matrix_format(const std::vector<Line>& lines) {
    const int n = parse_count(lines[0].text, lines[0], "vertex count");
    if (n < 1) throw ParseError("vertex count must be positive", lines[0].number);
    if (static_cast<int>(lines.size()) != n + 1) {
        throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                         std::to_string(lines.size() - 1),
                         lines.back().number);
    }
    IntMatrix entries = IntMatrix::Zero(n, n);
    std::vector<int> row_line(n, 0);
    for (int i = 0; i < n; ++i) {
        const Line& line = lines[i + 1];
        row_line[i] = line.number;
        std::string digits;
        for (char c : line.text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            digits.push_back(c);
        }
        if (static_cast<int>(digits.size()) != n) {
            throw ParseError("row has " + std::to_string(digits.size()) +
                             " entries, expected " + std::to_string(n),
                             line.number);
        }
        for (int j = 0; j < n; ++j) {
            if (digits[j] != '0' && digits[j] != '1') {
                throw ParseError(std::string("entry must be 0 or 1, got '") +
                                 digits[j] + "'", line.number);
            }
            entries(i, j) = digits[j] - '0';
        }
        if (entries(i, i) != 0) {
            throw ParseError("self-loop at vertex " + std::to_string(i + 1),
                             line.number);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (entries(i, j) != entries(j, i)) {
                throw ParseError("matrix is asymmetric at (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")",
                                 row_line[i]);
            }
        }
    }
    return AdjacencyMatrix(n, std::move(entries));
}

AdjacencyMatrix parse_edge_list(const std::vector<Line>& lines) {
    const Line& header = lines[0];
    const int n = parse_count(header.text.substr(2), header, "vertex count after n=");
    if (n < 1) throw ParseError("vertex count must be positive", header.number);

    IntMatrix entries = IntMatrix::Zero(n, n);
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        std::istringstream stream(line.text);
        int u = 0, v = 0;
        std::string extra;
        if (!(stream >> u >> v) || (stream >> extra)) {
            throw ParseError("expected 'u v' edge, got '" + line.text + "'",
                             line.number);
        }
        if (u < 1 || v < 1 || u > n || v > n) {
            throw ParseError("edge endpoint out of range 1.." + std::to_string(n),
                             line.number);
        }
        if (u == v) {
            throw ParseError("self-loop at vertex " + std::to_string(u), line.number);
        }
        entries(u - 1, v - 1) = 1;
        entries(v - 1, u - 1) = 1;
    }
    return AdjacencyMatrix(n, std::move(entries));
}

}  // namespace

AdjacencyMatrix parse_graph(std::istream& in) {
    const std::vector<Line> lines = significant_lines(in);
    if (lines.empty()) throw ParseError("empty graph input");
    if (lines[0].text.rfind("n=", 0) == 0) return parse_edge_list(lines);
    return parse_matrix_format(lines);
}

AdjacencyMatrix parse_graph_text(const std::string& text) {
    std::istringstream stream(text);
    return parse_graph(stream);
}

AdjacencyMatrix parse_graph_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw ParseError("cannot open '" + path + "'");
    return parse_graph(stream);
}

SeparableQuadraticObjective parse_objective(std::istream& in) {
    const std::vector<Line> lines = significant_lines(in);
    if (lines.empty()) throw ParseError("empty objective input");
    if (lines[0].text.rfind("n=", 0) != 0) {
        throw ParseError("objective must start with 'n=<k>'", lines[0].number);
    }
    const int n = parse_count(lines[0].text.substr(2), lines[0],
                              "dimension after n=");
    if (n < 1) throw ParseError("dimension must be positive", lines[0].number);

    RatMatrix quad = RatMatrix::Zero(n, n);
    RatMatrix linear = RatMatrix::Zero(n, n);
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        std::istringstream stream(line.text);
        std::string kind, coeff;
        int i = 0, j = 0;
        if (!(stream >> kind >> i >> j >> coeff)) {
            throw ParseError("expected '<quad|lin> i j coefficient'", line.number);
        }
        if (i < 1 || j < 1 || i > n || j > n) {
            throw ParseError("index out of range 1.." + std::to_string(n),
                             line.number);
        }
        Rational value;
        try {
            value = parse_rational(coeff);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line.number);
        }
        if (kind == "quad") {
            quad(i - 1, j - 1) = value;
        } else if (kind == "lin") {
            linear(i - 1, j - 1) = value;
        } else {
            throw ParseError("unknown term kind '" + kind + "'", line.number);
        }
    }
    return SeparableQuadraticObjective(std::move(quad), std::move(linear));
}

SeparableQuadraticObjective parse_objective_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw ParseError("cannot open '" + path + "'");
    return parse_objective(stream);
}

}  // namespace exactgm
