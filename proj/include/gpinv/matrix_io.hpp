#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpinv/matrix.hpp"

namespace gpinv {

enum class MatrixFormat { tsv, csv, matrix_market };

inline MatrixFormat parse_format_name(const std::string& name) {
    if (name == "tsv") return MatrixFormat::tsv;
    if (name == "csv") return MatrixFormat::csv;
    if (name == "matrix-market-array") return MatrixFormat::matrix_market;
    throw std::invalid_argument("unknown matrix format '" + name +
                                "' (expected tsv, csv or matrix-market-array)");
}

namespace detail {

/// Fixed-point with `precision` fractional digits; the absolute
/// round-trip error stays below 10^(1-precision) for any entry the
/// library produces.
inline std::string format_entry(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

} // namespace detail

/// Writes row-major TSV/CSV ('.' decimal separator, newline-terminated)
/// or Matrix Market "array real general" (column-major, symmetry written
/// out rather than exploited).
inline void write_matrix(std::ostream& os, const Matrix& m, MatrixFormat format,
                         int precision = 12) {
    if (precision < 1 || precision > 17)
        throw std::invalid_argument("write_matrix: precision must be in 1..17");
    const std::size_t n = m.dim();
    switch (format) {
    case MatrixFormat::tsv:
    case MatrixFormat::csv: {
        const char sep = format == MatrixFormat::tsv ? '\t' : ',';
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) os << sep;
                os << detail::format_entry(m(i, j), precision);
            }
            os << '\n';
        }
        break;
    }
    case MatrixFormat::matrix_market: {
        os << "%%MatrixMarket matrix array real general\n";
        os << n << ' ' << n << '\n';
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                os << detail::format_entry(m(i, j), precision) << '\n';
        break;
    }
    }
}

/// Reads any of the three written formats back, auto-detected: a
/// "%%MatrixMarket" banner selects the array reader, otherwise the
/// separator (tab or comma) is sniffed. Requires a square result.
inline Matrix read_matrix(std::istream& is) {
    std::string first;
    if (!std::getline(is, first)) throw std::runtime_error("read_matrix: empty input");

    if (first.rfind("%%MatrixMarket", 0) == 0) {
        if (first.find("matrix array real general") == std::string::npos)
            throw std::runtime_error("read_matrix: unsupported MatrixMarket header: " + first);
        std::string line;
        while (std::getline(is, line)) {
            if (!line.empty() && line[0] == '%') continue;
            break;
        }
        std::istringstream dims(line);
        std::size_t rows = 0, cols = 0;
        if (!(dims >> rows >> cols) || rows != cols || rows == 0)
            throw std::runtime_error("read_matrix: bad MatrixMarket dimensions");
        Matrix m(rows);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) {
                double v = 0.0;
                if (!(is >> v)) throw std::runtime_error("read_matrix: truncated MatrixMarket data");
                m(i, j) = v;
            }
        return m;
    }

    const char sep = first.find('\t') != std::string::npos ? '\t'
                     : first.find(',') != std::string::npos ? ','
                                                            : ' ';
    std::vector<std::vector<double>> rows;
    std::string line = first;
    do {
        if (line.empty() || line == "\r") continue;
        std::vector<double> row;
        std::istringstream cell_stream(line);
        std::string cell;
        while (std::getline(cell_stream, cell, sep)) {
            if (cell.empty()) continue;
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("read_matrix: bad numeric cell '" + cell + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    } while (std::getline(is, line));

    if (rows.empty()) throw std::runtime_error("read_matrix: no data rows");
    const std::size_t n = rows.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::runtime_error("read_matrix: matrix is not square (row " +
                                     std::to_string(i + 1) + " has " +
                                     std::to_string(rows[i].size()) + " of " +
                                     std::to_string(n) + " entries)");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

} // namespace gpinv
