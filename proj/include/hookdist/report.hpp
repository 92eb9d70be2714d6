#pragma once

// Labeled proportion tables with exact cells, 4-decimal renderings, and
// text / CSV / JSON serialization.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <hookdist/integer.hpp>

namespace hookdist {

enum class Rounding { HalfEven, Truncate };

/// Decimal rendering of a rational with a fixed number of places ("0.4356", "1.0000").
inline std::string render_decimal(const Rational& value, int places, Rounding mode = Rounding::HalfEven)
{
    if (places < 0) {
        throw std::invalid_argument("render_decimal: negative number of places");
    }
    Integer scale = 1;
    for (int i = 0; i < places; ++i) {
        scale *= 10;
    }
    const bool negative = sgn(value) < 0;
    const Rational x = (negative ? Rational(-value) : value) * Rational(scale);
    Integer q = x.get_num() / x.get_den();
    const Integer rem = x.get_num() - q * x.get_den();
    if (mode == Rounding::HalfEven) {
        const int c = cmp(Integer(2 * rem), x.get_den());
        if (c > 0 || (c == 0 && q % 2 != 0)) {
            q += 1;
        }
    }
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    }
    std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
        out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
    }
    if (negative && sgn(q) != 0) {
        out.insert(0, "-");
    }
    return out;
}

struct TableReport {
    std::string title;
    std::string family; // "hooks", "homogeneous", "quasi(2,3)"
    std::int64_t t = 0; // 0 for Hilbert tables
    std::int64_t b = 0;
    std::size_t order = 0;
    std::vector<std::int64_t> rows;                // n values
    std::vector<std::int64_t> columns;             // residues a
    std::vector<std::vector<Rational>> cells;      // cells[row][column]

    std::string decimal(std::size_t row, std::size_t col, Rounding mode = Rounding::HalfEven) const
    {
        return render_decimal(cells.at(row).at(col), 4, mode);
    }

    Rational row_sum(std::size_t row) const
    {
        Rational s = 0;
        for (const auto& c : cells.at(row)) {
            s += c;
        }
        s.canonicalize();
        return s;
    }

    bool rows_sum_to_one() const
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (row_sum(i) != 1) {
                return false;
            }
        }
        return true;
    }
};

inline std::string to_text(const TableReport& r)
{
    std::ostringstream os;
    os << r.title << "\n";
    os << "family=" << r.family << " t=" << r.t << " b=" << r.b << " order=" << r.order << "\n";
    os << "n";
    for (auto a : r.columns) {
        os << "\ta=" << a;
    }
    os << "\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        os << r.rows[i];
        for (std::size_t j = 0; j < r.columns.size(); ++j) {
            os << "\t" << r.decimal(i, j);
        }
        os << "\n";
    }
    return os.str();
}

inline constexpr const char* csv_header = "n,a,numerator,denominator,decimal";

inline std::string to_csv(const TableReport& r)
{
    std::ostringstream os;
    os << csv_header << "\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        for (std::size_t j = 0; j < r.columns.size(); ++j) {
            const Rational& c = r.cells[i][j];
            os << r.rows[i] << "," << r.columns[j] << "," << c.get_num().get_str() << ","
               << c.get_den().get_str() << "," << r.decimal(i, j) << "\n";
        }
    }
    return os.str();
}

struct CsvCell {
    std::int64_t n = 0;
    std::int64_t a = 0;
    Rational value;
    std::string decimal;
    bool operator==(const CsvCell&) const = default;
};

inline std::vector<CsvCell> parse_csv(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != csv_header) {
        throw std::runtime_error("parse_csv: missing header '" + std::string(csv_header) + "'");
    }
    std::vector<CsvCell> out;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) {
            f.push_back(field);
        }
        if (f.size() != 5) {
            throw std::runtime_error("parse_csv: expected 5 fields in '" + line + "'");
        }
        CsvCell c;
        c.n = std::stoll(f[0]);
        c.a = std::stoll(f[1]);
        c.value = Rational(Integer(f[2]), Integer(f[3]));
        c.value.canonicalize();
        c.decimal = f[4];
        out.push_back(std::move(c));
    }
    return out;
}

/// Flattened cells in CSV order.
inline std::vector<CsvCell> flatten(const TableReport& r)
{
    std::vector<CsvCell> out;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        for (std::size_t j = 0; j < r.columns.size(); ++j) {
            out.push_back({r.rows[i], r.columns[j], r.cells[i][j], r.decimal(i, j)});
        }
    }
    return out;
}

inline nlohmann::ordered_json to_json(const TableReport& r)
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["title"] = r.title;
    j["family"] = r.family;
    j["t"] = r.t;
    j["b"] = r.b;
    j["order"] = r.order;
    j["rows"] = r.rows;
    j["columns"] = r.columns;
    auto cells = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < r.columns.size(); ++k) {
            const Rational& c = r.cells[i][k];
            row.push_back({{"numerator", c.get_num().get_str()},
                           {"denominator", c.get_den().get_str()},
                           {"decimal", r.decimal(i, k)}});
        }
        cells.push_back(std::move(row));
    }
    j["cells"] = std::move(cells);
    return j;
}

} // namespace hookdist
