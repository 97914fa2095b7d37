#include "hpcproj/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hpcproj {

namespace {

std::vector<std::string> split_line(const std::string& line, size_t row_no) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"' && cell.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cell));
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    if (quoted) {
        throw parse_error("csv row " + std::to_string(row_no) +
                          ": unterminated quote");
    }
    out.push_back(std::move(cell));
    return out;
}

} // namespace

csv_table csv_table::parse(const std::string& text) {
    csv_table t;
    std::istringstream in(text);
    std::string line;
    size_t row_no = 0;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty() || line == "\r") continue;
        auto cells = split_line(line, row_no);
        if (t.header_.empty()) {
            t.header_ = cells;
            for (size_t i = 0; i < cells.size(); ++i) t.index_[cells[i]] = i;
        } else {
            if (cells.size() != t.header_.size()) {
                throw parse_error("csv row " + std::to_string(row_no) + ": " +
                                  std::to_string(cells.size()) +
                                  " fields, header has " +
                                  std::to_string(t.header_.size()));
            }
            t.cells_.push_back(std::move(cells));
        }
    }
    return t;
}

csv_table csv_table::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open csv file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

bool csv_table::has_column(const std::string& name) const {
    return index_.count(name) > 0;
}

const std::string& csv_table::at(size_t row, const std::string& column) const {
    auto it = index_.find(column);
    if (it == index_.end()) {
        throw parse_error("csv: no column named '" + column + "'");
    }
    if (row >= cells_.size()) {
        throw parse_error("csv: row index out of range");
    }
    return cells_[row][it->second];
}

double csv_table::number(size_t row, const std::string& column) const {
    const std::string& s = at(row, column);
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("csv row " + std::to_string(row + 2) + ", column '" +
                          column + "': not a number: '" + s + "'");
    }
}

csv_writer::csv_writer(std::vector<std::string> header)
    : header_(std::move(header)) {}

void csv_writer::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != header_.size()) {
        throw domain_error("csv_writer: row width does not match header");
    }
    rows_.push_back(cells);
}

std::string csv_writer::num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

namespace {

std::string quote_if_needed(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string csv_writer::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < header_.size(); ++i) {
        os << (i ? "," : "") << quote_if_needed(header_[i]);
    }
    os << '\n';
    for (const auto& row : rows_) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << quote_if_needed(row[i]);
        }
        os << '\n';
    }
    return os.str();
}

void csv_writer::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << str();
}

} // namespace hpcproj
