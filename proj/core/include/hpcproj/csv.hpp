#pragma once

#include <map>
#include <string>
#include <vector>

#include "hpcproj/errors.hpp"

namespace hpcproj {

/// Header-indexed CSV table. Commas only; fields may be quoted with
/// double quotes. Row numbers in error messages are 1-based and include
/// the header.
class csv_table {
public:
    static csv_table parse(const std::string& text);
    static csv_table parse_file(const std::string& path);

    size_t rows() const { return cells_.size(); }
    const std::vector<std::string>& header() const { return header_; }
    bool has_column(const std::string& name) const;

    const std::string& at(size_t row, const std::string& column) const;
    double number(size_t row, const std::string& column) const;

private:
    std::vector<std::string> header_;
    std::map<std::string, size_t> index_;
    std::vector<std::vector<std::string>> cells_;
};

/// Deterministic CSV emitter; numbers use scientific notation with six
/// significant digits.
class csv_writer {
public:
    explicit csv_writer(std::vector<std::string> header);

    void add_row(const std::vector<std::string>& cells);

    std::string str() const;
    void write_file(const std::string& path) const;

    static std::string num(double v);

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace hpcproj
