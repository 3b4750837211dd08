#include "dcearma/csv.hpp"

#include <charconv>
#include <stdexcept>

#include "dcearma/version.hpp"

namespace dcearma {

std::string csv_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, std::uint64_t seed,
                     const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
    write_line("#seed=" + std::to_string(seed));
    write_line(std::string("#version=") + kVersion);
    std::string h;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) h += ',';
        h += header[i];
    }
    write_line(h);
}

void CsvWriter::comment(const std::string& text) { write_line("#" + text); }

void CsvWriter::write_line(const std::string& line) {
    out_ << line << '\n';
}

CsvWriter::Row& CsvWriter::Row::operator<<(double v) {
    if (!first_) line_ += ',';
    first_ = false;
    line_ += csv_double(v);
    return *this;
}

CsvWriter::Row& CsvWriter::Row::operator<<(int v) {
    if (!first_) line_ += ',';
    first_ = false;
    line_ += std::to_string(v);
    return *this;
}

CsvWriter::Row& CsvWriter::Row::operator<<(std::int64_t v) {
    if (!first_) line_ += ',';
    first_ = false;
    line_ += std::to_string(v);
    return *this;
}

CsvWriter::Row& CsvWriter::Row::operator<<(const std::string& v) {
    if (!first_) line_ += ',';
    first_ = false;
    line_ += v;
    return *this;
}

CsvWriter::Row::~Row() { writer_.write_line(line_); }

} // namespace dcearma
