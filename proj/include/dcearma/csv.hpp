#ifndef DCEARMA_CSV_HPP
#define DCEARMA_CSV_HPP

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace dcearma {

/// Locale-independent float formatting, 17 significant digits, '.' decimal
/// separator.
std::string csv_double(double v);

/// CSV emitter: UTF-8, LF line endings, leading provenance comments
/// (#seed=, #version=), one header row, then data rows. Byte-identical
/// output for identical inputs.
class CsvWriter {
public:
    CsvWriter(const std::string& path, std::uint64_t seed,
              const std::vector<std::string>& header);

    void comment(const std::string& text);

    class Row {
    public:
        explicit Row(CsvWriter& w) : writer_(w) {}
        Row& operator<<(double v);
        Row& operator<<(int v);
        Row& operator<<(std::int64_t v);
        Row& operator<<(const std::string& v);
        ~Row();

    private:
        CsvWriter& writer_;
        std::string line_;
        bool first_ = true;
        friend class CsvWriter;
    };

    Row row() { return Row(*this); }

    const std::string& path() const { return path_; }

private:
    void write_line(const std::string& line);

    std::string path_;
    std::ofstream out_;
    friend class Row;
};

} // namespace dcearma

#endif
