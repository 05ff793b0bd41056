#include "rcm/io.hpp"

#include <cstdio>

#include "rcm/errors.hpp"

namespace rcm {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& header)
    : os_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
    if (!os_) throw IoError("cannot open for write: " + path.string());
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) os_ << ',';
        os_ << header[i];
    }
    os_ << '\n';
}

void CsvWriter::sep() {
    if (in_row_) os_ << ',';
    ++in_row_;
}

CsvWriter& CsvWriter::field(const std::string& s) {
    sep();
    os_ << s;
    return *this;
}

CsvWriter& CsvWriter::field(double v) {
    sep();
    os_ << format_double(v);
    return *this;
}

CsvWriter& CsvWriter::field(std::int64_t v) {
    sep();
    os_ << v;
    return *this;
}

CsvWriter& CsvWriter::field(std::uint64_t v) {
    sep();
    os_ << v;
    return *this;
}

void CsvWriter::end_row() {
    if (in_row_ != columns_)
        throw IoError("csv row has " + std::to_string(in_row_) + " fields, header has " +
                      std::to_string(columns_));
    os_ << '\n';
    in_row_ = 0;
    if (!os_) throw IoError("csv write failed");
}

void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for write: " + path.string());
    for (const auto& [k, v] : entries) os << k << '=' << v << '\n';
    if (!os) throw IoError("manifest write failed: " + path.string());
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace rcm
