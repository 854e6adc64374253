#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

namespace fatequator {

// Fixed output schema shared by every command. Numeric fields carry 17
// significant digits (lossless binary64 round trip); inapplicable fields
// stay empty.
inline constexpr const char* kCsvHeader =
    "kind,n,m,epsilon,delta,exact_fraction,estimate,stderr,bound_name,bound_value,slack,N,seed";

struct CsvRow {
    std::string kind;
    std::optional<long long> n;
    std::optional<long long> m;
    std::optional<double> epsilon;
    std::optional<double> delta;
    std::optional<double> exact_fraction;
    std::optional<double> estimate;
    std::optional<double> std_err;
    std::string bound_name;
    std::optional<double> bound_value;
    std::optional<double> slack;
    std::optional<std::uint64_t> samples;
    std::string seed;
};

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_line(const CsvRow& row) {
    const auto num = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    const auto integer = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    std::string line;
    line += row.kind;
    line += ',';
    line += integer(row.n);
    line += ',';
    line += integer(row.m);
    line += ',';
    line += num(row.epsilon);
    line += ',';
    line += num(row.delta);
    line += ',';
    line += num(row.exact_fraction);
    line += ',';
    line += num(row.estimate);
    line += ',';
    line += num(row.std_err);
    line += ',';
    line += row.bound_name;
    line += ',';
    line += num(row.bound_value);
    line += ',';
    line += num(row.slack);
    line += ',';
    line += integer(row.samples);
    line += ',';
    line += row.seed;
    line += '\n';
    return line;
}

class CsvDocument {
public:
    CsvDocument() : text_(kCsvHeader) { text_ += '\n'; }

    void add(const CsvRow& row) { text_ += csv_line(row); }

    const std::string& text() const { return text_; }

private:
    std::string text_;
};

inline std::string seed_descriptor(std::uint64_t root_seed, std::uint64_t stream_index) {
    return std::to_string(root_seed) + ":" + std::to_string(stream_index);
}

}  // namespace fatequator
