#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace seqlof {

inline constexpr const char* kVersion = "0.1.0";

// Minimal CSV emitter. Numbers print with %.12g, which round-trips the
// precision these reports carry and keeps repeated runs byte-identical.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& cells);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
};

std::string format_double(double value);

// Human-readable run manifest written beside a CSV: "key: value" lines.
class ManifestWriter {
public:
    explicit ManifestWriter(const std::string& csv_path);

    void field(const std::string& key, const std::string& value);
    void field(const std::string& key, double value);
    void field(const std::string& key, long value);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
};

// some_dir/name.csv -> some_dir/name.manifest.txt
std::string manifest_path_for(const std::string& csv_path);

} // namespace seqlof
