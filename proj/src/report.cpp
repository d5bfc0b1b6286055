#include "seqlof/report.hpp"

#include <cstdio>

#include "seqlof/errors.hpp"

namespace seqlof {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path), out_(path) {
    if (!out_) {
        throw ConfigError("cannot open output file: " + path);
    }
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    raw_row(columns);
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) {
        cells.push_back(format_double(v));
    }
    raw_row(cells);
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out_ << ',';
        }
        out_ << cells[i];
    }
    out_ << '\n';
}

std::string manifest_path_for(const std::string& csv_path) {
    std::string stem = csv_path;
    if (stem.size() >= 4 && stem.substr(stem.size() - 4) == ".csv") {
        stem = stem.substr(0, stem.size() - 4);
    }
    return stem + ".manifest.txt";
}

ManifestWriter::ManifestWriter(const std::string& csv_path)
    : path_(manifest_path_for(csv_path)), out_(path_) {
    if (!out_) {
        throw ConfigError("cannot open manifest file: " + path_);
    }
    field("tool", std::string("seqlof ") + kVersion);
}

void ManifestWriter::field(const std::string& key, const std::string& value) {
    out_ << key << ": " << value << '\n';
}

void ManifestWriter::field(const std::string& key, double value) {
    field(key, format_double(value));
}

void ManifestWriter::field(const std::string& key, long value) {
    field(key, std::to_string(value));
}

} // namespace seqlof
