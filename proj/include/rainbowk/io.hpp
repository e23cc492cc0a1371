#pragma once

// File formats: ColoringFile (JSON), ReportFile (JSON) and DOT export.

#include "rainbowk/construction.hpp"
#include "rainbowk/core.hpp"
#include "rainbowk/verifier.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace rainbowk {

/// Malformed input file; the message names the first offending record.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemeInfo {
    int k;
    int k1;
    int r1;
    friend bool operator==(const SchemeInfo&, const SchemeInfo&) = default;
};

struct ColoringFile {
    EdgeColoring coloring;
    std::optional<int> k_hint;
    std::optional<SchemeInfo> scheme;

    [[nodiscard]] LabelParams labels() const {
        return scheme ? LabelParams{scheme->k, scheme->k1, scheme->r1} : LabelParams::plain(coloring.r());
    }
};

inline constexpr const char* kFormatVersion = "1";

ColoringFile coloring_file_for(const PartitionScheme& scheme);

/// Fixed key order, one edge per line.
std::string write_coloring(const ColoringFile& file);
/// Validates every invariant of the format; throws FormatError.
ColoringFile read_coloring(const std::string& text);

std::string write_report(const VerificationReport& report, const LabelParams& labels, bool per_pair);

/// Graphviz document: U on one rank, W on another, groups left to right,
/// `color=<n>` on every edge through a three-entry palette.
std::string write_dot(const ColoringFile& file);

std::string path_text(const RainbowPath& path);

std::string read_text_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rainbowk
