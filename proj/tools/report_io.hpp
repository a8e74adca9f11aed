#pragma once

// Report serialization for the command-line tool: JSON (lossless, round-trips
// back into the originating type), CSV with fixed column orders, and aligned
// human-readable text. Text and CSV print numbers to a configurable number of
// significant digits (default 6); JSON always keeps full precision.

#include <turing/gram_scanner.hpp>
#include <turing/optimizer.hpp>

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace turing::io {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name);  // throws validation_error

inline constexpr const char* kSchemaVersion = "turing/1";

// --- JSON (lossless) -------------------------------------------------------

json to_json(const TuringConstants& c);
json to_json(const SearchResult& r);
json to_json(const GrowthReport& r);
json to_json(const CertificationReport& r);
json to_json(const BlockClassification& c);

TuringConstants constants_from_json(const json& j);
SearchResult search_result_from_json(const json& j);
GrowthReport growth_report_from_json(const json& j);
CertificationReport certification_from_json(const json& j);

// Wraps a payload in the versioned envelope {"schema", "type", "report"}.
json envelope(const std::string& type, json report, json inputs = {});

// --- CSV and text ----------------------------------------------------------

struct Style {
    int sig_digits = 6;
};

std::string to_csv(const TuringConstants& c, const Style& = {});
std::string to_csv(const SearchResult& r, const Style& = {});
std::string to_csv(const GrowthReport& r, const Style& = {});
std::string to_csv(const BlockClassification& c, const Style& = {});

std::string to_text(const TuringConstants& c, const Style& = {});
std::string to_text(const SearchResult& r, const Style& = {});
std::string to_text(const GrowthReport& r, const Style& = {});
std::string to_text(const CertificationReport& r, const Style& = {});

// Writes body to the path (or stdout when path is empty); returns bytes
// written. I/O failures raise io_error.
std::size_t emit(const std::string& body, const std::string& path);

std::string format_number(double x, int sig_digits);

}  // namespace turing::io
