#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "schwarzian_lab/power_series.hpp"

namespace schwarzian_lab {

inline constexpr const char* kVersion = "0.1.0";

using ReportValue = std::variant<std::nullptr_t, bool, std::int64_t, double, Complex, std::string>;

/// Command result. Serializes deterministically: sorted keys, reals as %.17g,
/// complex numbers as {"im": ..., "re": ...}, non-finite reals as null.
struct Report {
    std::string command;
    std::map<std::string, ReportValue> parameters;
    std::map<std::string, ReportValue> results;
    std::map<std::string, std::string> provenance;

    std::string to_json() const;
};

}  // namespace schwarzian_lab
