#include "schwarzian_lab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "schwarzian_lab/function_spec.hpp"

namespace schwarzian_lab {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (const char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out + "\"";
}

std::string number(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

std::string render(const ReportValue& v) {
    struct Visitor {
        std::string operator()(std::nullptr_t) const { return "null"; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double x) const { return number(x); }
        std::string operator()(Complex z) const {
            return "{\"im\": " + number(z.imag()) + ", \"re\": " + number(z.real()) + "}";
        }
        std::string operator()(const std::string& s) const { return quote(s); }
    };
    return std::visit(Visitor{}, v);
}

template <class Map, class Render>
void object(std::ostringstream& os, const Map& m, Render&& r) {
    if (m.empty()) {
        os << "{}";
        return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : m) os << "    " << quote(k) << ": " << r(v) << (++i < m.size() ? ",\n" : "\n");
    os << "  }";
}

}  // namespace

std::string Report::to_json() const {
    std::ostringstream os;
    os << "{\n  \"command\": " << quote(command) << ",\n  \"parameters\": ";
    object(os, parameters, render);
    os << ",\n  \"provenance\": ";
    object(os, provenance, quote);
    os << ",\n  \"results\": ";
    object(os, results, render);
    os << ",\n  \"version\": " << quote(kVersion) << "\n}\n";
    return os.str();
}

}  // namespace schwarzian_lab
