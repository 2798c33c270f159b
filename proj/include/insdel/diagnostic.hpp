#ifndef INSDEL_DIAGNOSTIC_HPP
#define INSDEL_DIAGNOSTIC_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace insdel {

enum class Severity { error, warning };

struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;     // stable kebab-case identifier, e.g. "duplicate-label"
    std::string message;  // human readable detail

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_errors(const Diagnostics& ds) {
    return std::any_of(ds.begin(), ds.end(), [](const Diagnostic& d) { return d.severity == Severity::error; });
}

inline bool has_code(const Diagnostics& ds, const std::string& code) {
    return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; });
}

inline std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
    return os << (d.severity == Severity::error ? "error" : "warning") << ": " << d.code << ": " << d.message;
}

}  // namespace insdel

#endif  // INSDEL_DIAGNOSTIC_HPP
