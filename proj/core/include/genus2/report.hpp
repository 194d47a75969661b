#pragma once

#include "genus2/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace genus2 {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct VerificationReport {
    std::string id;
    Status status = Status::skipped;
    double elapsed_ms = 0;
    std::optional<Json> residual;  // serialized RatFunc, or both sides of a failed comparison
    std::string anchor;
    std::string detail;

    // Without timings the output is reproducible byte for byte.
    Json to_json(bool with_timing = false) const;
    static VerificationReport from_json(const Json& j);
};

enum class Format { json, latex };
Format parse_format(const std::string& s);  // throws std::invalid_argument

// LaTeX follows the printed conventions: \frac, t_{2}, s_{11}, \delta.
std::string latex(const MPoly& p);
std::string latex(const RatFunc& f);
std::string latex(const RFMatrix& m);

std::string emit(const RatFunc& f, Format fmt);
std::string emit(const RFMatrix& m, Format fmt);
std::string emit(const std::vector<VerificationReport>& reports, Format fmt, bool with_timing = false);

}  // namespace genus2
