#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace grasstilt {

inline constexpr const char* kVersion = "0.1.0";

enum class Verdict { verified, failed, out_of_scope };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Outcome of one check. A verified report has no witnesses. `characteristic`
/// is always "0": the engine computes characteristic-zero cohomology only.
struct VerificationReport {
    int l = 0;
    int m = 0;
    std::string check;
    Verdict verdict = Verdict::verified;
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json tables = nlohmann::json::object();
    std::optional<long long> elapsed_ms;
    std::string characteristic = "0";

    /// Sets verdict from the witness list: verified iff empty.
    void settle() { verdict = witnesses.empty() ? Verdict::verified : Verdict::failed; }
};

}  // namespace grasstilt
