#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace kthue {

inline constexpr const char* kToolVersion = "kthue 0.1.0";
inline constexpr int kCertificateSchemaVersion = 1;

/// Machine-readable record of one verification run. Serialized as JSON with
/// stable key names; `elapsed_seconds` is the only field allowed to differ
/// between repeated runs of the same task.
struct Certificate {
    enum class Status { verified, counterexample, aborted };

    std::string task;
    nlohmann::json parameters = nlohmann::json::object();
    Status status = Status::verified;
    nlohmann::json witness;  // null when status == verified
    nlohmann::json counts = nlohmann::json::object();
    double elapsed_seconds = 0.0;
};

const char* status_name(Certificate::Status s);

nlohmann::json to_json(const Certificate& c);

/// Same JSON with timing zeroed, for byte-identical comparison across runs.
nlohmann::json to_json_without_timing(const Certificate& c);

/// 0 if all verified, 1 if any counterexample, else 2 if any aborted.
int exit_code_for(const std::vector<Certificate>& certs);

}  // namespace kthue
