#include "kthue/certificate.hpp"

namespace kthue {

const char* status_name(Certificate::Status s) {
    switch (s) {
        case Certificate::Status::verified: return "verified";
        case Certificate::Status::counterexample: return "counterexample";
        case Certificate::Status::aborted: return "aborted";
    }
    return "unknown";
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["version"] = kCertificateSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["task"] = c.task;
    j["parameters"] = c.parameters;
    j["status"] = status_name(c.status);
    j["witness"] = c.witness;
    j["counts"] = c.counts;
    j["elapsed_seconds"] = c.elapsed_seconds;
    return j;
}

nlohmann::json to_json_without_timing(const Certificate& c) {
    nlohmann::json j = to_json(c);
    j["elapsed_seconds"] = 0.0;
    return j;
}

int exit_code_for(const std::vector<Certificate>& certs) {
    int code = 0;
    for (const Certificate& c : certs) {
        if (c.status == Certificate::Status::counterexample) code = std::max(code, 1);
        if (c.status == Certificate::Status::aborted) code = std::max(code, 2);
    }
    return code;
}

}  // namespace kthue
