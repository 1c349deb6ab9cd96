#include "dicolor/report.hpp"

namespace dicolor {

std::string canonical_json(const nlohmann::json& value) {
    return value.dump(2) + "\n";
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

nlohmann::json run_report_json(const RunReport& report) {
    return nlohmann::json{{"command", report.command},
                          {"input_digest", report.input_digest},
                          {"parameters", report.parameters},
                          {"results", report.results},
                          {"version", std::string(kToolkitVersion)}};
}

}  // namespace dicolor
