#pragma once

#include <string>
#include <vector>

#include "kbal/equality.hpp"
#include "kbal/serialize.hpp"

namespace kbal {

inline constexpr const char* kReportSchema = "kbalance.report/1";

struct CaseRecord {
    std::string id;
    bool pass = false;
    Json detail = Json::object();
};

struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<CaseRecord> cases;
    Json notes = Json::object();
    // Command output that is not a pass/fail case (coefficients, fixed points).
    Json data = Json::array();
    double wall_ms = 0;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    void append(const Report& other, const std::string& prefix = "");

    // include_timing=false drops wall_ms so bodies compare byte for byte.
    Json to_json(bool include_timing = true) const;
    std::string to_text() const;
};

// Case comparing two factored values; on failure the witness carries both
// sides in factored and expanded form.
CaseRecord compare_case(const std::string& id, const FactoredRational& lhs, const FactoredRational& rhs,
                        const EqualityOptions& opts);
CaseRecord compare_sum_case(const std::string& id, const RationalSum& lhs, const RationalSum& rhs,
                            const EqualityOptions& opts);
CaseRecord flag_case(const std::string& id, bool pass, Json detail = Json::object());

std::string subset_label(const std::vector<int>& subset);
std::string vector_label(const std::vector<int>& v);

}  // namespace kbal
