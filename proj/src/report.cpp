#include "kbal/report.hpp"

#include <iomanip>
#include <sstream>

namespace kbal {

int Report::passed() const {
    int k = 0;
    for (const auto& c : cases) k += c.pass ? 1 : 0;
    return k;
}

int Report::failed() const { return static_cast<int>(cases.size()) - passed(); }

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& c : other.cases) cases.push_back({prefix + c.id, c.pass, c.detail});
}

Json Report::to_json(bool include_timing) const {
    Json records = Json::array();
    for (const auto& c : cases) {
        Json r{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty()) r["detail"] = c.detail;
        records.push_back(std::move(r));
    }
    Json j{{"schema", kReportSchema}, {"command", command}, {"params", params}};
    if (!notes.empty()) j["notes"] = notes;
    if (!data.empty()) j["data"] = data;
    j["cases"] = records;
    j["summary"] = Json{{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}};
    if (include_timing) j["wall_ms"] = wall_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream out;
    std::size_t width = 4;
    for (const auto& c : cases) width = std::max(width, c.id.size());
    out << command << "\n";
    for (const auto& c : cases) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << (c.pass ? "pass" : "FAIL") << "\n";
        if (!c.pass && !c.detail.empty()) out << "    " << c.detail.dump() << "\n";
    }
    out << "summary: " << passed() << "/" << cases.size() << " passed";
    out << std::fixed << std::setprecision(1) << " (" << wall_ms << " ms)\n";
    return out.str();
}

CaseRecord compare_case(const std::string& id, const FactoredRational& lhs, const FactoredRational& rhs,
                        const EqualityOptions& opts) {
    CaseRecord c{id, factored_equal(lhs, rhs, opts)};
    if (!c.pass)
        c.detail = Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)},
                        {"lhs_expanded", to_json(lhs.expand())}, {"rhs_expanded", to_json(rhs.expand())}};
    return c;
}

CaseRecord compare_sum_case(const std::string& id, const RationalSum& lhs, const RationalSum& rhs,
                            const EqualityOptions& opts) {
    CaseRecord c{id, sum_equal(lhs, rhs, opts)};
    if (!c.pass) c.detail = Json{{"lhs_expanded", to_json(lhs.expand())}, {"rhs_expanded", to_json(rhs.expand())}};
    return c;
}

CaseRecord flag_case(const std::string& id, bool pass, Json detail) { return {id, pass, std::move(detail)}; }

std::string subset_label(const std::vector<int>& subset) {
    std::string s = "{";
    for (std::size_t k = 0; k < subset.size(); ++k) s += (k ? "," : "") + std::to_string(subset[k] + 1);
    return s + "}";
}

std::string vector_label(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

}  // namespace kbal
