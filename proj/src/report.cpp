#include "cuboid/report.hpp"

#include <nlohmann/json.hpp>

namespace cuboid {

using nlohmann::ordered_json;

Check Check::pass(std::string name, std::string note) {
    return Check{std::move(name), "pass", {}, std::move(note)};
}

Check Check::fail(std::string name, std::string witness, std::string note) {
    return Check{std::move(name), "fail", std::move(witness), std::move(note)};
}

Check Check::sign_flip(std::string name, std::string note) {
    return Check{std::move(name), "sign-flip", {}, std::move(note)};
}

bool VerificationReport::passed() const {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::to_json() const {
    ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.status;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2);
}

}  // namespace cuboid
