#pragma once

#include <string>
#include <vector>

namespace cuboid {

/// One verification outcome. "sign-flip" marks a recorded, non-failing
/// divergence from a transcribed display (the derived form stays
/// authoritative); only "fail" makes a report unsuccessful.
struct Check {
    std::string name;
    std::string status;   // "pass" | "fail" | "sign-flip"
    std::string witness;  // rendered nonzero residue, present on failure
    std::string note;     // free-form detail (scalar factors, term counts, ...)

    static Check pass(std::string name, std::string note = {});
    static Check fail(std::string name, std::string witness, std::string note = {});
    static Check sign_flip(std::string name, std::string note = {});
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    void append(const VerificationReport& other);
    std::string to_json() const;
};

}  // namespace cuboid
