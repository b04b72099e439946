#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace solvlat::obstruct {

using Json = nlohmann::json;

/// A re-runnable fact. `kind` selects the verifier; `data` holds every input
/// it needs as strings and integers.
struct Check {
    std::string kind;
    Json data;
    bool passed = false;
};

enum class Resolution { ForcesOne, StructurallyImpossible, Subcases, Unresolved };

struct CaseNode {
    std::string name;
    std::vector<std::string> constraints;
    Resolution resolution = Resolution::Unresolved;
    std::vector<Check> checks;
    std::vector<CaseNode> children;
    /// Extracted values and notes, e.g. {"n": 3}.
    Json witness = Json::object();
};

struct Assumption {
    std::string id;
    std::string anchor;
};

enum class Conclusion { Obstructed, Inconclusive };

struct ObstructionReport {
    std::string example;
    std::vector<Assumption> assumptions;
    std::vector<CaseNode> cases;
    Conclusion conclusion = Conclusion::Inconclusive;
    Json extracted = Json::object();
};

std::string to_string(Resolution r);
std::string to_string(Conclusion c);
Resolution resolution_from_string(const std::string& s);
Conclusion conclusion_from_string(const std::string& s);

/// Leaves all closed and every check passed.
Conclusion derive_conclusion(const std::vector<CaseNode>& cases);

Json to_json(const ObstructionReport& r);
/// Throws std::invalid_argument on schema violations.
ObstructionReport report_from_json(const Json& j);

/// Re-runs a check from its data alone.
bool run_check(const std::string& kind, const Json& data);

struct VerifyOutcome {
    bool ok;
    std::string failure;
};

/// Re-runs every check, recomputes the conclusion and compares it with the stored one.
VerifyOutcome verify_report(const Json& j);

}  // namespace solvlat::obstruct
