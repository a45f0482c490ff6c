#pragma once

/* Machine- and human-readable verification reports. JSON output uses
 * alphabetically ordered keys, so identical inputs serialize to identical
 * bytes; wall-clock figures are emitted only on request for the same
 * reason. A check's verdict is "pass" only when every contributing
 * certificate is decisive. */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gorhom/homology.h"

namespace gorhom {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);
/* Worst of the two: Fail beats Inconclusive beats Pass. */
Verdict worst(Verdict a, Verdict b);

std::string cert_kind_name(CertKind k);
std::string gp_verdict_name(GpVerdict v);

nlohmann::json certificate_json(const Certificate& c, bool include_witness);
nlohmann::json gp_json(const GpResult& g, bool include_witness);
nlohmann::json morphism_json(const Morphism& f);

struct ModuleRecord {
    std::string name;
    std::vector<int> dims;
    std::optional<bool> projective;
    std::string gp;              // gp_verdict_name or empty when not computed
    std::string self_orthogonal; // cert kind name or empty when not computed
    nlohmann::json detail;       // certificates, orbits, offending degrees
};

struct TheoremCheck {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> notes;
    nlohmann::json witnesses; // decisive payload, emitted under --verbose
};

struct VerificationReport {
    nlohmann::json algebra; // description block: vertices, dim, flags
    std::vector<ModuleRecord> modules;
    std::vector<TheoremCheck> theorems;
    std::map<std::string, double> timing; // seconds per phase

    Verdict overall() const;
    nlohmann::json to_json(bool include_witnesses = false, bool include_timing = false) const;
    std::string to_text() const;
};

/* Description block shared by every report. */
nlohmann::json algebra_json(const BoundQuiverAlgebra& alg);

}  // namespace gorhom
