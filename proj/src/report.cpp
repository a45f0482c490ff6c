#include "gorhom/report.h"

#include <sstream>

#include "gorhom/representation.h"

namespace gorhom {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict worst(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

std::string cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::CertifiedVanishing: return "certified_vanishing";
        case CertKind::NonzeroAt: return "nonzero_at";
        case CertKind::UnknownBeyond: return "unknown_beyond";
    }
    return "?";
}

std::string gp_verdict_name(GpVerdict v) {
    switch (v) {
        case GpVerdict::Yes: return "yes";
        case GpVerdict::No: return "no";
        case GpVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

nlohmann::json morphism_json(const Morphism& f) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const Mat& b : f.blocks) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < b.rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < b.cols; ++c) row.push_back(b.at(r, c));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return blocks;
}

nlohmann::json certificate_json(const Certificate& c, bool include_witness) {
    nlohmann::json j;
    j["kind"] = cert_kind_name(c.kind);
    j["bound"] = c.bound;
    j["ext_dims"] = c.ext_dims;
    if (c.kind == CertKind::CertifiedVanishing) {
        j["period"] = {c.period_start, c.period_end};
        if (include_witness && c.witness) j["witness"] = morphism_json(*c.witness);
    }
    if (c.kind == CertKind::NonzeroAt) {
        j["nonzero_degree"] = c.nonzero_degree;
        j["nonzero_dim"] = c.nonzero_dim;
    }
    return j;
}

nlohmann::json gp_json(const GpResult& g, bool include_witness) {
    nlohmann::json j;
    j["verdict"] = gp_verdict_name(g.verdict);
    j["forward"] = certificate_json(g.forward, include_witness);
    if (g.transposed.bound > 0)
        j["transposed"] = certificate_json(g.transposed, include_witness);
    return j;
}

nlohmann::json algebra_json(const BoundQuiverAlgebra& alg) {
    const Quiver& q = alg.quiver();
    nlohmann::json j;
    j["vertices"] = q.vertices;
    nlohmann::json arrows = nlohmann::json::array();
    for (const Arrow& a : q.arrows)
        arrows.push_back({{"label", a.label},
                          {"source", q.vertices[a.source]},
                          {"target", q.vertices[a.target]}});
    j["arrows"] = std::move(arrows);
    j["relation_count"] = alg.relations().size();
    j["char"] = alg.characteristic();
    j["dim"] = alg.dim();
    j["loewy_bound"] = alg.loewy_bound();
    return j;
}

Verdict VerificationReport::overall() const {
    Verdict v = Verdict::Pass;
    for (const TheoremCheck& t : theorems) v = worst(v, t.verdict);
    return v;
}

nlohmann::json VerificationReport::to_json(bool include_witnesses, bool include_timing) const {
    nlohmann::json j;
    j["algebra"] = algebra;
    nlohmann::json mods = nlohmann::json::array();
    for (const ModuleRecord& m : modules) {
        nlohmann::json jm;
        jm["name"] = m.name;
        jm["dims"] = m.dims;
        if (m.projective) jm["projective"] = *m.projective;
        if (!m.gp.empty()) jm["gorenstein_projective"] = m.gp;
        if (!m.self_orthogonal.empty()) jm["self_orthogonal"] = m.self_orthogonal;
        if (!m.detail.is_null()) jm["detail"] = m.detail;
        mods.push_back(std::move(jm));
    }
    j["modules"] = std::move(mods);
    nlohmann::json thms = nlohmann::json::object();
    for (const TheoremCheck& t : theorems) {
        nlohmann::json jt;
        jt["verdict"] = verdict_name(t.verdict);
        jt["notes"] = t.notes;
        if (include_witnesses && !t.witnesses.is_null()) jt["witnesses"] = t.witnesses;
        thms[t.name] = std::move(jt);
    }
    j["theorems"] = std::move(thms);
    j["verdict"] = verdict_name(overall());
    nlohmann::json jt = nlohmann::json::object();
    if (include_timing)
        for (const auto& [phase, seconds] : timing) jt[phase] = seconds;
    j["timing"] = std::move(jt);
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    if (algebra.contains("generator")) {
        const nlohmann::json& g = algebra["generator"];
        out << "generator: seed " << g.value("seed", (uint64_t)0) << ", " << g.value("count", 0)
            << " algebras, up to " << g.value("max_vertices", 0) << " vertices, char "
            << g.value("char", 0) << '\n';
    } else {
        out << "algebra: dim " << algebra.value("dim", 0) << ", "
            << algebra.value("vertices", nlohmann::json::array()).size()
            << " vertices, char " << algebra.value("char", 0) << '\n';
    }
    if (!modules.empty()) {
        out << "modules:\n";
        for (const ModuleRecord& m : modules) {
            out << "  " << m.name << " dims (";
            for (size_t i = 0; i < m.dims.size(); ++i) out << (i ? "," : "") << m.dims[i];
            out << ")";
            if (m.projective) out << (*m.projective ? " projective" : " non-projective");
            if (!m.gp.empty()) out << " gp=" << m.gp;
            if (!m.self_orthogonal.empty()) out << " self-orthogonal=" << m.self_orthogonal;
            out << '\n';
        }
    }
    for (const TheoremCheck& t : theorems) {
        out << t.name << ": " << verdict_name(t.verdict) << '\n';
        for (const std::string& note : t.notes) out << "  " << note << '\n';
    }
    out << "verdict: " << verdict_name(overall()) << '\n';
    return out.str();
}

}  // namespace gorhom
