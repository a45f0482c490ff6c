#include "gorhom/harness.h"

#include <chrono>
#include <sstream>

#include "gorhom/errors.h"
#include "gorhom/io.h"

namespace gorhom {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join_dims(const std::vector<int>& dims) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    out << ')';
    return out.str();
}

}  // namespace

AlgebraPtr cyclic_family(int n, uint32_t p) {
    if (n < 3) throw PreconditionError("cyclic family needs at least 3 vertices");
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        q.arrows.push_back(Arrow{"a" + std::to_string(i + 1), i, (i + 1) % n});
    std::vector<PathSum> rels;
    for (int i = 0; i < n; ++i) {
        PathWord w{i, (i + 2) % n, {i, (i + 1) % n}};
        rels.push_back(PathSum{{{1, w}}});
    }
    return build_algebra(std::move(q), std::move(rels), p);
}

std::vector<std::string> indecomposable_names(const BoundQuiverAlgebra& alg) {
    std::vector<std::string> names;
    for (int v = 0; v < alg.quiver().num_vertices(); ++v) {
        int len = (int)alg.basis_with_source(v).size();
        for (int k = 1; k <= len; ++k)
            names.push_back("P(" + alg.quiver().vertices[v] + ")/rad^" + std::to_string(k));
    }
    return names;
}

VerificationReport verify_cyclic_family(int n, int t, int bound, uint32_t p) {
    if (t < 1 || n <= t + 1)
        throw PreconditionError("family parameters need n > t + 1 >= 2");
    auto t0 = Clock::now();

    VerificationReport report;
    AlgebraPtr alg = cyclic_family(n, p);
    report.algebra = algebra_json(*alg);
    report.timing["build"] = seconds_since(t0);

    TheoremCheck check;
    check.name = "family_reproduction";
    check.witnesses = nlohmann::json::array();
    bool nak = is_nakayama(*alg);
    bool selfinj = is_self_injective(alg);
    check.notes.push_back(std::string("nakayama: ") + (nak ? "yes" : "no"));
    check.notes.push_back(std::string("self-injective: ") + (selfinj ? "yes" : "no"));
    if (!nak || !selfinj) check.verdict = Verdict::Fail;

    t0 = Clock::now();
    for (int j = 0; j < n; ++j) {
        Representation s = simple_module(alg, j);
        ModuleRecord rec;
        rec.name = "S(" + alg->quiver().vertices[j] + ")";
        rec.dims = s.dims;
        rec.projective = is_projective(s);

        GpResult gp = is_gorenstein_projective(s, bound);
        rec.gp = gp_verdict_name(gp.verdict);

        std::vector<int> table = ext_table(s, s, n);
        nlohmann::json detail;
        detail["gp"] = gp_json(gp, false);
        detail["self_ext_dims"] = table;
        rec.detail = std::move(detail);

        int first_nonzero = 0;
        for (int i = 1; i <= n; ++i)
            if (table[i - 1] > 0) {
                first_nonzero = i;
                break;
            }
        bool vanish_through_t = true;
        for (int i = 1; i <= t; ++i) vanish_through_t &= (table[i - 1] == 0);

        if (gp.verdict == GpVerdict::Inconclusive)
            check.verdict = worst(check.verdict, Verdict::Inconclusive);
        if (gp.verdict == GpVerdict::No || *rec.projective || !vanish_through_t ||
            first_nonzero != n || table[n - 1] != 1) {
            check.verdict = Verdict::Fail;
            check.notes.push_back(rec.name + ": unexpected profile, first nonzero degree " +
                                  std::to_string(first_nonzero) + " dim " +
                                  std::to_string(first_nonzero ? table[first_nonzero - 1] : 0));
        }
        report.modules.push_back(std::move(rec));
    }
    if (check.verdict == Verdict::Pass)
        check.notes.push_back("all " + std::to_string(n) +
                              " simples: certified Gorenstein projective, non-projective, "
                              "self-Ext zero through degree " +
                              std::to_string(t) + ", first nonzero degree " +
                              std::to_string(n) + " of dimension 1");
    report.timing["certify"] = seconds_since(t0);
    report.theorems.push_back(std::move(check));
    return report;
}

namespace {

/* Shared per-module sweep state for the Nakayama check family. */
struct SweepModule {
    std::string name;
    Representation rep;
    bool projective = false;
    GpResult gp;
    Certificate self_orth;
    bool self_orth_computed = false;
    bool undetermined = false;
    std::string error;
};

std::vector<SweepModule> sweep_modules(const AlgebraPtr& alg, int bound,
                                       bool with_self_orth) {
    std::vector<Representation> indecs = nakayama_indecomposables(alg);
    std::vector<std::string> names = indecomposable_names(*alg);
    std::vector<SweepModule> out;
    for (size_t k = 0; k < indecs.size(); ++k) {
        SweepModule sm;
        sm.name = names[k];
        sm.rep = std::move(indecs[k]);
        sm.projective = is_projective(sm.rep);
        try {
            sm.gp = is_gorenstein_projective(sm.rep, bound);
            if (with_self_orth && sm.gp.verdict == GpVerdict::Yes) {
                sm.self_orth = self_orthogonality_certificate(sm.rep, bound);
                sm.self_orth_computed = true;
            }
        } catch (const UndeterminedIsomorphism& e) {
            sm.undetermined = true;
            sm.error = e.what();
        }
        out.push_back(std::move(sm));
    }
    return out;
}

ModuleRecord record_of(const SweepModule& sm) {
    ModuleRecord rec;
    rec.name = sm.name;
    rec.dims = sm.rep.dims;
    rec.projective = sm.projective;
    nlohmann::json detail;
    if (sm.undetermined) {
        rec.gp = "inconclusive";
        detail["error"] = sm.error;
    } else {
        rec.gp = gp_verdict_name(sm.gp.verdict);
        detail["gp"] = gp_json(sm.gp, false);
        if (sm.self_orth_computed) {
            rec.self_orthogonal = cert_kind_name(sm.self_orth.kind);
            detail["self_orthogonality"] = certificate_json(sm.self_orth, false);
        }
    }
    rec.detail = std::move(detail);
    return rec;
}

}  // namespace

VerificationReport gpc_check(const AlgebraPtr& alg, int bound) {
    auto t0 = Clock::now();
    VerificationReport report;
    report.algebra = algebra_json(*alg);

    TheoremCheck check;
    check.name = "gpc";
    check.witnesses = nlohmann::json::array();

    std::vector<SweepModule> sweep = sweep_modules(alg, bound, true);
    int gp_count = 0, violation_count = 0, indecisive = 0;
    for (const SweepModule& sm : sweep) {
        report.modules.push_back(record_of(sm));
        if (sm.undetermined || sm.gp.verdict == GpVerdict::Inconclusive ||
            (sm.self_orth_computed && sm.self_orth.kind == CertKind::UnknownBeyond)) {
            ++indecisive;
            continue;
        }
        if (sm.gp.verdict != GpVerdict::Yes) continue;
        ++gp_count;
        if (sm.self_orth.vanishes() && !sm.projective) {
            ++violation_count;
            check.notes.push_back("violation: " + sm.name + " dims " + join_dims(sm.rep.dims) +
                                  " is certified self-orthogonal Gorenstein projective but "
                                  "not projective");
            check.witnesses.push_back(
                {{"module", sm.name},
                 {"algebra_text", format_algebra(*alg)},
                 {"module_text", format_module(sm.rep, "<see algebra_text>")}});
        }
    }
    check.notes.insert(check.notes.begin(),
                       std::to_string(sweep.size()) + " indecomposables, " +
                           std::to_string(gp_count) + " certified Gorenstein projective, " +
                           std::to_string(violation_count) + " violations, " +
                           std::to_string(indecisive) + " indecisive");
    if (violation_count > 0)
        check.verdict = Verdict::Fail;
    else if (indecisive > 0)
        check.verdict = Verdict::Inconclusive;
    report.timing["sweep"] = seconds_since(t0);
    report.theorems.push_back(std::move(check));
    return report;
}

VerificationReport symmetry_check(const AlgebraPtr& alg, int bound) {
    auto t0 = Clock::now();
    VerificationReport report;
    report.algebra = algebra_json(*alg);

    TheoremCheck check;
    check.name = "symmetry";
    check.witnesses = nlohmann::json::array();

    std::vector<SweepModule> sweep = sweep_modules(alg, bound, true);
    int compared = 0;
    for (SweepModule& sm : sweep) {
        if (sm.undetermined) {
            check.verdict = worst(check.verdict, Verdict::Inconclusive);
            check.notes.push_back(sm.name + ": " + sm.error);
            continue;
        }
        ModuleRecord rec = record_of(sm);
        if (sm.gp.verdict != GpVerdict::Yes) {
            if (sm.gp.verdict == GpVerdict::Inconclusive)
                check.verdict = worst(check.verdict, Verdict::Inconclusive);
            report.modules.push_back(std::move(rec));
            continue;
        }
        ++compared;
        try {
            Representation dual = dual_star(sm.rep);
            Certificate so_dual = self_orthogonality_certificate(dual, bound);
            bool kinds_match = so_dual.kind == sm.self_orth.kind;
            if (kinds_match && sm.self_orth.kind == CertKind::NonzeroAt)
                kinds_match = so_dual.nonzero_degree == sm.self_orth.nonzero_degree;
            std::vector<int> table = ext_table(sm.rep, sm.rep, 6);
            std::vector<int> dual_table = ext_table(dual, dual, 6);
            rec.detail["dual_self_orthogonality"] = certificate_json(so_dual, false);
            rec.detail["self_ext_dims"] = table;
            rec.detail["dual_self_ext_dims"] = dual_table;
            if (!kinds_match || table != dual_table) {
                check.verdict = Verdict::Fail;
                check.notes.push_back(sm.name +
                                      ": self-orthogonality or Ext table differs from its "
                                      "hom-dual");
            }
            if (sm.self_orth.kind == CertKind::UnknownBeyond ||
                so_dual.kind == CertKind::UnknownBeyond)
                check.verdict = worst(check.verdict, Verdict::Inconclusive);
        } catch (const UndeterminedIsomorphism& e) {
            check.verdict = worst(check.verdict, Verdict::Inconclusive);
            check.notes.push_back(sm.name + ": " + e.what());
        }
        report.modules.push_back(std::move(rec));
    }

    VerificationReport forward = gpc_check(alg, bound);
    VerificationReport backward = gpc_check(alg->opposite(), bound);
    Verdict fv = forward.overall(), bv = backward.overall();
    check.notes.push_back(std::to_string(compared) +
                          " Gorenstein projective indecomposables compared with their duals");
    check.notes.push_back("gpc verdict here: " + verdict_name(fv) +
                          ", on the opposite algebra: " + verdict_name(bv));
    if (fv != bv) {
        check.verdict = Verdict::Fail;
        check.notes.push_back("gpc verdicts of the algebra and its opposite differ");
    } else {
        check.verdict = worst(check.verdict, fv);
    }
    report.timing["sweep"] = seconds_since(t0);
    report.theorems.push_back(std::move(check));
    return report;
}

VerificationReport syzygy_orthogonality_check(const AlgebraPtr& alg, int bound) {
    auto t0 = Clock::now();
    VerificationReport report;
    report.algebra = algebra_json(*alg);

    TheoremCheck check;
    check.name = "syzygy_orthogonality";
    check.witnesses = nlohmann::json::array();

    std::vector<SweepModule> sweep = sweep_modules(alg, bound, true);
    int examined = 0;
    for (SweepModule& sm : sweep) {
        ModuleRecord rec = record_of(sm);
        if (sm.undetermined) {
            check.verdict = worst(check.verdict, Verdict::Inconclusive);
        } else if (sm.gp.verdict == GpVerdict::Inconclusive) {
            check.verdict = worst(check.verdict, Verdict::Inconclusive);
        } else if (sm.gp.verdict == GpVerdict::Yes && sm.self_orth.vanishes()) {
            ++examined;
            try {
                Resolution res(sm.rep);
                nlohmann::json syz = nlohmann::json::array();
                for (int i = 1; i <= 4; ++i) {
                    Certificate c = self_orthogonality_certificate(res.syzygy(i), bound);
                    syz.push_back(certificate_json(c, false));
                    if (c.kind == CertKind::NonzeroAt) {
                        check.verdict = Verdict::Fail;
                        check.notes.push_back(sm.name + ": syzygy " + std::to_string(i) +
                                              " is not self-orthogonal");
                    } else if (c.kind == CertKind::UnknownBeyond) {
                        check.verdict = worst(check.verdict, Verdict::Inconclusive);
                    }
                }
                Certificate tr_cert =
                    self_orthogonality_certificate(transpose(sm.rep), bound);
                rec.detail["syzygy_self_orthogonality"] = std::move(syz);
                rec.detail["transpose_self_orthogonality"] =
                    certificate_json(tr_cert, false);
                if (tr_cert.kind == CertKind::NonzeroAt) {
                    check.verdict = Verdict::Fail;
                    check.notes.push_back(sm.name + ": transpose is not self-orthogonal");
                } else if (tr_cert.kind == CertKind::UnknownBeyond) {
                    check.verdict = worst(check.verdict, Verdict::Inconclusive);
                }
            } catch (const UndeterminedIsomorphism& e) {
                check.verdict = worst(check.verdict, Verdict::Inconclusive);
                check.notes.push_back(sm.name + ": " + e.what());
            }
        }
        report.modules.push_back(std::move(rec));
    }
    check.notes.insert(check.notes.begin(),
                       std::to_string(examined) +
                           " self-orthogonal Gorenstein projective indecomposables examined");
    report.timing["sweep"] = seconds_since(t0);
    report.theorems.push_back(std::move(check));
    return report;
}

VerificationReport ext_projectivity_check(const AlgebraPtr& alg, int bound) {
    auto t0 = Clock::now();
    VerificationReport report;
    report.algebra = algebra_json(*alg);

    TheoremCheck check;
    check.name = "ext_projectivity";
    check.witnesses = nlohmann::json::array();

    Representation regular = regular_module(alg);
    std::vector<SweepModule> sweep = sweep_modules(alg, bound, false);
    int qualified = 0;
    for (SweepModule& sm : sweep) {
        ModuleRecord rec = record_of(sm);
        if (sm.undetermined || sm.gp.verdict == GpVerdict::Inconclusive) {
            check.verdict = worst(check.verdict, Verdict::Inconclusive);
            report.modules.push_back(std::move(rec));
            continue;
        }
        try {
            Representation target = direct_sum(alg, {sm.rep, regular}).total;
            Certificate c = ext_vanishing_certificate(sm.rep, target, bound);
            rec.detail["ext_against_self_plus_algebra"] = certificate_json(c, false);
            if (c.kind == CertKind::UnknownBeyond) {
                check.verdict = worst(check.verdict, Verdict::Inconclusive);
            } else if (c.vanishes()) {
                ++qualified;
                bool gp_yes = sm.gp.verdict == GpVerdict::Yes;
                if (sm.projective != gp_yes) {
                    check.verdict = Verdict::Fail;
                    check.notes.push_back(
                        sm.name + ": projectivity (" + (sm.projective ? "yes" : "no") +
                        ") and Gorenstein projectivity (" + (gp_yes ? "yes" : "no") +
                        ") disagree under certified Ext vanishing");
                }
            }
        } catch (const UndeterminedIsomorphism& e) {
            check.verdict = worst(check.verdict, Verdict::Inconclusive);
            check.notes.push_back(sm.name + ": " + e.what());
        }
        report.modules.push_back(std::move(rec));
    }
    check.notes.insert(check.notes.begin(),
                       std::to_string(qualified) +
                           " indecomposables with certified vanishing against module plus "
                           "algebra; projectivity and Gorenstein projectivity agreed on all "
                           "of them");
    report.timing["sweep"] = seconds_since(t0);
    report.theorems.push_back(std::move(check));
    return report;
}

AlgebraPtr random_nakayama_algebra(std::mt19937_64& rng, int max_vertices, uint32_t p) {
    int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    bool cyclic = std::uniform_int_distribution<int>(0, 1)(rng) == 1;

    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    int arrows = cyclic ? n : n - 1;
    for (int i = 0; i < arrows; ++i)
        q.arrows.push_back(Arrow{"a" + std::to_string(i + 1), i, (i + 1) % n});

    std::vector<PathSum> rels;
    auto add_relation = [&](int start, int len) {
        PathWord w;
        w.source = start;
        w.target = start;
        for (int k = 0; k < len; ++k) {
            int a = w.target;  /* arrow index equals its source vertex on these quivers */
            w.arrows.push_back(a);
            w.target = (w.target + 1) % n;
        }
        rels.push_back(PathSum{{{1, w}}});
    };
    if (cyclic) {
        int count = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int r = 0; r < count; ++r) {
            int len = std::uniform_int_distribution<int>(2, 5)(rng);
            int start = std::uniform_int_distribution<int>(0, n - 1)(rng);
            add_relation(start, len);
        }
    } else if (n >= 3) {
        int count = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int r = 0; r < count; ++r) {
            int len = std::uniform_int_distribution<int>(2, std::min(5, n - 1))(rng);
            int start = std::uniform_int_distribution<int>(0, n - 1 - len)(rng);
            add_relation(start, len);
        }
    }
    return build_algebra(std::move(q), std::move(rels), p);
}

VerificationReport fuzz_nakayama(const FuzzOptions& opt) {
    if (opt.count < 1) throw PreconditionError("fuzz count must be at least 1");
    if (opt.max_vertices < 1) throw PreconditionError("fuzz needs at least 1 vertex");
    auto t0 = Clock::now();

    VerificationReport report;
    report.algebra = {{"generator",
                       {{"seed", opt.seed},
                        {"count", opt.count},
                        {"max_vertices", opt.max_vertices},
                        {"char", opt.p},
                        {"bound", opt.bound}}}};

    TheoremCheck check;
    check.name = "fuzz";
    check.witnesses = nlohmann::json::array();

    std::mt19937_64 rng(opt.seed);
    int violations = 0, indecisive = 0;
    for (int k = 0; k < opt.count; ++k) {
        AlgebraPtr alg = random_nakayama_algebra(rng, opt.max_vertices, opt.p);
        VerificationReport sub = gpc_check(alg, opt.bound);
        Verdict v = sub.overall();
        if (v == Verdict::Fail) {
            ++violations;
            check.notes.push_back("algebra " + std::to_string(k) + ": violation");
            nlohmann::json w;
            w["index"] = k;
            w["algebra_text"] = format_algebra(*alg);
            w["gpc"] = sub.to_json(true, false);
            check.witnesses.push_back(std::move(w));
        } else if (v == Verdict::Inconclusive) {
            ++indecisive;
            check.notes.push_back("algebra " + std::to_string(k) + ": inconclusive");
            nlohmann::json w;
            w["index"] = k;
            w["algebra_text"] = format_algebra(*alg);
            check.witnesses.push_back(std::move(w));
        }
    }
    check.notes.insert(check.notes.begin(),
                       std::to_string(opt.count) + " algebras fuzzed, " +
                           std::to_string(violations) + " violations, " +
                           std::to_string(indecisive) + " indecisive");
    if (violations > 0)
        check.verdict = Verdict::Fail;
    else if (indecisive > 0)
        check.verdict = Verdict::Inconclusive;
    report.timing["fuzz"] = seconds_since(t0);
    report.theorems.push_back(std::move(check));
    return report;
}

}  // namespace gorhom
