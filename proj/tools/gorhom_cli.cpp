/* Command line front end. Subcommands either compute one homological
 * invariant of a single module or sweep every indecomposable of a Nakayama
 * algebra and report verdicts. Exit codes: 0 all checks pass or the answer
 * is decisive, 1 a check failed, 2 inconclusive, 3 input error. */

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gorhom/errors.h"
#include "gorhom/harness.h"
#include "gorhom/io.h"

using namespace gorhom;

namespace {

int exit_code(Verdict v) {
    if (v == Verdict::Pass) return 0;
    if (v == Verdict::Fail) return 1;
    return 2;
}

void print_report(const VerificationReport& r, bool json, bool verbose, bool timing) {
    if (json)
        std::cout << r.to_json(verbose, timing).dump(2) << "\n";
    else
        std::cout << r.to_text();
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string dims_text(const std::vector<int>& dims) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    out << ')';
    return out.str();
}

std::string cert_text(const Certificate& c) {
    std::ostringstream out;
    if (c.kind == CertKind::CertifiedVanishing)
        out << "certified vanishing: syzygy " << c.period_end << " isomorphic to syzygy "
            << c.period_start << " (bound " << c.bound << ")";
    else if (c.kind == CertKind::NonzeroAt)
        out << "nonzero at degree " << c.nonzero_degree << ", dimension " << c.nonzero_dim;
    else
        out << "unknown beyond bound " << c.bound;
    return out.str();
}

std::string multiplicity_text(const BoundQuiverAlgebra& alg, const std::vector<int>& mult) {
    std::ostringstream out;
    bool first = true;
    for (size_t v = 0; v < mult.size(); ++v) {
        if (mult[v] == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << "P(" << alg.quiver().vertices[v] << ")";
        if (mult[v] > 1) out << "^" << mult[v];
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological invariants of modules over bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    uint32_t characteristic = 2;
    bool json = false, verbose = false, timing = false;
    int bound = kDefaultBound;
    int length_cap = 64;
    app.add_option("--char", characteristic,
                   "coefficient field characteristic, a prime (files may override)")
        ->capture_default_str();
    app.add_flag("--json", json, "machine readable report on standard output");
    app.add_flag("--verbose", verbose, "include isomorphism witnesses in JSON reports");
    app.add_flag("--timing", timing, "include wall clock timings in JSON reports");
    app.add_option("--bound", bound, "syzygy orbit search bound for certificates")
        ->capture_default_str();
    app.add_option("--length-cap", length_cap, "maximal residue path length accepted")
        ->capture_default_str();

    std::string algebra_path, module_path, second_module_path;
    int resolve_length = 8;
    int upto = 6;
    int family_n = 0, family_t = -1;
    FuzzOptions fuzz_opt;

    CLI::App* cmd_build = app.add_subcommand("build", "build an algebra and print its shape");
    cmd_build->add_option("algebra", algebra_path, "algebra file")->required();

    CLI::App* cmd_resolve =
        app.add_subcommand("resolve", "print a minimal projective resolution");
    cmd_resolve->add_option("algebra", algebra_path, "algebra file")->required();
    cmd_resolve->add_option("module", module_path, "module file")->required();
    cmd_resolve->add_option("--length", resolve_length, "number of resolution terms")
        ->capture_default_str();

    CLI::App* cmd_ext = app.add_subcommand("ext", "print dim Ext^i(M, N) for i = 1..upto");
    cmd_ext->add_option("algebra", algebra_path, "algebra file")->required();
    cmd_ext->add_option("M", module_path, "first module file")->required();
    cmd_ext->add_option("N", second_module_path, "second module file")->required();
    cmd_ext->add_option("--upto", upto, "highest degree")->capture_default_str();

    CLI::App* cmd_gp = app.add_subcommand("gp", "certify Gorenstein projectivity");
    cmd_gp->add_option("algebra", algebra_path, "algebra file")->required();
    cmd_gp->add_option("module", module_path, "module file")->required();

    CLI::App* cmd_selforth =
        app.add_subcommand("selforth", "certify vanishing of all self extensions");
    cmd_selforth->add_option("algebra", algebra_path, "algebra file")->required();
    cmd_selforth->add_option("module", module_path, "module file")->required();

    CLI::App* cmd_transpose =
        app.add_subcommand("transpose", "print the transpose over the opposite algebra");
    cmd_transpose->add_option("algebra", algebra_path, "algebra file")->required();
    cmd_transpose->add_option("module", module_path, "module file")->required();

    CLI::App* cmd_star =
        app.add_subcommand("star", "print the algebra dual over the opposite algebra");
    cmd_star->add_option("algebra", algebra_path, "algebra file")->required();
    cmd_star->add_option("module", module_path, "module file")->required();

    CLI::App* cmd_family = app.add_subcommand(
        "example25", "verify the cyclic family: simples with long self extension gaps");
    cmd_family->add_option("--n", family_n, "number of vertices, at least 3")->required();
    cmd_family->add_option("--t", family_t, "verified gap length (default n - 2)");

    CLI::App* cmd_gpc = app.add_subcommand(
        "gpc-check", "sweep all indecomposables for self orthogonal non projective "
                     "Gorenstein projectives");
    cmd_gpc->add_option("algebra", algebra_path, "algebra file")->required();

    CLI::App* cmd_symmetry = app.add_subcommand(
        "symmetry", "compare each Gorenstein projective with its algebra dual and the "
                    "sweep verdict with the opposite algebra's");
    cmd_symmetry->add_option("algebra", algebra_path, "algebra file")->required();

    CLI::App* cmd_syzorth = app.add_subcommand(
        "prop34", "check syzygies and transposes of self orthogonal Gorenstein "
                  "projectives stay self orthogonal");
    cmd_syzorth->add_option("algebra", algebra_path, "algebra file")->required();

    CLI::App* cmd_extproj = app.add_subcommand(
        "prop37", "check certified Ext vanishing against module plus algebra makes "
                  "projectivity and Gorenstein projectivity agree");
    cmd_extproj->add_option("algebra", algebra_path, "algebra file")->required();

    CLI::App* cmd_fuzz = app.add_subcommand(
        "fuzz", "sweep randomly generated Nakayama algebras for violations");
    cmd_fuzz->add_option("--seed", fuzz_opt.seed, "generator seed")->capture_default_str();
    cmd_fuzz->add_option("--count", fuzz_opt.count, "number of algebras")
        ->capture_default_str();
    cmd_fuzz->add_option("--max-vertices", fuzz_opt.max_vertices, "largest quiver size")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (app.got_subcommand(cmd_build)) {
            AlgebraPtr alg = load_algebra_file(algebra_path, characteristic, length_cap);
            bool nak = is_nakayama(*alg);
            bool selfinj = is_self_injective(alg);
            if (json) {
                nlohmann::json j = algebra_json(*alg);
                j["nakayama"] = nak;
                j["self_injective"] = selfinj;
                print_json(j);
            } else {
                const Quiver& q = alg->quiver();
                std::cout << "vertices: " << q.num_vertices() << "\n"
                          << "arrows: " << q.num_arrows() << "\n"
                          << "relations: " << alg->relations().size() << "\n"
                          << "char: " << alg->characteristic() << "\n"
                          << "dimension: " << alg->dim() << "\n"
                          << "basis size: " << alg->basis().size() << "\n"
                          << "loewy bound: " << alg->loewy_bound() << "\n"
                          << "nakayama: " << (nak ? "yes" : "no") << "\n"
                          << "self-injective: " << (selfinj ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_resolve)) {
            AlgebraPtr alg = load_algebra_file(algebra_path, characteristic, length_cap);
            Representation m = load_module_file(module_path, alg);
            if (resolve_length < 0) throw PreconditionError("length must be nonnegative");
            Resolution res(m);
            res.extend_to(resolve_length);
            nlohmann::json terms = nlohmann::json::array();
            for (int i = 0; i <= resolve_length; ++i) {
                Cover cover = projective_cover(res.syzygy(i));
                nlohmann::json t;
                t["index"] = i;
                t["top_multiplicities"] = cover.top_multiplicities;
                t["term_dims"] = res.term(i).dims;
                t["syzygy_dims"] = res.syzygy(i + 1).dims;
                terms.push_back(t);
                if (!json)
                    std::cout << "P_" << i << " = "
                              << multiplicity_text(*alg, cover.top_multiplicities)
                              << "   dims " << dims_text(res.term(i).dims) << "   syzygy dims "
                              << dims_text(res.syzygy(i + 1).dims) << "\n";
            }
            if (json) {
                nlohmann::json j;
                j["algebra"] = algebra_json(*alg);
                j["module_dims"] = m.dims;
                j["terms"] = terms;
                print_json(j);
            }
            return 0;
        }

        if (app.got_subcommand(cmd_ext)) {
            AlgebraPtr alg = load_algebra_file(algebra_path, characteristic, length_cap);
            Representation m = load_module_file(module_path, alg);
            Representation n = load_module_file(second_module_path, alg);
            if (upto < 1) throw PreconditionError("upto must be at least 1");
            std::vector<int> table = ext_table(m, n, upto);
            if (json) {
                nlohmann::json j;
                j["algebra"] = algebra_json(*alg);
                j["ext_dims"] = table;
                print_json(j);
            } else {
                for (int i = 1; i <= upto; ++i)
                    std::cout << "dim Ext^" << i << " = " << table[i - 1] << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_gp)) {
            AlgebraPtr alg = load_algebra_file(algebra_path, characteristic, length_cap);
            Representation m = load_module_file(module_path, alg);
            GpResult g = is_gorenstein_projective(m, bound);
            if (json) {
                nlohmann::json j = gp_json(g, verbose);
                j["algebra"] = algebra_json(*alg);
                print_json(j);
            } else {
                std::cout << "gorenstein projective: " << gp_verdict_name(g.verdict) << "\n"
                          << "  against the algebra: " << cert_text(g.forward) << "\n";
                if (g.forward.vanishes())
                    std::cout << "  transpose against the opposite algebra: "
                              << cert_text(g.transposed) << "\n";
            }
            return g.verdict == GpVerdict::Inconclusive ? 2 : 0;
        }

        if (app.got_subcommand(cmd_selforth)) {
            AlgebraPtr alg = load_algebra_file(algebra_path, characteristic, length_cap);
            Representation m = load_module_file(module_path, alg);
            Certificate c = self_orthogonality_certificate(m, bound);
            if (json) {
                nlohmann::json j = certificate_json(c, verbose);
                j["algebra"] = algebra_json(*alg);
                print_json(j);
            } else {
                std::cout << "self orthogonality: " << cert_text(c) << "\n";
            }
            return c.kind == CertKind::UnknownBeyond ? 2 : 0;
        }

        if (app.got_subcommand(cmd_transpose) || app.got_subcommand(cmd_star)) {
            AlgebraPtr alg = load_algebra_file(algebra_path, characteristic, length_cap);
            Representation m = load_module_file(module_path, alg);
            Representation out = app.got_subcommand(cmd_transpose) ? transpose(m)
                                                                   : dual_star(m);
            std::string alg_text = format_algebra(*out.algebra);
            std::string mod_text = format_module(out, "opposite.algebra");
            if (json) {
                nlohmann::json j;
                j["opposite_algebra_text"] = alg_text;
                j["module_text"] = mod_text;
                j["dims"] = out.dims;
                print_json(j);
            } else {
                std::cout << "# opposite algebra\n"
                          << alg_text << "\n# module over it (header is a placeholder)\n"
                          << mod_text;
            }
            return 0;
        }

        VerificationReport report;
        if (app.got_subcommand(cmd_family)) {
            if (family_t < 0) family_t = family_n - 2;
            report = verify_cyclic_family(family_n, family_t, bound, characteristic);
        } else if (app.got_subcommand(cmd_gpc)) {
            report = gpc_check(load_algebra_file(algebra_path, characteristic, length_cap),
                               bound);
        } else if (app.got_subcommand(cmd_symmetry)) {
            report = symmetry_check(
                load_algebra_file(algebra_path, characteristic, length_cap), bound);
        } else if (app.got_subcommand(cmd_syzorth)) {
            report = syzygy_orthogonality_check(
                load_algebra_file(algebra_path, characteristic, length_cap), bound);
        } else if (app.got_subcommand(cmd_extproj)) {
            report = ext_projectivity_check(
                load_algebra_file(algebra_path, characteristic, length_cap), bound);
        } else if (app.got_subcommand(cmd_fuzz)) {
            fuzz_opt.bound = bound;
            fuzz_opt.p = characteristic;
            report = fuzz_nakayama(fuzz_opt);
        }
        print_report(report, json, verbose, timing);
        return exit_code(report.overall());
    } catch (const gorhom::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const UndeterminedIsomorphism& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const gorhom::Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
