#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gorhom/errors.h"
#include "gorhom/homology.h"
#include "gorhom/io.h"

using namespace gorhom;

namespace {

AlgebraPtr parse(const std::string& text) {
    ParsedAlgebra pa = parse_algebra_text(text);
    return build_algebra(std::move(pa.quiver), std::move(pa.relations), pa.characteristic);
}

AlgebraPtr cyclic(int n) {
    std::string text = "vertices:";
    for (int i = 1; i <= n; ++i) text += " " + std::to_string(i);
    text += "\n";
    for (int i = 1; i <= n; ++i)
        text += "arrow a" + std::to_string(i) + ": " + std::to_string(i) + " -> " +
                std::to_string(i % n + 1) + "\n";
    text += "relations:";
    for (int i = 1; i <= n; ++i)
        text += std::string(i > 1 ? "," : "") + " a" + std::to_string(i) + "*a" +
                std::to_string(i % n + 1);
    text += "\n";
    return parse(text);
}

AlgebraPtr a2() { return parse("vertices: 1 2\narrow a: 1 -> 2\n"); }

int vertex_rank(const Morphism& f, int v) { return rank(f.blocks[v]); }

}  // namespace

TEST_CASE("minimal resolution of a simple over the cyclic algebra") {
    AlgebraPtr alg = cyclic(4);
    Representation s1 = simple_module(alg, 0);
    Resolution res(s1);

    for (int i = 0; i <= 6; ++i) {
        /* P_i is the projective at vertex 1+i mod 4, never anything bigger */
        CHECK(res.term(i).dims == projective_module(alg, (0 + i) % 4).dims);
        CHECK(res.syzygy(i + 1).dims == simple_module(alg, (i + 1) % 4).dims);
    }
    CHECK(compose(res.augmentation(), res.differential(1)).is_zero());
    for (int i = 1; i <= 5; ++i)
        CHECK(compose(res.differential(i), res.differential(i + 1)).is_zero());

    /* exactness at P_i, vertex by vertex */
    for (int i = 1; i <= 4; ++i)
        for (int v = 0; v < 4; ++v) {
            int dim_here = res.term(i).dims[v];
            CHECK(vertex_rank(res.differential(i), v) +
                      vertex_rank(res.differential(i + 1), v) ==
                  dim_here);
        }
}

TEST_CASE("finite resolutions stop at zero") {
    AlgebraPtr alg = a2();
    Representation s1 = simple_module(alg, 0);
    Resolution res(s1);
    CHECK(res.term(0).dims == std::vector<int>{1, 1});
    CHECK(res.term(1).dims == std::vector<int>{0, 1});
    CHECK(res.term(2).is_zero());
    CHECK(res.syzygy(2).is_zero());
    CHECK(res.term(5).is_zero());
}

TEST_CASE("self extension dimensions over cyclic algebras") {
    for (int n : {4, 5}) {
        AlgebraPtr alg = cyclic(n);
        for (int j = 0; j < n; ++j) {
            Representation s = simple_module(alg, j);
            std::vector<int> table = ext_table(s, s, 2 * n);
            for (int i = 1; i <= 2 * n; ++i)
                CHECK(table[i - 1] == (i % n == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("extensions of and by projectives vanish") {
    AlgebraPtr alg = cyclic(4);
    Representation p1 = projective_module(alg, 0);
    Representation s1 = simple_module(alg, 0);
    Representation reg = regular_module(alg);
    for (int i = 1; i <= 4; ++i) {
        CHECK(ext_dim(p1, s1, i) == 0);
        CHECK(ext_dim(p1, reg, i) == 0);
        CHECK(ext_dim(reg, s1, i) == 0);
    }

    AlgebraPtr h = a2();
    CHECK(ext_dim(simple_module(h, 0), simple_module(h, 1), 1) == 1);
    CHECK(ext_dim(simple_module(h, 0), simple_module(h, 1), 2) == 0);
    CHECK(ext_dim(simple_module(h, 1), simple_module(h, 0), 1) == 0);
}

TEST_CASE("one-shot and table extension dimensions agree") {
    AlgebraPtr alg = cyclic(5);
    Representation s1 = simple_module(alg, 0);
    Representation s3 = simple_module(alg, 2);
    std::vector<int> table = ext_table(s1, s3, 8);
    for (int i = 1; i <= 8; ++i) CHECK(table[i - 1] == ext_dim(s1, s3, i));
}

TEST_CASE("extension dimensions equal stable hom dimensions of syzygies") {
    AlgebraPtr alg = cyclic(4);
    std::vector<Representation> corpus = nakayama_indecomposables(alg);
    for (const Representation& m : corpus)
        for (const Representation& n : corpus) {
            Resolution res(m);
            for (int i = 1; i <= 5; ++i)
                CHECK(ext_dim(m, n, i) == stable_hom_dim(res.syzygy(i), n));
        }
}

TEST_CASE("dimension shifting along syzygies") {
    AlgebraPtr alg = cyclic(5);
    Representation s1 = simple_module(alg, 0);
    Representation s2 = simple_module(alg, 1);
    Resolution res(s1);
    for (int i = 1; i <= 6; ++i) {
        CHECK(ext_dim(s1, s2, i + 1) == ext_dim(res.syzygy(1), s2, i));
        CHECK(ext_dim(s1, s1, i + 1) == ext_dim(res.syzygy(1), s1, i));
    }
}

TEST_CASE("stable hom kills projectives") {
    AlgebraPtr alg = cyclic(4);
    Representation p1 = projective_module(alg, 0);
    Representation s1 = simple_module(alg, 0);
    Representation reg = regular_module(alg);
    CHECK(stable_hom_dim(p1, s1) == 0);
    CHECK(stable_hom_dim(reg, reg) == 0);
    CHECK(stable_hom_dim(s1, s1) == 1); /* identity survives */
    CHECK(stable_hom_dim(s1, p1) == 0); /* any map factors through the cover */
}

TEST_CASE("projectivity recognition") {
    AlgebraPtr alg = cyclic(4);
    CHECK(is_projective(projective_module(alg, 2)));
    CHECK(is_projective(regular_module(alg)));
    CHECK(is_projective(zero_module(alg)));
    CHECK_FALSE(is_projective(simple_module(alg, 0)));
    AlgebraPtr h = a2();
    CHECK(is_projective(simple_module(h, 1)));
    CHECK_FALSE(is_projective(simple_module(h, 0)));
}

TEST_CASE("algebra dual of a projective is the opposite projective") {
    for (AlgebraPtr alg : {cyclic(4), a2()}) {
        AlgebraPtr opp = alg->opposite();
        for (int v = 0; v < alg->quiver().num_vertices(); ++v) {
            Representation d = dual_star(projective_module(alg, v));
            CHECK(d.algebra == opp);
            IsoResult iso = is_isomorphic(d, projective_module(opp, v));
            CHECK(iso.verdict == IsoVerdict::Yes);
        }
    }
}

TEST_CASE("double algebra dual restores certified modules") {
    AlgebraPtr alg = cyclic(4);
    for (int v = 0; v < 4; ++v) {
        Representation s = simple_module(alg, v);
        Representation dd = dual_star(dual_star(s));
        CHECK(dd.algebra == alg);
        CHECK(is_isomorphic(dd, s).verdict == IsoVerdict::Yes);
    }
}

TEST_CASE("dualizing morphisms reverses composition") {
    AlgebraPtr alg = cyclic(4);
    Representation p1 = projective_module(alg, 0);
    Representation p4 = projective_module(alg, 3);
    /* a nonzero map p1 -> p4 lands in the socle */
    std::vector<Morphism> maps = hom_space(p1, p4);
    REQUIRE(maps.size() == 1);
    StarDual d1 = dual_star_data(p1);
    StarDual d4 = dual_star_data(p4);
    Morphism f = maps[0];
    Morphism fs = star_morphism(f, d1, d4);
    CHECK(fs.source.dims == d4.dual.dims);
    CHECK(fs.target.dims == d1.dual.dims);
    CHECK(is_valid_morphism(fs));
    CHECK_FALSE(fs.is_zero());

    Morphism id = identity_morphism(p1);
    Morphism ids = star_morphism(id, d1, d1);
    CHECK(ids.blocks == identity_morphism(d1.dual).blocks);

    /* (f after g)^* = g^* after f^* for g: p4 -> p4 scalar */
    Morphism g = identity_morphism(p4);
    Morphism gf = compose(g, f);
    Morphism gfs = star_morphism(gf, d1, d4);
    Morphism split = compose(star_morphism(f, d1, d4), star_morphism(g, d4, d4));
    CHECK(gfs.blocks == split.blocks);
}

TEST_CASE("transpose of simples rotates around the cycle") {
    for (int n : {4, 5}) {
        AlgebraPtr alg = cyclic(n);
        AlgebraPtr opp = alg->opposite();
        for (int j = 0; j < n; ++j) {
            Representation tr = transpose(simple_module(alg, j));
            CHECK(tr.algebra == opp);
            IsoResult iso = is_isomorphic(tr, simple_module(opp, (j + 1) % n));
            CHECK(iso.verdict == IsoVerdict::Yes);
        }
    }
}

TEST_CASE("transpose kills projectives and is an involution off them") {
    AlgebraPtr alg = cyclic(4);
    CHECK(transpose(projective_module(alg, 1)).is_zero());
    CHECK(transpose(regular_module(alg)).is_zero());

    AlgebraPtr h = a2();
    Representation s1 = simple_module(h, 0);
    Representation trtr = transpose(transpose(s1));
    CHECK(trtr.algebra == h);
    CHECK(is_isomorphic(trtr, s1).verdict == IsoVerdict::Yes);
    /* over a2 the transpose of s1 is the opposite simple at vertex 2 */
    CHECK(is_isomorphic(transpose(s1), simple_module(h->opposite(), 1)).verdict ==
          IsoVerdict::Yes);
}

TEST_CASE("self-injectivity detection") {
    for (int n : {3, 4, 5, 6}) CHECK(is_self_injective(cyclic(n)));
    CHECK_FALSE(is_self_injective(a2()));
    CHECK(is_self_injective(parse("vertices: 1 2 3\n")));
    CHECK(is_self_injective(parse("vertices: 1\narrow x: 1 -> 1\nrelations: x*x*x\n")));
    CHECK_FALSE(is_self_injective(parse(
        "vertices: 1 2 3 4\n"
        "arrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\n"
        "relations: a*b - c*d\n")));
}

TEST_CASE("vanishing certificates from syzygy orbits") {
    AlgebraPtr alg = cyclic(4);
    Representation s1 = simple_module(alg, 0);
    Representation reg = regular_module(alg);

    Certificate c = ext_vanishing_certificate(s1, reg, 64);
    CHECK(c.kind == CertKind::CertifiedVanishing);
    CHECK(c.period_start == 0);
    CHECK(c.period_end == 4);
    REQUIRE(c.witness.has_value());
    CHECK(is_valid_morphism(*c.witness));
    for (int d : c.ext_dims) CHECK(d == 0);

    Certificate tight = ext_vanishing_certificate(s1, reg, 2);
    CHECK(tight.kind == CertKind::UnknownBeyond);
    CHECK(tight.bound == 2);

    Certificate self = self_orthogonality_certificate(s1, 64);
    CHECK(self.kind == CertKind::NonzeroAt);
    CHECK(self.nonzero_degree == 4);
    CHECK(self.nonzero_dim == 1);
    CHECK(self.ext_dims == std::vector<int>{0, 0, 0, 1});

    CHECK_THROWS_AS(ext_vanishing_certificate(s1, reg, 0), PreconditionError);
}

TEST_CASE("certificates on projectives are immediate") {
    AlgebraPtr alg = cyclic(4);
    Representation p1 = projective_module(alg, 0);
    Certificate c = self_orthogonality_certificate(p1, 64);
    CHECK(c.vanishes());
    CHECK(c.period_end <= 2); /* syzygies are zero from degree 1 on */
}

TEST_CASE("gorenstein projectivity verdicts") {
    AlgebraPtr alg = cyclic(4);
    for (int v = 0; v < 4; ++v) {
        GpResult g = is_gorenstein_projective(simple_module(alg, v), 64);
        CHECK(g.verdict == GpVerdict::Yes);
        CHECK(g.forward.vanishes());
        CHECK(g.transposed.vanishes());
    }

    AlgebraPtr h = a2();
    GpResult bad = is_gorenstein_projective(simple_module(h, 0), 64);
    CHECK(bad.verdict == GpVerdict::No);
    CHECK(bad.forward.kind == CertKind::NonzeroAt);
    CHECK(bad.forward.nonzero_degree == 1);
    CHECK(bad.forward.nonzero_dim == 1);

    GpResult good = is_gorenstein_projective(projective_module(h, 0), 64);
    CHECK(good.verdict == GpVerdict::Yes);
}

TEST_CASE("ext rejects mismatched algebras") {
    AlgebraPtr alg = cyclic(4);
    AlgebraPtr h = a2();
    CHECK_THROWS_AS(ext_dim(simple_module(alg, 0), simple_module(h, 0), 1),
                    AlgebraMismatch);
}
