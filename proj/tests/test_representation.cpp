#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gorhom/errors.h"
#include "gorhom/io.h"
#include "gorhom/representation.h"

using namespace gorhom;

namespace {

AlgebraPtr parse(const std::string& text) {
    ParsedAlgebra pa = parse_algebra_text(text);
    return build_algebra(std::move(pa.quiver), std::move(pa.relations), pa.characteristic);
}

AlgebraPtr cyclic4() {
    return parse(
        "vertices: 1 2 3 4\n"
        "arrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow a3: 3 -> 4\narrow a4: 4 -> 1\n"
        "relations: a1*a2, a2*a3, a3*a4, a4*a1\n");
}

AlgebraPtr a2() { return parse("vertices: 1 2\narrow a: 1 -> 2\n"); }

AlgebraPtr kronecker() {
    return parse("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
}

/* rank of a morphism, summed over vertices */
int morphism_rank(const Morphism& f) {
    int r = 0;
    for (const Mat& b : f.blocks) r += rank(b);
    return r;
}

bool is_iso_morphism(const Morphism& f) {
    if (!is_valid_morphism(f)) return false;
    for (size_t v = 0; v < f.blocks.size(); ++v)
        if (f.blocks[v].rows != f.blocks[v].cols || rank(f.blocks[v]) != f.blocks[v].rows)
            return false;
    return true;
}

}  // namespace

TEST_CASE("projective and simple shapes") {
    AlgebraPtr alg = cyclic4();
    CHECK(projective_module(alg, 0).dims == std::vector<int>{1, 1, 0, 0});
    CHECK(projective_module(alg, 3).dims == std::vector<int>{1, 0, 0, 1});
    CHECK(simple_module(alg, 2).dims == std::vector<int>{0, 0, 1, 0});
    CHECK(regular_module(alg).dims == std::vector<int>{2, 2, 2, 2});
    CHECK(regular_module(alg).total_dim() == (int)alg->dim());

    AlgebraPtr h = a2();
    CHECK(projective_module(h, 0).dims == std::vector<int>{1, 1});
    CHECK(projective_module(h, 1).dims == std::vector<int>{0, 1});
    CHECK(regular_module(h).total_dim() == 3);
}

TEST_CASE("representations must satisfy the relations") {
    AlgebraPtr alg = cyclic4();
    std::vector<int> dims{1, 1, 1, 1};
    std::vector<Mat> ident(4, Mat::identity(1, 2));
    /* identity on every arrow violates a1*a2 = 0 */
    CHECK_THROWS_AS(make_representation(alg, dims, ident), PreconditionError);

    std::vector<Mat> bad(4, Mat(1, 2, 2)); /* wrong column count at vertex 1 */
    CHECK_THROWS_AS(make_representation(alg, dims, bad), PreconditionError);

    std::vector<Mat> zero(4, Mat(1, 1, 2));
    Representation ok = make_representation(alg, dims, zero);
    CHECK(ok.total_dim() == 4);
}

TEST_CASE("hom dimension from a projective equals the fiber dimension") {
    for (AlgebraPtr alg : {cyclic4(), a2()}) {
        int nv = alg->quiver().num_vertices();
        std::vector<Representation> targets;
        for (int v = 0; v < nv; ++v) {
            targets.push_back(simple_module(alg, v));
            targets.push_back(projective_module(alg, v));
        }
        targets.push_back(regular_module(alg));
        for (int v = 0; v < nv; ++v)
            for (const Representation& m : targets)
                CHECK((int)hom_space(projective_module(alg, v), m).size() == m.dims[v]);
    }
}

TEST_CASE("hom spaces consist of valid morphisms and add over direct sums") {
    AlgebraPtr alg = cyclic4();
    Representation p1 = projective_module(alg, 0);
    Representation s2 = simple_module(alg, 1);
    Representation reg = regular_module(alg);
    for (const Representation* m : {&p1, &s2, &reg})
        for (const Representation* n : {&p1, &s2, &reg})
            for (const Morphism& f : hom_space(*m, *n)) CHECK(is_valid_morphism(f));

    SumDecomposition sum = direct_sum(alg, {s2, reg});
    CHECK(hom_space(p1, sum.total).size() ==
          hom_space(p1, s2).size() + hom_space(p1, reg).size());
    CHECK(hom_space(sum.total, p1).size() ==
          hom_space(s2, p1).size() + hom_space(reg, p1).size());
}

TEST_CASE("direct sum inclusions and projections compose to identity") {
    AlgebraPtr alg = a2();
    Representation p1 = projective_module(alg, 0);
    Representation s1 = simple_module(alg, 0);
    SumDecomposition sum = direct_sum(alg, {p1, s1});
    CHECK(sum.total.dims == std::vector<int>{2, 1});
    REQUIRE(sum.inclusions.size() == 2);
    REQUIRE(sum.projections.size() == 2);
    for (int k = 0; k < 2; ++k) {
        Morphism round = compose(sum.projections[k], sum.inclusions[k]);
        CHECK(round.blocks == identity_morphism(k == 0 ? p1 : s1).blocks);
    }
    Morphism cross = compose(sum.projections[1], sum.inclusions[0]);
    CHECK(cross.is_zero());
}

TEST_CASE("coordinates invert linear combinations of a hom basis") {
    AlgebraPtr alg = cyclic4();
    Representation reg = regular_module(alg);
    std::vector<Morphism> basis = hom_space(reg, reg);
    REQUIRE(basis.size() >= 2);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<uint32_t> bit(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<uint32_t> want(basis.size());
        Morphism f = zero_morphism(reg, reg);
        for (size_t j = 0; j < basis.size(); ++j) {
            want[j] = bit(rng);
            if (want[j])
                for (size_t v = 0; v < f.blocks.size(); ++v)
                    f.blocks[v].add_in_place(basis[j].blocks[v], 1);
        }
        auto coords = coordinates_in(basis, f);
        REQUIRE(coords.has_value());
        CHECK(*coords == want);
    }
}

TEST_CASE("kernel and cokernel are exact at both ends") {
    AlgebraPtr alg = cyclic4();
    Representation s1 = simple_module(alg, 0);
    Cover cover = projective_cover(s1);
    CHECK(cover.proj.dims == projective_module(alg, 0).dims);
    CHECK(cover.top_multiplicities == std::vector<int>{1, 0, 0, 0});

    Morphism incl = kernel_inclusion(cover.epi);
    CHECK(incl.source.dims == std::vector<int>{0, 1, 0, 0}); /* the radical */
    CHECK(compose(cover.epi, incl).is_zero());
    CHECK(morphism_rank(incl) == incl.source.total_dim());

    Morphism proj = cokernel_projection(incl);
    CHECK(proj.target.total_dim() ==
          cover.proj.total_dim() - incl.source.total_dim());
    CHECK(compose(proj, incl).is_zero());
    /* the cokernel of the kernel recovers the image, here all of s1 */
    IsoResult iso = is_isomorphic(proj.target, s1);
    CHECK(iso.verdict == IsoVerdict::Yes);
}

TEST_CASE("projective covers are minimal and surjective") {
    AlgebraPtr alg = cyclic4();
    Representation reg = regular_module(alg);
    Cover c = projective_cover(reg);
    CHECK(c.top_multiplicities == std::vector<int>{1, 1, 1, 1});
    CHECK(c.proj.dims == reg.dims);
    CHECK(morphism_rank(c.epi) == reg.total_dim());

    Cover zc = projective_cover(zero_module(alg));
    CHECK(zc.proj.total_dim() == 0);

    AlgebraPtr h = a2();
    Representation s2 = simple_module(h, 1);
    CHECK(projective_cover(s2).proj.dims == s2.dims); /* s2 is projective */
}

TEST_CASE("vector space duality is an involution") {
    AlgebraPtr alg = cyclic4();
    for (int v = 0; v < 4; ++v) {
        Representation m = projective_module(alg, v);
        Representation dd = vs_dual(vs_dual(m));
        CHECK(dd.algebra == m.algebra);
        CHECK(dd.dims == m.dims);
        CHECK(dd.action == m.action);
    }
    /* dual of a projective over a self-injective algebra stays projective-sized */
    Representation d = vs_dual(projective_module(alg, 0));
    CHECK(d.algebra == alg->opposite());
    CHECK(d.total_dim() == 2);
}

TEST_CASE("isomorphism testing with verified witnesses") {
    AlgebraPtr alg = cyclic4();
    Representation p1 = projective_module(alg, 0);
    Representation p2 = projective_module(alg, 1);

    SumDecomposition ab = direct_sum(alg, {p1, p2});
    SumDecomposition ba = direct_sum(alg, {p2, p1});
    IsoResult iso = is_isomorphic(ab.total, ba.total);
    REQUIRE(iso.verdict == IsoVerdict::Yes);
    REQUIRE(iso.witness.has_value());
    CHECK(is_iso_morphism(*iso.witness));

    CHECK(is_isomorphic(p1, p1).verdict == IsoVerdict::Yes);
    CHECK(is_isomorphic(p1, p2).verdict == IsoVerdict::No);
    CHECK(is_isomorphic(simple_module(alg, 0), simple_module(alg, 1)).verdict ==
          IsoVerdict::No);
    CHECK(is_isomorphic(ab.total, p1).verdict == IsoVerdict::No);

    AlgebraPtr other = a2();
    CHECK_THROWS_AS(is_isomorphic(p1, projective_module(other, 0)), AlgebraMismatch);
}

TEST_CASE("modules with equal hom counts but different structure are separated") {
    /* over the Kronecker quiver the two structure maps matter */
    AlgebraPtr alg = kronecker();
    std::vector<int> dims{1, 1};
    Mat one = Mat::identity(1, 2);
    Mat zero(1, 1, 2);
    Representation m = make_representation(alg, dims, {one, zero});
    Representation n = make_representation(alg, dims, {zero, one});
    Representation same = make_representation(alg, dims, {one, zero});
    CHECK(is_isomorphic(m, n).verdict == IsoVerdict::No);
    IsoResult iso = is_isomorphic(m, same);
    CHECK(iso.verdict == IsoVerdict::Yes);
    CHECK(is_iso_morphism(*iso.witness));
}

TEST_CASE("serial algebra recognition") {
    CHECK(is_nakayama(*cyclic4()));
    CHECK(is_nakayama(*a2()));
    CHECK_FALSE(is_nakayama(*kronecker()));
    /* two arrows into one vertex */
    CHECK_FALSE(is_nakayama(
        *parse("vertices: 1 2 3\narrow a: 1 -> 3\narrow b: 2 -> 3\n")));
    CHECK(is_nakayama(*parse("vertices: 1\narrow x: 1 -> 1\nrelations: x*x*x\n")));
}

TEST_CASE("serial indecomposables: counts, validity, distinctness") {
    struct Case {
        AlgebraPtr alg;
        int expected;
    };
    for (auto [alg, expected] : {Case{cyclic4(), 8}, Case{a2(), 3}}) {
        std::vector<Representation> mods = nakayama_indecomposables(alg);
        CHECK((int)mods.size() == expected);
        for (const Representation& m : mods) {
            /* uniserial: one-dimensional top */
            Cover c = projective_cover(m);
            int top = 0;
            for (int t : c.top_multiplicities) top += t;
            CHECK(top == 1);
        }
        for (size_t i = 0; i < mods.size(); ++i)
            for (size_t j = i + 1; j < mods.size(); ++j)
                CHECK(is_isomorphic(mods[i], mods[j]).verdict == IsoVerdict::No);
    }
    CHECK_THROWS_AS(nakayama_indecomposables(kronecker()), NotNakayama);
}

TEST_CASE("module text round trip") {
    AlgebraPtr alg = cyclic4();
    std::vector<Representation> mods = nakayama_indecomposables(alg);
    mods.push_back(regular_module(alg));
    for (const Representation& m : mods) {
        Representation back = parse_module_text(format_module(m, "x.algebra"), alg);
        CHECK(back.dims == m.dims);
        CHECK(back.action == m.action);
    }
}

TEST_CASE("module text errors carry positions") {
    AlgebraPtr alg = a2();
    auto line_of = [&](const std::string& text) {
        try {
            parse_module_text(text, alg);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("dims: 1 1\n") == 1);                      /* missing header */
    CHECK(line_of("module over x\ndims: 1\n") == 2);         /* wrong count */
    CHECK(line_of("module over x\ndims: 1 1\narrow z: [[1]]\n") == 3);
    CHECK(line_of("module over x\ndims: 1 1\narrow a: [[1,1]]\n") == 3); /* shape */
}
