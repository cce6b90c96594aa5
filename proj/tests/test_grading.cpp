#include <doctest.h>

#include "fixtures.hpp"
#include "modtens/equivalence.hpp"
#include "modtens/io.hpp"

using namespace modtens;
using namespace modtens::fixtures;

namespace {

std::shared_ptr<const TensorAdjunction> adjoint_ptr(VMonCatPtr C) {
    AdjResult r = compute_adjoint(C);
    REQUIRE(std::holds_alternative<TensorAdjunction>(r));
    return std::make_shared<TensorAdjunction>(std::get<TensorAdjunction>(std::move(r)));
}

} // namespace

TEST_CASE("validate_group: z2, z3, and a broken table") {
    CHECK(validate_group(make_z2()).ok());
    CHECK(validate_group(make_z3()).ok());
    FiniteGroup bad = make_z3();
    bad.table[1][2] = 1; // now (1*1)*2 != 1*(1*2)
    ValidationReport rep = validate_group(bad);
    CHECK(!rep.ok());
    CHECK(rep.failed("grp.assoc"));
}

TEST_CASE("pt2 with its z2 grading is faithful") {
    BasePtr Z = make_trivz();
    VMonCatPtr pt2 = make_pt2(Z);
    GradingAssignment g{"pt2_z2", make_z2(), {0, 1, 0}}; // the null object's label is ignored
    CHECK(validate_graded_vmoncat(*pt2, g).ok());
}

TEST_CASE("mis-graded pt2 (deg x = e) fails faithfulness at grade g") {
    BasePtr Z = make_trivz();
    VMonCatPtr pt2 = make_pt2(Z);
    GradingAssignment g{"pt2_misgraded", make_z2(), {0, 0, 0}};
    ValidationReport rep = validate_graded_vmoncat(*pt2, g);
    CHECK(!rep.ok());
    CHECK(rep.failed("graded.vmoncat.faithful"));
    for (const auto& c : rep.checks())
        if (c.id == "graded.vmoncat.faithful") CHECK(c.witnesses == std::vector<std::string>{"g=1"});
}

TEST_CASE("one-object category graded by the trivial group passes") {
    VMonCatPtr one = make_one(make_trivz());
    FiniteGroup triv;
    triv.name = "1";
    triv.order = 1;
    triv.identity = 0;
    triv.table = {{0}};
    GradingAssignment g{"one_triv", triv, {0, 0}};
    CHECK(validate_graded_vmoncat(*one, g).ok());
}

TEST_CASE("P0(pt2) passes validate_graded_modtens with the same assignment") {
    BasePtr Z = make_trivz();
    VMonCatPtr pt2 = make_pt2(Z);
    ModTensPtr M = P0(adjoint_ptr(pt2));
    GradingAssignment g{"pt2_z2", make_z2(), {0, 1, 0}};
    CHECK(validate_graded_modtens(*M, g).ok());
    // and the reverse direction: the modtens grading restricts back
    CHECK(validate_graded_vmoncat(*pt2, g).ok());
}

TEST_CASE("self_enrichment(svec) with grade(v) = v is not a graded module category") {
    auto vhat = std::make_shared<VMonCat>(self_enrichment(make_svec()));
    ModTensPtr M = P0(adjoint_ptr(vhat));
    GradingAssignment g{"svec_by_parity", make_z2(), {0, 1}};
    ValidationReport rep = validate_graded_modtens(*M, g);
    CHECK(!rep.ok());
    CHECK(rep.failed("graded.modtens.F_in_e")); // F(odd) lands in grade g
}

TEST_CASE("trivial group gradings always pass the modtens check") {
    BasePtr Z = make_trivz();
    ModTensPtr M = P0(adjoint_ptr(make_pt2(Z)));
    FiniteGroup triv;
    triv.name = "1";
    triv.order = 1;
    triv.identity = 0;
    triv.table = {{0}};
    GradingAssignment g{"pt2_triv", triv, {0, 0, 0}};
    CHECK(validate_graded_modtens(*M, g).ok());
}

TEST_CASE("graded 1-cells: the inclusion preserves degrees; composites stay graded") {
    BasePtr Z = make_trivz();
    VMonCatPtr pt2 = make_pt2(Z), one = make_one(Z);
    ModTensPtr Mone = P0(adjoint_ptr(one)), Mpt2 = P0(adjoint_ptr(pt2));
    ModTensCell1 c = P1(*make_inclusion(one, pt2), Mone, Mpt2);
    FiniteGroup triv;
    triv.name = "1";
    triv.order = 1;
    triv.identity = 0;
    triv.table = {{0}};
    GradingAssignment gone{"one_triv", triv, {0, 0}};
    GradingAssignment gpt2{"pt2_z2_as_target", make_z2(), {0, 1, 0}};
    // source grades sit inside the identity grade of the target group
    GradingAssignment gone_z2{"one_z2", make_z2(), {0, 0}};
    CHECK(validate_graded_cell1(c, gone_z2, gpt2).ok());
    ModTensCell1 cc = compose_cells1(c, identity_cell1(Mpt2));
    CHECK(validate_graded_cell1(cc, gone_z2, gpt2).ok());
    (void)gone;
}
