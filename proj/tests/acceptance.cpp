// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Everything is exact arithmetic; every comparison below is strict equality.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "modtens/cli.hpp"
#include "modtens/equivalence.hpp"
#include "modtens/io.hpp"

using namespace modtens;
using namespace modtens::fixtures;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, bool pass) {
    std::cout << "CRITERION " << number << (pass ? " PASS " : " FAIL ") << label << "\n";
    if (!pass) ++g_failures;
}

std::shared_ptr<const TensorAdjunction> adjoint_ptr(VMonCatPtr C) {
    AdjResult r = compute_adjoint(C);
    if (std::holds_alternative<NotWeaklyTensored>(r)) return nullptr;
    return std::make_shared<TensorAdjunction>(std::get<TensorAdjunction>(std::move(r)));
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    const std::string fixture_dir = MODTENS_FIXTURE_DIR;

    BasePtr svec = make_svec();
    BasePtr trivz = make_trivz();
    auto vhat = std::make_shared<VMonCat>(self_enrichment(svec));
    VMonCatPtr pt2 = make_pt2(trivz);
    VMonCatPtr one = make_one(trivz);

    // 1. SVEC passes validate_base exactly (hexagons, naturality, zig-zags).
    {
        ValidationReport rep = validate_base(*svec);
        bool pass = rep.ok() && rep.failure_count() == 0;
        bool covers = !rep.checks().empty();
        for (const char* id : {"base.braid.hexagon1", "base.braid.hexagon2", "base.braid.natural",
                               "base.dual.zigzag_left", "base.dual.zigzag_right"}) {
            bool found = false;
            for (const auto& c : rep.checks()) found = found || c.id == id;
            covers = covers && found;
        }
        criterion(1, "svec passes validate_base with 0 failures", pass && covers);
    }

    // 2. Self-enrichment validates; the braided interchange genuinely uses
    //    the sign: the beta -> +1 mutation must fail.
    {
        bool pass = validate_vmoncat(*vhat).ok();
        VMonCat mutated = with_base(*vhat, make_svec(Rational(1)));
        ValidationReport mrep = validate_vmoncat(mutated);
        pass = pass && !mrep.ok() && mrep.failed("vmoncat.interchange");
        criterion(2, "self_enrichment(svec) validates; +1 braiding mutation fails interchange", pass);
    }

    // 3. Adjoint computation on both fixtures.
    auto adj_vhat = adjoint_ptr(vhat);
    auto adj_pt2 = adjoint_ptr(pt2);
    auto adj_one = adjoint_ptr(one);
    {
        bool pass = adj_vhat && adj_pt2 && adj_one;
        if (pass) {
            pass = adj_vhat->F_obj == std::vector<int>{0, 1} && adj_vhat->tensored_flag;
            pass = pass && adj_pt2->F_obj[trivz->unit] == pt2->unit;
        }
        criterion(3, "compute_adjoint: F identity on objects for vhat_svec (tensored), F(unit)=1 on pt2",
                  pass);
    }

    // 4. Mate calculus: exhaustive double-mate on every basis morphism of
    //    every hom space, plus 100 seeded random trials per lemma.
    {
        bool pass = adj_vhat && adj_pt2;
        if (pass) {
            for (auto adj : {adj_vhat, adj_pt2}) {
                const VMonCat& C = *adj->cat;
                const PresentedBase& B = *C.base;
                for (int a = 0; a < C.n && pass; ++a)
                    for (int b = 0; b < C.n && pass; ++b)
                        for (int v = 0; v < B.n && pass; ++v)
                            for (int k = 0; k < B.dim(v, C.hom[a][b]) && pass; ++k) {
                                Mor f = basis_mor(B, v, C.hom[a][b], k);
                                pass = mate_bwd(*adj, a, v, mate_fwd(*adj, a, b, f)) == f;
                            }
                pass = pass && verify_mate_lemmas(*adj, 2026, 100).ok();
            }
        }
        criterion(4, "mate_bwd . mate_fwd = id exhaustively; 100 random trials per mate lemma", pass);
    }

    // 5. Center lift: e = beta on vhat_svec, centrality for every basis
    //    morphism, validate_modtens_0cell(P0) on all fixtures.
    {
        bool pass = adj_vhat && adj_pt2 && adj_one;
        if (pass) {
            const PresentedBase& B = *svec;
            for (int a = 0; a < vhat->n && pass; ++a)
                for (int v = 0; v < B.n && pass; ++v) {
                    Mor expected = mate_ih(B, B.ten(a, v), B.unit, braid(B, a, v));
                    pass = half_braiding(*adj_vhat, a, v).coeffs == expected.coeffs;
                }
            for (int u = 0; u < B.n && pass; ++u)
                for (int v = 0; v < B.n && pass; ++v)
                    for (int k = 0; k < B.dim(u, v) && pass; ++k)
                        pass = check_centrality(*adj_vhat, basis_mor(B, u, v, k)).ok();
            for (auto adj : {adj_vhat, adj_pt2, adj_one})
                pass = pass && validate_modtens_0cell(*P0(adj)).ok();
        }
        criterion(5, "half-braidings equal beta on vhat_svec; centrality; P0 outputs validate", pass);
    }

    // 6. 1-cell pipeline: P1 of the inclusion and identity pass the 1-cell
    //    validator including both displayed coherences.
    {
        bool pass = adj_pt2 && adj_one;
        if (pass) {
            ModTensPtr Mone = P0(adj_one), Mpt2 = P0(adj_pt2);
            ModTensCell1 ci = P1(*make_inclusion(one, pt2), Mone, Mpt2);
            ModTensCell1 cid = P1(identity_functor(pt2), Mpt2, Mpt2);
            for (const ModTensCell1* c : {&ci, &cid}) {
                ValidationReport rep = validate_modtens_1cell(*c);
                pass = pass && rep.ok();
                bool hb = false, ac = false;
                for (const auto& ch : rep.checks()) {
                    hb = hb || ch.id == "mt1.halfbraid_coherence";
                    ac = ac || ch.id == "mt1.action_coherence";
                }
                pass = pass && hb && ac;
            }
        }
        criterion(6, "P1(inclusion) and P1(identity) pass both displayed 1-cell coherences", pass);
    }

    // 7. Round trip with strict data equality on all 1- and 2-cell fixtures.
    {
        EquivalenceFixtures fx;
        fx.cats = {one, pt2, vhat};
        auto id_pt2 = std::make_shared<VMonFunctor>(identity_functor(pt2));
        fx.functors = {make_inclusion(one, pt2), make_collapse(pt2), id_pt2};
        fx.transforms = {make_sign(id_pt2)};
        criterion(7, "Q1P1 = id, P1Q1 = id, Q2P2 = id, P2Q2 = id on all fixtures",
                  check_roundtrip(fx).ok());
    }

    // 8. 2-functoriality on the one -> pt2 -> pt2 chain (3 0-cells, with a
    //    3-object middle fixture), strict equality.
    {
        EquivalenceFixtures fx;
        fx.cats = {one, pt2};
        auto id_pt2 = std::make_shared<VMonFunctor>(identity_functor(pt2));
        fx.functors = {make_inclusion(one, pt2), make_collapse(pt2), id_pt2};
        fx.transforms = {make_sign(id_pt2)};
        ValidationReport rep = check_2functoriality(fx);
        bool pass = rep.ok();
        // require that composable chains were actually exercised
        for (const auto& c : rep.checks())
            if (c.id == "twofun.comp1" || c.id == "twofun.vcomp2" || c.id == "twofun.hcomp2")
                pass = pass && c.note != "pairs=0";
        criterion(8, "P preserves units, 1-cell composition, vertical/horizontal 2-cell composition",
                  pass);
    }

    // 9. Gradings: pt2/z2 faithful on both sides; the mis-graded variant
    //    fails faithfulness with a located witness.
    {
        GradingAssignment good{"pt2_z2", make_z2(), {0, 1, 0}};
        GradingAssignment bad{"pt2_misgraded", make_z2(), {0, 0, 0}};
        bool pass = validate_graded_vmoncat(*pt2, good).ok();
        pass = pass && adj_pt2 && validate_graded_modtens(*P0(adj_pt2), good).ok();
        ValidationReport rep = validate_graded_vmoncat(*pt2, bad);
        pass = pass && !rep.ok() && rep.failed("graded.vmoncat.faithful");
        bool witnessed = false;
        for (const auto& c : rep.checks())
            if (c.id == "graded.vmoncat.faithful")
                witnessed = !c.witnesses.empty() && c.witnesses[0] == "g=1";
        criterion(9, "pt2/z2 grading faithful on both sides; mis-graded pt2 fails at grade g",
                  pass && witnessed);
    }

    // 10. Strength propagation through P1 and Q1.
    {
        bool pass = adj_pt2 && adj_one;
        if (pass) {
            ModTensPtr Mone = P0(adj_one), Mpt2 = P0(adj_pt2);
            VMonFunctorPtr incl = make_inclusion(one, pt2);
            pass = incl->strong;
            ModTensCell1 c = P1(*incl, Mone, Mpt2);
            pass = pass && c.strong && validate_modtens_1cell(c).ok();
            VMonFunctor q = Q1(c);
            pass = pass && q.strong && validate_vmon_functor(q).ok();
        }
        criterion(10, "strong 1-cells stay strong through P1 and Q1, invertibility checked", pass);
    }

    // 11. CLI determinism and the corrupted-fixture exit path.
    {
        std::ostringstream out1, err1, out2, err2, out3, err3;
        int c1 = run_cli({"roundtrip", fixture_dir, "--seed", "11", "--trials", "3"}, out1, err1);
        int c2 = run_cli({"roundtrip", fixture_dir, "--seed", "11", "--trials", "3"}, out2, err2);
        bool pass = c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty();
        int c3 = run_cli({"roundtrip", fixture_dir + "/corrupted", "--seed", "11", "--trials", "3"},
                         out3, err3);
        pass = pass && c3 != 0 && out3.str().find("FAIL") != std::string::npos &&
               out3.str().find("pt2_bad:vcat.unit_left") != std::string::npos;
        criterion(11, "cmd_roundtrip byte-identical across runs; corrupted dir exits nonzero", pass);
    }

    auto t1 = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << "ACCEPTANCE " << (g_failures == 0 ? "PASS" : "FAIL") << " (11 criteria, " << ms
              << " ms)\n";
    return g_failures == 0 ? 0 : 1;
}
