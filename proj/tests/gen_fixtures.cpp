// Regenerates the shipped fixture files from the in-code builders:
//   modtens_gen_fixtures <fixtures-dir>
// Output is canonical, so reruns are byte-stable.

#include <filesystem>
#include <iostream>

#include "fixtures.hpp"
#include "modtens/io.hpp"

using namespace modtens;
using namespace modtens::fixtures;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: modtens_gen_fixtures <fixtures-dir>\n";
        return 2;
    }
    namespace fs = std::filesystem;
    fs::path dir(argv[1]);
    fs::create_directories(dir / "negative");
    fs::create_directories(dir / "corrupted");

    BasePtr triv = make_triv();
    BasePtr svec = make_svec();
    BasePtr trivz = make_trivz();
    write_file((dir / "triv.base").string(), save_base(*triv));
    write_file((dir / "svec.base").string(), save_base(*svec));
    write_file((dir / "trivz.base").string(), save_base(*trivz));

    BasePtr vecz3 = make_vecz3();
    write_file((dir / "vecz3.base").string(), save_base(*vecz3));

    VMonCat vhat = self_enrichment(svec);
    write_file((dir / "vhat_svec.vcat").string(), save_vmoncat(vhat));
    write_file((dir / "vhat_triv.vcat").string(), save_vmoncat(self_enrichment(triv)));
    write_file((dir / "vhat_vecz3.vcat").string(), save_vmoncat(self_enrichment(vecz3)));

    VMonCatPtr one = make_one(trivz);
    VMonCatPtr pt2 = make_pt2(trivz);
    write_file((dir / "one.vcat").string(), save_vmoncat(*one));
    write_file((dir / "pt2.vcat").string(), save_vmoncat(*pt2));

    VMonFunctorPtr incl = make_inclusion(one, pt2);
    write_file((dir / "incl.fun").string(), save_functor(*incl));
    auto id_pt2 = std::make_shared<VMonFunctor>(identity_functor(pt2));
    id_pt2->name = "idpt2";
    write_file((dir / "idpt2.fun").string(), save_functor(*id_pt2));
    VMonFunctorPtr collapse = make_collapse(pt2);
    write_file((dir / "collapse.fun").string(), save_functor(*collapse));

    auto sign = make_sign(id_pt2);
    write_file((dir / "sign.nat").string(), save_transform(*sign));

    GradingArtifact z2_pt2{GradingAssignment{"pt2_z2", make_z2(), {0, 1, 0}}, "pt2"};
    write_file((dir / "pt2_z2.grading").string(), save_grading(z2_pt2, "pt2_z2"));

    // Negative artifacts, kept out of the green fixture directory.
    auto broken = std::make_shared<PresentedBase>(*svec);
    broken->name = "svec_broken";
    broken->comp[0][0][0].at(0, 0, 0) = Rational(0);
    write_file((dir / "negative" / "svec_broken.base").string(), save_base(*broken));

    GradingArtifact misgraded{GradingAssignment{"pt2_misgraded", make_z2(), {0, 0, 0}}, "pt2"};
    write_file((dir / "negative" / "pt2_misgraded.grading").string(),
               save_grading(misgraded, "pt2_misgraded"));

    // Corrupted roundtrip directory: pt2 with a scaled identity element.
    write_file((dir / "corrupted" / "trivz.base").string(), save_base(*trivz));
    auto bad = std::make_shared<VMonCat>(*pt2);
    bad->name = "pt2_bad";
    bad->j[1].coeffs[0] = Rational(2);
    write_file((dir / "corrupted" / "pt2_bad.vcat").string(), save_vmoncat(*bad));

    std::cout << "fixtures written to " << dir.string() << "\n";
    return 0;
}
