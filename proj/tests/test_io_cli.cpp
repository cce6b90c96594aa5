#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "fixtures.hpp"
#include "modtens/cli.hpp"
#include "modtens/io.hpp"

using namespace modtens;
using namespace modtens::fixtures;

namespace {

namespace fs = std::filesystem;

const std::string kFixtures = MODTENS_FIXTURE_DIR;

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("modtens_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

} // namespace

TEST_CASE("shipped fixture files agree with the in-code builders") {
    Workspace ws;
    ws.load_files({fx("triv.base"), fx("svec.base"), fx("trivz.base"), fx("one.vcat"),
                   fx("pt2.vcat"), fx("vhat_svec.vcat"), fx("incl.fun"), fx("idpt2.fun"),
                   fx("collapse.fun"), fx("sign.nat"), fx("pt2_z2.grading")});
    CHECK(save_base(*ws.bases.at("svec")) == save_base(*make_svec()));
    CHECK(save_base(*ws.bases.at("trivz")) == save_base(*make_trivz()));
    CHECK(save_vmoncat(*ws.vcats.at("vhat_svec")) == save_vmoncat(self_enrichment(make_svec())));
    BasePtr Z = ws.bases.at("trivz");
    CHECK(save_vmoncat(*ws.vcats.at("pt2")) == save_vmoncat(*make_pt2(Z)));
    CHECK(save_functor(*ws.functors.at("incl")) ==
          save_functor(*make_inclusion(make_one(Z), make_pt2(Z))));
    CHECK(ws.transforms.at("sign")->comp[1].coeffs == Vec{Rational(-1)});
    CHECK(ws.gradings.at("pt2_z2").category == "pt2");
}

TEST_CASE("serialization round-trips bit-exactly (canonical idempotence)") {
    for (const char* name : {"svec.base", "trivz.base", "triv.base"}) {
        Workspace ws;
        ws.load_files({fx(name)});
        std::string once = save_base(*ws.bases.begin()->second);
        TempDir tmp;
        write_file(tmp.file("x.base"), once);
        Workspace ws2;
        ws2.load_files({tmp.file("x.base")});
        CHECK(save_base(*ws2.bases.begin()->second) == once);
    }
    {
        Workspace ws;
        ws.load_files({fx("trivz.base"), fx("pt2.vcat")});
        std::string once = save_vmoncat(*ws.vcats.at("pt2"));
        TempDir tmp;
        write_file(tmp.file("x.vcat"), once);
        Workspace ws2;
        ws2.load_files({fx("trivz.base"), tmp.file("x.vcat")});
        CHECK(save_vmoncat(*ws2.vcats.at("pt2")) == once);
    }
}

TEST_CASE("modtens artifacts survive a save/load cycle with provenance intact") {
    Workspace ws;
    ws.load_files({fx("trivz.base"), fx("pt2.vcat")});
    AdjResult r = compute_adjoint(ws.vcats.at("pt2"));
    REQUIRE(std::holds_alternative<TensorAdjunction>(r));
    auto adj = std::make_shared<TensorAdjunction>(std::get<TensorAdjunction>(std::move(r)));
    ModTensPtr M = P0(adj);
    std::string text = save_modtens(*M);
    TempDir tmp;
    write_file(tmp.file("p0_pt2.modtens"), text);
    Workspace ws2;
    ws2.load_files({fx("trivz.base"), fx("pt2.vcat"), tmp.file("p0_pt2.modtens")});
    ModTensPtr back = ws2.modtens.at("p0_pt2");
    CHECK(back->provenance == ModTensCat::Provenance::computed); // re-attached via origin
    CHECK(save_modtens(*back) == text);
    CHECK(validate_modtens_0cell(*back).ok());
}

TEST_CASE("cli validate: green fixtures exit 0") {
    std::string out;
    CHECK(run({"validate", fx("svec.base")}, &out) == 0);
    CHECK(out.find("RESULT PASS") != std::string::npos);
    CHECK(run({"validate", "--level", "vmoncat", fx("svec.base"), fx("vhat_svec.vcat")}) == 0);
    CHECK(run({"validate", "--level", "graded", fx("trivz.base"), fx("pt2.vcat"),
               fx("pt2_z2.grading")}) == 0);
}

TEST_CASE("cli validate: broken base exits 1 and names the axiom") {
    std::string out;
    CHECK(run({"validate", fx("negative/svec_broken.base")}, &out) == 1);
    CHECK(out.find("CHECK svec_broken:base.comp.unit FAIL") != std::string::npos);
    CHECK(out.find("witness=") != std::string::npos);
}

TEST_CASE("cli validate: misgraded pt2 exits 1 with a located witness") {
    std::string out;
    CHECK(run({"validate", "--level", "graded", fx("trivz.base"), fx("pt2.vcat"),
               fx("negative/pt2_misgraded.grading")},
              &out) == 1);
    CHECK(out.find("graded.vmoncat.faithful FAIL witness=g=1") != std::string::npos);
}

TEST_CASE("cli apply: adjoint report and p0 artifact") {
    TempDir tmp;
    std::string out;
    CHECK(run({"apply", "--op", "adjoint", fx("svec.base"), fx("vhat_svec.vcat"), "--out",
               tmp.file("adj.json")},
              &out) == 0);
    CHECK(out.find("\"tensored\": true") != std::string::npos);
    CHECK(run({"apply", "--op", "p0", fx("trivz.base"), fx("pt2.vcat"), "--out",
               tmp.file("p0_pt2.modtens")}) == 0);
    std::string saved = read_file(tmp.file("p0_pt2.modtens"));
    CHECK(saved.find("\"computed\"") != std::string::npos);
}

TEST_CASE("cli apply: p1 then q1 reproduces the original functor file byte for byte") {
    TempDir tmp;
    CHECK(run({"apply", "--op", "p1", fx("trivz.base"), fx("one.vcat"), fx("pt2.vcat"),
               fx("incl.fun"), "--out", tmp.file("incl.cell1")}) == 0);
    CHECK(run({"apply", "--op", "q1", fx("trivz.base"), fx("one.vcat"), fx("pt2.vcat"),
               tmp.file("incl.cell1"), "--out", tmp.file("incl_back.fun")}) == 0);
    CHECK(read_file(tmp.file("incl_back.fun")) == read_file(fx("incl.fun")));
}

TEST_CASE("cli apply: p2 then q2 reproduces the sign transformation file") {
    TempDir tmp;
    CHECK(run({"apply", "--op", "p2", fx("trivz.base"), fx("pt2.vcat"), fx("idpt2.fun"),
               fx("sign.nat"), "--out", tmp.file("sign.cell2")}) == 0);
    CHECK(run({"apply", "--op", "q2", fx("trivz.base"), fx("pt2.vcat"), fx("idpt2.fun"),
               tmp.file("sign.cell2"), "--out", tmp.file("sign_back.nat")}) == 0);
    CHECK(read_file(tmp.file("sign_back.nat")) == read_file(fx("sign.nat")));
}

TEST_CASE("cli roundtrip: deterministic byte-identical reports, seed recorded") {
    std::string out1, out2;
    CHECK(run({"roundtrip", kFixtures, "--seed", "7", "--trials", "5"}, &out1) == 0);
    CHECK(run({"roundtrip", kFixtures, "--seed", "7", "--trials", "5"}, &out2) == 0);
    CHECK(out1 == out2);
    CHECK(out1.find("SEED 7 TRIALS 5") == 0);
    CHECK(out1.find("RESULT PASS") != std::string::npos);
}

TEST_CASE("cli roundtrip: zero trials is vacuous but green") {
    std::string out;
    CHECK(run({"roundtrip", kFixtures, "--seed", "0", "--trials", "0"}, &out) == 0);
    CHECK(out.find("vacuous") != std::string::npos);
}

TEST_CASE("cli roundtrip: corrupted fixture dir exits nonzero naming the failing check") {
    std::string out;
    CHECK(run({"roundtrip", kFixtures + "/corrupted", "--seed", "0", "--trials", "1"}, &out) == 1);
    CHECK(out.find("pt2_bad:vcat.unit_left FAIL") != std::string::npos);
}

TEST_CASE("cli: json report format") {
    std::string out;
    CHECK(run({"validate", "--format", "json", fx("svec.base")}, &out) == 0);
    CHECK(out.find("\"pass\": true") != std::string::npos);
}
