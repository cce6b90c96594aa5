#include <doctest.h>

#include "fixtures.hpp"
#include "modtens/rng.hpp"

using namespace modtens;
using namespace modtens::fixtures;

namespace {

// Independent contraction oracle for composition: sums the raw structure
// constants directly, bypassing compose()'s Bilinear::apply path.
Vec oracle_compose(const PresentedBase& B, const Mor& f, const Mor& g) {
    const Bilinear& sc = B.comp[f.src][f.dst][g.dst];
    Vec out(sc.dout);
    for (int r = 0; r < sc.dout; ++r) {
        Rational acc;
        for (int p = 0; p < sc.dl; ++p)
            for (int q = 0; q < sc.dr; ++q)
                acc += f.coeffs[p] * g.coeffs[q] * sc.c[(static_cast<std::size_t>(p) * sc.dr + q) * sc.dout + r];
        out[r] = acc;
    }
    return out;
}

Vec oracle_tensor(const PresentedBase& B, const Mor& f, const Mor& g) {
    const Bilinear& sc = B.tens[f.src][f.dst][g.src][g.dst];
    Vec out(sc.dout);
    for (int r = 0; r < sc.dout; ++r) {
        Rational acc;
        for (int p = 0; p < sc.dl; ++p)
            for (int q = 0; q < sc.dr; ++q)
                acc += f.coeffs[p] * g.coeffs[q] * sc.c[(static_cast<std::size_t>(p) * sc.dr + q) * sc.dout + r];
        out[r] = acc;
    }
    return out;
}

} // namespace

TEST_CASE("svec: compose_v identity and bilinearity") {
    BasePtr B = make_svec();
    Mor f{0, 0, {Rational(7, 3)}};
    CHECK(compose_v(*B, identity_mor(*B, 0), f) == f);
    Mor two{0, 0, {Rational(2)}}, three{0, 0, {Rational(3)}};
    CHECK(compose_v(*B, two, three).coeffs == Vec{Rational(6)});
}

TEST_CASE("svec: associativity witness against contraction oracle") {
    BasePtr B = make_svec();
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        Mor f = rng.mor(*B, 1, 1), g = rng.mor(*B, 1, 1), h = rng.mor(*B, 1, 1);
        Mor left = compose_v(*B, compose_v(*B, f, g), h);
        Mor right = compose_v(*B, f, compose_v(*B, g, h));
        CHECK(left == right);
        CHECK(left.coeffs == oracle_compose(*B, Mor{1, 1, oracle_compose(*B, f, g)}, h));
    }
}

TEST_CASE("svec: tensor examples") {
    BasePtr B = make_svec();
    CHECK(tensor_v(*B, identity_mor(*B, 0), identity_mor(*B, 1)) == identity_mor(*B, 1));
    Mor two_odd{1, 1, {Rational(2)}};
    Mor res = tensor_v(*B, two_odd, identity_mor(*B, 1));
    CHECK(res.src == 0); // 1 (x) 1 = 0 in Z/2
    CHECK(res.coeffs == Vec{Rational(2)});
    // interchange witness on random scalars, against the oracle
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Mor f = rng.mor(*B, 0, 0), fp = rng.mor(*B, 0, 0);
        Mor g = rng.mor(*B, 1, 1), gp = rng.mor(*B, 1, 1);
        Mor lhs = compose_v(*B, tensor_v(*B, f, g), tensor_v(*B, fp, gp));
        Mor rhs = tensor_v(*B, compose_v(*B, f, fp), compose_v(*B, g, gp));
        CHECK(lhs == rhs);
        CHECK(rhs.coeffs == oracle_tensor(*B, Mor{0, 0, oracle_compose(*B, f, fp)},
                                          Mor{1, 1, oracle_compose(*B, g, gp)}));
    }
}

TEST_CASE("braid examples") {
    BasePtr svec = make_svec();
    CHECK(braid(*svec, 0, 0) == identity_mor(*svec, 0));
    CHECK(braid(*svec, 1, 1).coeffs == Vec{Rational(-1)});
    BasePtr triv = make_triv();
    CHECK(braid(*triv, 0, 0) == identity_mor(*triv, 0));
}

TEST_CASE("validate_base: svec passes exhaustively") {
    ValidationReport rep = validate_base(*make_svec());
    CHECK(rep.ok());
    CHECK(rep.failure_count() == 0);
}

TEST_CASE("validate_base: symmetric variant (beta = +1) also passes") {
    CHECK(validate_base(*make_svec(Rational(1))).ok());
}

TEST_CASE("validate_base: beta = 2 id breaks the hexagons, not invertibility") {
    BasePtr B = make_svec(Rational(2));
    ValidationReport rep = validate_base(*B);
    CHECK(!rep.ok());
    CHECK(!rep.failed("base.braid.invertible")); // 2 is invertible over Q
    CHECK(rep.failed("base.braid.hexagon1"));
}

TEST_CASE("validate_base: corrupted compose_sc (0,0,0) fails the identity axiom") {
    auto B = std::make_shared<PresentedBase>(*make_svec());
    B->comp[0][0][0].at(0, 0, 0) = Rational(0);
    ValidationReport rep = validate_base(*B);
    CHECK(!rep.ok());
    CHECK(rep.failed("base.comp.unit"));
}

TEST_CASE("validate_base: structural malformation reported distinctly") {
    auto B = std::make_shared<PresentedBase>(*make_svec());
    B->tt[0][1] = 9; // out of range
    ValidationReport rep = validate_base(*B);
    CHECK(!rep.ok());
    CHECK(rep.failed("base.struct"));
    // axiom checks are not attempted on malformed input
    for (const auto& c : rep.checks())
        if (c.id != "base.struct") CHECK(c.passed());
}

TEST_CASE("validate_base: triv and trivz pass (including the zero object)") {
    CHECK(validate_base(*make_triv()).ok());
    CHECK(validate_base(*make_trivz()).ok());
}

TEST_CASE("internal_hom examples") {
    BasePtr B = make_svec();
    CHECK(internal_hom(*B, 0, 1) == 1);
    CHECK(internal_hom(*B, 1, 1) == 0); // odd (x) odd
    for (int v = 0; v < 2; ++v) CHECK(internal_hom(*B, B->unit, v) == v);
    BasePtr T = make_triv();
    CHECK(internal_hom(*T, 0, 0) == 0);
}

TEST_CASE("internal-hom mates are mutually inverse on svec") {
    BasePtr B = make_svec();
    Rng rng(3);
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < 2; ++w)
            for (int v = 0; v < 2; ++v) {
                if (B->dim(B->ten(u, w), v) == 0) continue;
                Mor f = rng.mor(*B, B->ten(u, w), v);
                Mor m = mate_ih(*B, u, w, f);
                CHECK(unmate_ih(*B, u, v, m) == f);
            }
}

TEST_CASE("invert: braidings and zero-dimensional homs") {
    BasePtr B = make_svec();
    auto inv = invert(*B, braid(*B, 1, 1));
    REQUIRE(inv.has_value());
    CHECK(inv->coeffs == Vec{Rational(-1)});
    BasePtr Z = make_trivz();
    CHECK(is_invertible_mor(*Z, zero_mor(*Z, 1, 1))); // empty hom: vacuously invertible
    Mor not_inv{0, 0, {Rational(0)}};
    CHECK(!is_invertible_mor(*B, not_inv));
}
