#include "modtens/enriched.hpp"

#include <sstream>
#include <stdexcept>

namespace modtens {

namespace {

std::string wit(std::initializer_list<std::pair<const char*, int>> parts) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : parts) {
        if (!first) os << ",";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

Mor id_of(const PresentedBase& B, int obj) { return identity_mor(B, obj); }

bool vcat_struct(const VCat& C, ValidationReport& rep) {
    bool ok = true;
    auto bad = [&](const std::string& w) {
        rep.fail("vcat.struct", "well-formed enriched data", w);
        ok = false;
    };
    const PresentedBase& B = *C.base;
    if (C.n <= 0) { bad("no objects"); return false; }
    if (static_cast<int>(C.hom.size()) != C.n || static_cast<int>(C.j.size()) != C.n ||
        static_cast<int>(C.comp.size()) != C.n) { bad("table sizes"); return false; }
    for (int a = 0; a < C.n; ++a) {
        if (static_cast<int>(C.hom[a].size()) != C.n) { bad("hom row size"); return false; }
        for (int b = 0; b < C.n; ++b)
            if (C.hom[a][b] < 0 || C.hom[a][b] >= B.n) bad(wit({{"a", a}, {"b", b}}) + ":hom object range");
    }
    if (!ok) return false;
    for (int a = 0; a < C.n; ++a) {
        const Mor& j = C.j[a];
        if (j.src != B.unit || j.dst != C.hom[a][a] ||
            static_cast<int>(j.coeffs.size()) != B.dim(j.src, j.dst))
            bad(wit({{"a", a}}) + ":j typing");
    }
    for (int a = 0; a < C.n; ++a) {
        if (static_cast<int>(C.comp[a].size()) != C.n) { bad("comp table"); return false; }
        for (int b = 0; b < C.n; ++b) {
            if (static_cast<int>(C.comp[a][b].size()) != C.n) { bad("comp table"); return false; }
            for (int c = 0; c < C.n; ++c) {
                const Mor& m = C.comp[a][b][c];
                if (m.src != B.ten(C.hom[a][b], C.hom[b][c]) || m.dst != C.hom[a][c] ||
                    static_cast<int>(m.coeffs.size()) != B.dim(m.src, m.dst))
                    bad(wit({{"a", a}, {"b", b}, {"c", c}}) + ":comp typing");
            }
        }
    }
    if (ok) rep.add_pass("vcat.struct", "well-formed enriched data");
    return ok;
}

} // namespace

ValidationReport validate_vcat(const VCat& C) {
    ValidationReport rep;
    if (!vcat_struct(C, rep)) return rep;
    const PresentedBase& B = *C.base;

    bool ul = true, ur = true;
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b) {
            Mor hom_id = id_of(B, C.hom[a][b]);
            Mor left = compose(B, tensor(B, C.j[a], hom_id), C.comp[a][a][b]);
            if (!(left == hom_id)) {
                rep.fail("vcat.unit_left", "(j_a (x) 1);comp = 1", wit({{"a", a}, {"b", b}}));
                ul = false;
            }
            Mor right = compose(B, tensor(B, hom_id, C.j[b]), C.comp[a][b][b]);
            if (!(right == hom_id)) {
                rep.fail("vcat.unit_right", "(1 (x) j_b);comp = 1", wit({{"a", a}, {"b", b}}));
                ur = false;
            }
        }
    if (ul) rep.add_pass("vcat.unit_left", "(j_a (x) 1);comp = 1");
    if (ur) rep.add_pass("vcat.unit_right", "(1 (x) j_b);comp = 1");

    bool as = true;
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int c = 0; c < C.n; ++c)
                for (int d = 0; d < C.n; ++d) {
                    Mor lhs = compose(B, tensor(B, C.comp[a][b][c], id_of(B, C.hom[c][d])), C.comp[a][c][d]);
                    Mor rhs = compose(B, tensor(B, id_of(B, C.hom[a][b]), C.comp[b][c][d]), C.comp[a][b][d]);
                    if (!(lhs == rhs)) {
                        rep.fail("vcat.assoc", "(comp (x) 1);comp = (1 (x) comp);comp",
                                 wit({{"a", a}, {"b", b}, {"c", c}, {"d", d}}));
                        as = false;
                    }
                }
    if (as) rep.add_pass("vcat.assoc", "(comp (x) 1);comp = (1 (x) comp);comp");
    return rep;
}

ValidationReport validate_vmoncat(const VMonCat& C) {
    ValidationReport rep = validate_vcat(C);
    if (rep.failed("vcat.struct")) return rep;
    const PresentedBase& B = *C.base;

    // Monoidal structure typing.
    bool ok = C.unit >= 0 && C.unit < C.n && static_cast<int>(C.tt.size()) == C.n &&
              static_cast<int>(C.tens.size()) == C.n;
    for (int a = 0; ok && a < C.n; ++a) {
        ok = static_cast<int>(C.tt[a].size()) == C.n && static_cast<int>(C.tens[a].size()) == C.n;
        for (int b = 0; ok && b < C.n; ++b) {
            if (C.tt[a][b] < 0 || C.tt[a][b] >= C.n) { ok = false; break; }
            ok = static_cast<int>(C.tens[a][b].size()) == C.n;
            for (int c = 0; ok && c < C.n; ++c) {
                ok = static_cast<int>(C.tens[a][b][c].size()) == C.n;
                for (int d = 0; ok && d < C.n; ++d) {
                    const Mor& t = C.tens[a][b][c][d];
                    if (t.src != B.ten(C.hom[a][c], C.hom[b][d]) ||
                        t.dst != C.hom[C.tt[a][b]][C.tt[c][d]] ||
                        static_cast<int>(t.coeffs.size()) != B.dim(t.src, t.dst))
                        ok = false;
                }
            }
        }
    }
    if (!ok) {
        rep.fail("vmoncat.struct", "well-formed monoidal data", "typing");
        return rep;
    }
    rep.add_pass("vmoncat.struct", "well-formed monoidal data");

    {
        bool all = true;
        for (int a = 0; a < C.n; ++a)
            if (C.ten(C.unit, a) != a || C.ten(a, C.unit) != a) {
                rep.fail("vmoncat.table.unit", "1a = a = a1", wit({{"a", a}}));
                all = false;
            }
        if (all) rep.add_pass("vmoncat.table.unit", "1a = a = a1");
    }
    {
        bool all = true;
        for (int a = 0; a < C.n; ++a)
            for (int b = 0; b < C.n; ++b)
                for (int c = 0; c < C.n; ++c)
                    if (C.ten(C.ten(a, b), c) != C.ten(a, C.ten(b, c))) {
                        rep.fail("vmoncat.table.assoc", "(ab)c = a(bc)", wit({{"a", a}, {"b", b}, {"c", c}}));
                        all = false;
                    }
        if (all) rep.add_pass("vmoncat.table.assoc", "(ab)c = a(bc)");
    }
    {
        bool all = true;
        for (int a = 0; a < C.n; ++a)
            for (int b = 0; b < C.n; ++b) {
                Mor hom_id = id_of(B, C.hom[a][b]);
                Mor left = compose(B, tensor(B, C.j[C.unit], hom_id), C.tens[C.unit][a][C.unit][b]);
                Mor right = compose(B, tensor(B, hom_id, C.j[C.unit]), C.tens[a][C.unit][b][C.unit]);
                if (!(left == hom_id) || !(right == hom_id)) {
                    rep.fail("vmoncat.tens.unit", "(j_1 (x) 1);tens = 1 = (1 (x) j_1);tens",
                             wit({{"a", a}, {"b", b}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("vmoncat.tens.unit", "(j_1 (x) 1);tens = 1 = (1 (x) j_1);tens");
    }
    {
        bool all = true;
        for (int a = 0; a < C.n; ++a)
            for (int b = 0; b < C.n; ++b)
                for (int c = 0; c < C.n; ++c)
                    for (int d = 0; d < C.n; ++d)
                        for (int e = 0; e < C.n; ++e)
                            for (int f = 0; f < C.n; ++f) {
                                Mor lhs = compose(B, tensor(B, C.tens[a][b][d][e], id_of(B, C.hom[c][f])),
                                                  C.tens[C.ten(a, b)][c][C.ten(d, e)][f]);
                                Mor rhs = compose(B, tensor(B, id_of(B, C.hom[a][d]), C.tens[b][c][e][f]),
                                                  C.tens[a][C.ten(b, c)][d][C.ten(e, f)]);
                                if (!(lhs == rhs)) {
                                    rep.fail("vmoncat.tens.assoc", "(tens (x) 1);tens = (1 (x) tens);tens",
                                             wit({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", f}}));
                                    all = false;
                                }
                            }
        if (all) rep.add_pass("vmoncat.tens.assoc", "(tens (x) 1);tens = (1 (x) tens);tens");
    }
    {
        // Braided interchange; the only axiom whose two sides differ by a
        // beta crossing (on the middle pair of hom objects).
        bool all = true;
        for (int a = 0; a < C.n; ++a)
            for (int b = 0; b < C.n; ++b)
                for (int c = 0; c < C.n; ++c)
                    for (int d = 0; d < C.n; ++d)
                        for (int e = 0; e < C.n; ++e)
                            for (int f = 0; f < C.n; ++f) {
                                Mor lhs = compose(B, tensor(B, C.tens[a][d][b][e], C.tens[b][e][c][f]),
                                                  C.comp[C.ten(a, d)][C.ten(b, e)][C.ten(c, f)]);
                                Mor swap = tensor_all(B, {id_of(B, C.hom[a][b]),
                                                          braid(B, C.hom[d][e], C.hom[b][c]),
                                                          id_of(B, C.hom[e][f])});
                                Mor rhs = compose(B, swap,
                                                  compose(B, tensor(B, C.comp[a][b][c], C.comp[d][e][f]),
                                                          C.tens[a][d][c][f]));
                                if (!(lhs == rhs)) {
                                    rep.fail("vmoncat.interchange",
                                             "(tens (x) tens);comp = (1 (x) beta (x) 1);(comp (x) comp);tens",
                                             wit({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", f}}));
                                    all = false;
                                }
                            }
        if (all) rep.add_pass("vmoncat.interchange",
                              "(tens (x) tens);comp = (1 (x) beta (x) 1);(comp (x) comp);tens");
    }
    return rep;
}

ValidationReport validate_vmon_functor(const VMonFunctor& F) {
    ValidationReport rep;
    const VMonCat& A = *F.src;
    const VMonCat& Bc = *F.dst;
    const PresentedBase& B = *A.base;
    if (A.base.get() != Bc.base.get()) {
        rep.fail("vfun.struct", "well-formed functor data", "source and target over different bases");
        return rep;
    }
    bool ok = static_cast<int>(F.obj.size()) == A.n &&
              static_cast<int>(F.comp_mor.size()) == A.n && static_cast<int>(F.lax.size()) == A.n;
    for (int a = 0; ok && a < A.n; ++a) {
        if (F.obj[a] < 0 || F.obj[a] >= Bc.n) { ok = false; break; }
        ok = static_cast<int>(F.comp_mor[a].size()) == A.n && static_cast<int>(F.lax[a].size()) == A.n;
    }
    for (int a = 0; ok && a < A.n; ++a)
        for (int b = 0; ok && b < A.n; ++b) {
            const Mor& m = F.comp_mor[a][b];
            if (m.src != A.hom[a][b] || m.dst != Bc.hom[F.obj[a]][F.obj[b]] ||
                static_cast<int>(m.coeffs.size()) != B.dim(m.src, m.dst)) ok = false;
            const Mor& l = F.lax[a][b];
            if (l.src != B.unit ||
                l.dst != Bc.hom[Bc.ten(F.obj[a], F.obj[b])][F.obj[A.ten(a, b)]] ||
                static_cast<int>(l.coeffs.size()) != B.dim(l.src, l.dst)) ok = false;
        }
    if (!ok) {
        rep.fail("vfun.struct", "well-formed functor data", "typing");
        return rep;
    }
    rep.add_pass("vfun.struct", "well-formed functor data");

    {
        bool all = F.obj[A.unit] == Bc.unit;
        if (all) {
            Mor lhs = compose(B, A.j[A.unit], F.comp_mor[A.unit][A.unit]);
            all = lhs == Bc.j[Bc.unit];
        }
        if (all) rep.add_pass("vfun.strict_unit", "R(1_A) = 1_B and j;R = j");
        else rep.fail("vfun.strict_unit", "R(1_A) = 1_B and j;R = j", "unit");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                for (int c = 0; c < A.n; ++c) {
                    Mor lhs = compose(B, A.comp[a][b][c], F.comp_mor[a][c]);
                    Mor rhs = compose(B, tensor(B, F.comp_mor[a][b], F.comp_mor[b][c]),
                                      Bc.comp[F.obj[a]][F.obj[b]][F.obj[c]]);
                    if (!(lhs == rhs)) {
                        rep.fail("vfun.functorial", "comp;R = (R (x) R);comp", wit({{"a", a}, {"b", b}, {"c", c}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass("vfun.functorial", "comp;R = (R (x) R);comp");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            if (!(compose(B, A.j[a], F.comp_mor[a][a]) == Bc.j[F.obj[a]])) {
                rep.fail("vfun.unit", "j_a;R = j_{R(a)}", wit({{"a", a}}));
                all = false;
            }
        if (all) rep.add_pass("vfun.unit", "j_a;R = j_{R(a)}");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                for (int c = 0; c < A.n; ++c)
                    for (int d = 0; d < A.n; ++d) {
                        int Ra = F.obj[a], Rb = F.obj[b], Rc = F.obj[c], Rd = F.obj[d];
                        Mor through = compose(B, A.tens[a][b][c][d], F.comp_mor[A.ten(a, b)][A.ten(c, d)]);
                        Mor lhs = compose(B, tensor(B, F.lax[a][b], through),
                                          Bc.comp[Bc.ten(Ra, Rb)][F.obj[A.ten(a, b)]][F.obj[A.ten(c, d)]]);
                        Mor paired = compose(B, tensor(B, F.comp_mor[a][c], F.comp_mor[b][d]),
                                             Bc.tens[Ra][Rb][Rc][Rd]);
                        Mor rhs = compose(B, tensor(B, paired, F.lax[c][d]),
                                          Bc.comp[Bc.ten(Ra, Rb)][Bc.ten(Rc, Rd)][F.obj[A.ten(c, d)]]);
                        if (!(lhs == rhs)) {
                            rep.fail("vfun.lax.natural", "(rho (x) R(tens));comp = ((R (x) R);tens (x) rho);comp",
                                     wit({{"a", a}, {"b", b}, {"c", c}, {"d", d}}));
                            all = false;
                        }
                    }
        if (all) rep.add_pass("vfun.lax.natural", "(rho (x) R(tens));comp = ((R (x) R);tens (x) rho);comp");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                for (int c = 0; c < A.n; ++c) {
                    int Ra = F.obj[a], Rb = F.obj[b], Rc = F.obj[c];
                    int Rab = F.obj[A.ten(a, b)], Rbc = F.obj[A.ten(b, c)], Rabc = F.obj[A.ten(A.ten(a, b), c)];
                    Mor left_pair = compose(B, tensor(B, Bc.j[Ra], F.lax[b][c]),
                                            Bc.tens[Ra][Bc.ten(Rb, Rc)][Ra][Rbc]);
                    Mor lhs = compose(B, tensor(B, left_pair, F.lax[a][A.ten(b, c)]),
                                      Bc.comp[Bc.ten(Ra, Bc.ten(Rb, Rc))][Bc.ten(Ra, Rbc)][Rabc]);
                    Mor right_pair = compose(B, tensor(B, F.lax[a][b], Bc.j[Rc]),
                                             Bc.tens[Bc.ten(Ra, Rb)][Rc][Rab][Rc]);
                    Mor rhs = compose(B, tensor(B, right_pair, F.lax[A.ten(a, b)][c]),
                                      Bc.comp[Bc.ten(Bc.ten(Ra, Rb), Rc)][Bc.ten(Rab, Rc)][Rabc]);
                    if (!(lhs == rhs)) {
                        rep.fail("vfun.lax.assoc", "((j (x) rho);tens (x) rho);comp = ((rho (x) j);tens (x) rho);comp",
                                 wit({{"a", a}, {"b", b}, {"c", c}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass("vfun.lax.assoc", "((j (x) rho);tens (x) rho);comp = ((rho (x) j);tens (x) rho);comp");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a) {
            if (!(F.lax[A.unit][a] == Bc.j[F.obj[a]]) || !(F.lax[a][A.unit] == Bc.j[F.obj[a]])) {
                rep.fail("vfun.lax.unit", "rho_{1,a} = j_{R(a)} = rho_{a,1}", wit({{"a", a}}));
                all = false;
            }
        }
        if (all) rep.add_pass("vfun.lax.unit", "rho_{1,a} = j_{R(a)} = rho_{a,1}");
    }
    if (F.strong) {
        MonCat undB = underlying(Bc);
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b) {
                Mor rho{Bc.ten(F.obj[a], F.obj[b]), F.obj[A.ten(a, b)], F.lax[a][b].coeffs};
                if (!is_invertible_mor(undB, rho)) {
                    rep.fail("vfun.strong.invertible", "rho invertible in underlying category",
                             wit({{"a", a}, {"b", b}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("vfun.strong.invertible", "rho invertible in underlying category");
    }
    return rep;
}

ValidationReport validate_vtransform(const VTransform& t, bool monoidal) {
    ValidationReport rep;
    const VMonFunctor& R = *t.src;
    const VMonFunctor& S = *t.dst;
    const VMonCat& A = *R.src;
    const VMonCat& Bc = *R.dst;
    const PresentedBase& B = *A.base;
    if (R.src.get() != S.src.get() || R.dst.get() != S.dst.get()) {
        rep.fail("vtrans.struct", "well-formed transformation", "endpoint functors not parallel");
        return rep;
    }
    bool ok = static_cast<int>(t.comp.size()) == A.n;
    for (int a = 0; ok && a < A.n; ++a) {
        const Mor& th = t.comp[a];
        if (th.src != B.unit || th.dst != Bc.hom[R.obj[a]][S.obj[a]] ||
            static_cast<int>(th.coeffs.size()) != B.dim(th.src, th.dst)) ok = false;
    }
    if (!ok) {
        rep.fail("vtrans.struct", "well-formed transformation", "typing");
        return rep;
    }
    rep.add_pass("vtrans.struct", "well-formed transformation");

    bool nat = true;
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b) {
            Mor lhs = compose(B, tensor(B, t.comp[a], S.comp_mor[a][b]),
                              Bc.comp[R.obj[a]][S.obj[a]][S.obj[b]]);
            Mor rhs = compose(B, tensor(B, R.comp_mor[a][b], t.comp[b]),
                              Bc.comp[R.obj[a]][R.obj[b]][S.obj[b]]);
            if (!(lhs == rhs)) {
                rep.fail("vtrans.natural", "(theta_a (x) S);comp = (R (x) theta_b);comp",
                         wit({{"a", a}, {"b", b}}));
                nat = false;
            }
        }
    if (nat) rep.add_pass("vtrans.natural", "(theta_a (x) S);comp = (R (x) theta_b);comp");

    if (monoidal) {
        bool un = t.comp[A.unit] == Bc.j[Bc.unit];
        if (un) rep.add_pass("vtrans.unit", "theta_{1_A} = j_{1_B}");
        else rep.fail("vtrans.unit", "theta_{1_A} = j_{1_B}", "unit");

        bool mon = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b) {
                int Ra = R.obj[a], Rb = R.obj[b], Sa = S.obj[a], Sb = S.obj[b];
                int ab = A.ten(a, b);
                Mor lhs = compose(B, tensor(B, R.lax[a][b], t.comp[ab]),
                                  Bc.comp[Bc.ten(Ra, Rb)][R.obj[ab]][S.obj[ab]]);
                Mor paired = compose(B, tensor(B, t.comp[a], t.comp[b]), Bc.tens[Ra][Rb][Sa][Sb]);
                Mor rhs = compose(B, tensor(B, paired, S.lax[a][b]),
                                  Bc.comp[Bc.ten(Ra, Rb)][Bc.ten(Sa, Sb)][S.obj[ab]]);
                if (!(lhs == rhs)) {
                    rep.fail("vtrans.monoidal", "(rho (x) theta_{ab});comp = ((theta (x) theta);tens (x) sigma);comp",
                             wit({{"a", a}, {"b", b}}));
                    mon = false;
                }
            }
        if (mon) rep.add_pass("vtrans.monoidal",
                              "(rho (x) theta_{ab});comp = ((theta (x) theta);tens (x) sigma);comp");
    }
    return rep;
}

VMonFunctor identity_functor(VMonCatPtr C) {
    VMonFunctor F;
    F.src = C;
    F.dst = C;
    F.name = "id_" + C->name;
    F.strong = true;
    const PresentedBase& B = *C->base;
    F.obj.resize(C->n);
    F.comp_mor.assign(C->n, std::vector<Mor>(C->n));
    F.lax.assign(C->n, std::vector<Mor>(C->n));
    for (int a = 0; a < C->n; ++a) {
        F.obj[a] = a;
        for (int b = 0; b < C->n; ++b) {
            F.comp_mor[a][b] = identity_mor(B, C->hom[a][b]);
            F.lax[a][b] = C->j[C->ten(a, b)];
        }
    }
    return F;
}

VMonFunctor compose_functors(const VMonFunctor& F, const VMonFunctor& G) {
    if (F.dst.get() != G.src.get())
        throw std::invalid_argument("compose_functors: F.target != G.source");
    const VMonCat& A = *F.src;
    const VMonCat& Cc = *G.dst;
    const PresentedBase& B = *A.base;
    VMonFunctor H;
    H.src = F.src;
    H.dst = G.dst;
    H.name = F.name + ";" + G.name;
    H.strong = F.strong && G.strong;
    H.obj.resize(A.n);
    H.comp_mor.assign(A.n, std::vector<Mor>(A.n));
    H.lax.assign(A.n, std::vector<Mor>(A.n));
    for (int a = 0; a < A.n; ++a) H.obj[a] = G.obj[F.obj[a]];
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b) {
            H.comp_mor[a][b] = compose(B, F.comp_mor[a][b], G.comp_mor[F.obj[a]][F.obj[b]]);
            // (sigma_{Fa,Fb} (x) G(rho_{a,b})) ; comp_C
            int Fa = F.obj[a], Fb = F.obj[b], Fab = F.obj[A.ten(a, b)];
            int FaFb = F.dst->ten(Fa, Fb);
            Mor g_rho = compose(B, F.lax[a][b], G.comp_mor[FaFb][Fab]);
            H.lax[a][b] = compose(B, tensor(B, G.lax[Fa][Fb], g_rho),
                                  Cc.comp[Cc.ten(G.obj[Fa], G.obj[Fb])][G.obj[FaFb]][G.obj[Fab]]);
        }
    return H;
}

VTransform identity_transform(VMonFunctorPtr F) {
    VTransform t;
    t.src = F;
    t.dst = F;
    t.name = "id_" + F->name;
    const VMonCat& Bc = *F->dst;
    t.comp.resize(F->src->n);
    for (int a = 0; a < F->src->n; ++a) t.comp[a] = Bc.j[F->obj[a]];
    return t;
}

VTransform vertical_compose(const VTransform& t1, const VTransform& t2) {
    if (t1.dst.get() != t2.src.get())
        throw std::invalid_argument("vertical_compose: endpoints not composable");
    const VMonCat& A = *t1.src->src;
    const VMonCat& Bc = *t1.src->dst;
    const PresentedBase& B = *A.base;
    VTransform t;
    t.src = t1.src;
    t.dst = t2.dst;
    t.name = t1.name + ";" + t2.name;
    t.comp.resize(A.n);
    for (int a = 0; a < A.n; ++a)
        t.comp[a] = compose(B, tensor(B, t1.comp[a], t2.comp[a]),
                            Bc.comp[t1.src->obj[a]][t1.dst->obj[a]][t2.dst->obj[a]]);
    return t;
}

VTransform horizontal_compose(const VTransform& t1, const VTransform& t2) {
    // t1 : R1 => R2 (A -> B), t2 : S1 => S2 (B -> C).
    if (t1.src->dst.get() != t2.src->src.get())
        throw std::invalid_argument("horizontal_compose: middle category mismatch");
    const VMonFunctor& R1 = *t1.src;
    const VMonFunctor& R2 = *t1.dst;
    const VMonFunctor& S1 = *t2.src;
    const VMonFunctor& S2 = *t2.dst;
    const VMonCat& A = *R1.src;
    const VMonCat& Cc = *S1.dst;
    const PresentedBase& B = *A.base;
    VTransform t;
    t.src = std::make_shared<VMonFunctor>(compose_functors(R1, S1));
    t.dst = std::make_shared<VMonFunctor>(compose_functors(R2, S2));
    t.name = t1.name + "*" + t2.name;
    t.comp.resize(A.n);
    for (int a = 0; a < A.n; ++a) {
        Mor whisker = compose(B, t1.comp[a], S1.comp_mor[R1.obj[a]][R2.obj[a]]);
        t.comp[a] = compose(B, tensor(B, whisker, t2.comp[R2.obj[a]]),
                            Cc.comp[S1.obj[R1.obj[a]]][S1.obj[R2.obj[a]]][S2.obj[R2.obj[a]]]);
    }
    return t;
}

bool same_data(const VMonFunctor& F, const VMonFunctor& G) {
    return F.obj == G.obj && F.comp_mor == G.comp_mor && F.lax == G.lax && F.strong == G.strong;
}

bool same_data(const VTransform& s, const VTransform& t) { return s.comp == t.comp; }

MonCat underlying(const VMonCat& C) {
    const PresentedBase& B = *C.base;
    MonCat U;
    U.name = "underlying(" + C.name + ")";
    U.n = C.n;
    U.unit = C.unit;
    U.tt = C.tt;
    U.hd.assign(C.n, std::vector<int>(C.n));
    U.id.resize(C.n);
    for (int a = 0; a < C.n; ++a) {
        for (int b = 0; b < C.n; ++b) U.hd[a][b] = B.dim(B.unit, C.hom[a][b]);
        U.id[a] = C.j[a].coeffs;
    }
    U.comp.assign(C.n, std::vector<std::vector<Bilinear>>(C.n, std::vector<Bilinear>(C.n)));
    U.tens.assign(C.n, std::vector<std::vector<std::vector<Bilinear>>>(
                           C.n, std::vector<std::vector<Bilinear>>(C.n, std::vector<Bilinear>(C.n))));
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int c = 0; c < C.n; ++c) {
                Bilinear sc(U.hd[a][b], U.hd[b][c], U.hd[a][c]);
                for (int p = 0; p < sc.dl; ++p)
                    for (int q = 0; q < sc.dr; ++q) {
                        Mor fp = basis_mor(B, B.unit, C.hom[a][b], p);
                        Mor gq = basis_mor(B, B.unit, C.hom[b][c], q);
                        Vec out = compose(B, tensor(B, fp, gq), C.comp[a][b][c]).coeffs;
                        for (int r = 0; r < sc.dout; ++r) sc.at(p, q, r) = out[r];
                    }
                U.comp[a][b][c] = std::move(sc);
            }
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int c = 0; c < C.n; ++c)
                for (int d = 0; d < C.n; ++d) {
                    Bilinear sc(U.hd[a][b], U.hd[c][d], U.hd[U.tt[a][c]][U.tt[b][d]]);
                    for (int p = 0; p < sc.dl; ++p)
                        for (int q = 0; q < sc.dr; ++q) {
                            Mor fp = basis_mor(B, B.unit, C.hom[a][b], p);
                            Mor gq = basis_mor(B, B.unit, C.hom[c][d], q);
                            Vec out = compose(B, tensor(B, fp, gq), C.tens[a][c][b][d]).coeffs;
                            for (int r = 0; r < sc.dout; ++r) sc.at(p, q, r) = out[r];
                        }
                    U.tens[a][b][c][d] = std::move(sc);
                }
    return U;
}

OrdFunctor underlying_functor(const VMonFunctor& F) {
    const VMonCat& A = *F.src;
    const PresentedBase& B = *A.base;
    OrdFunctor R;
    R.name = F.name + "^V";
    R.obj = F.obj;
    R.mor.assign(A.n, std::vector<Matrix>(A.n));
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b) {
            int da = B.dim(B.unit, A.hom[a][b]);
            int db = B.dim(B.unit, F.dst->hom[F.obj[a]][F.obj[b]]);
            Matrix m(db, da);
            for (int p = 0; p < da; ++p)
                m.set_col(p, compose(B, basis_mor(B, B.unit, A.hom[a][b], p), F.comp_mor[a][b]).coeffs);
            R.mor[a][b] = std::move(m);
        }
    return R;
}

TraceFunctor trace(const VMonCat& C) {
    const PresentedBase& B = *C.base;
    TraceFunctor T;
    T.obj.resize(C.n);
    for (int a = 0; a < C.n; ++a) T.obj[a] = C.hom[C.unit][a];
    T.mor.assign(C.n, std::vector<Matrix>(C.n));
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b) {
            int d_in = B.dim(B.unit, C.hom[a][b]);
            int d_out = B.dim(T.obj[a], T.obj[b]);
            Matrix m(d_out, d_in);
            for (int p = 0; p < d_in; ++p) {
                Mor f = basis_mor(B, B.unit, C.hom[a][b], p);
                Mor tr = compose(B, tensor(B, identity_mor(B, T.obj[a]), f), C.comp[C.unit][a][b]);
                m.set_col(p, tr.coeffs);
            }
            T.mor[a][b] = std::move(m);
        }
    return T;
}

ValidationReport validate_trace(const VMonCat& C) {
    ValidationReport rep;
    const PresentedBase& B = *C.base;
    MonCat U = underlying(C);
    TraceFunctor T = trace(C);
    bool ok = true;
    for (int a = 0; a < C.n; ++a) {
        Vec tr_id = T.mor[a][a].apply(U.id[a]);
        if (tr_id != identity_mor(B, T.obj[a]).coeffs) {
            rep.fail("trace.id", "Tr(id) = id", wit({{"a", a}}));
            ok = false;
        }
    }
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int c = 0; c < C.n; ++c)
                for (int p = 0; p < U.hd[a][b]; ++p)
                    for (int q = 0; q < U.hd[b][c]; ++q) {
                        Mor f = basis_mor(U, a, b, p), g = basis_mor(U, b, c, q);
                        Vec lhs = T.mor[a][c].apply(compose(U, f, g).coeffs);
                        Mor trf{T.obj[a], T.obj[b], T.mor[a][b].apply(f.coeffs)};
                        Mor trg{T.obj[b], T.obj[c], T.mor[b][c].apply(g.coeffs)};
                        Vec rhs = compose(B, trf, trg).coeffs;
                        if (lhs != rhs) {
                            rep.fail("trace.functorial", "Tr(f;g) = Tr(f);Tr(g)",
                                     wit({{"a", a}, {"b", b}, {"c", c}, {"p", p}, {"q", q}}));
                            ok = false;
                        }
                    }
    if (ok) {
        rep.add_pass("trace.id", "Tr(id) = id");
        rep.add_pass("trace.functorial", "Tr(f;g) = Tr(f);Tr(g)");
    }
    return rep;
}

VMonCat self_enrichment(BasePtr base) {
    const PresentedBase& B = *base;
    if (!B.duality) throw std::invalid_argument("self_enrichment: duality data missing");
    VMonCat C;
    C.base = base;
    C.name = "vhat_" + B.name;
    C.n = B.n;
    C.unit = B.unit;
    C.tt = B.tt;
    C.hom.assign(B.n, std::vector<int>(B.n));
    for (int u = 0; u < B.n; ++u)
        for (int v = 0; v < B.n; ++v) C.hom[u][v] = internal_hom(B, u, v);
    C.j.resize(B.n);
    for (int v = 0; v < B.n; ++v) C.j[v] = mate_ih(B, v, B.unit, identity_mor(B, v));

    auto eval = [&](int u, int v) { return unmate_ih(B, u, v, identity_mor(B, C.hom[u][v])); };

    C.comp.assign(B.n, std::vector<std::vector<Mor>>(B.n, std::vector<Mor>(B.n)));
    for (int u = 0; u < B.n; ++u)
        for (int v = 0; v < B.n; ++v)
            for (int w = 0; w < B.n; ++w) {
                // u [u,v] [v,w] -> v [v,w] -> w, then mated back along u.
                Mor body = compose(B, tensor(B, eval(u, v), identity_mor(B, C.hom[v][w])), eval(v, w));
                C.comp[u][v][w] = mate_ih(B, u, B.ten(C.hom[u][v], C.hom[v][w]), body);
            }

    C.tens.assign(B.n, std::vector<std::vector<std::vector<Mor>>>(
                           B.n, std::vector<std::vector<Mor>>(B.n, std::vector<Mor>(B.n))));
    for (int u = 0; u < B.n; ++u)
        for (int w = 0; w < B.n; ++w)
            for (int v = 0; v < B.n; ++v)
                for (int x = 0; x < B.n; ++x) {
                    // (u w)([u,v][w,x]): pull w through [u,v] with one beta
                    // crossing, evaluate both strands.
                    Mor swap = tensor_all(B, {identity_mor(B, u), braid(B, w, C.hom[u][v]),
                                              identity_mor(B, C.hom[w][x])});
                    Mor body = compose(B, swap, tensor(B, eval(u, v), eval(w, x)));
                    C.tens[u][w][v][x] =
                        mate_ih(B, B.ten(u, w), B.ten(C.hom[u][v], C.hom[w][x]), body);
                }
    return C;
}

VMonCat with_base(const VMonCat& C, BasePtr base) {
    VMonCat out = C;
    out.base = std::move(base);
    return out;
}

} // namespace modtens
