#pragma once

// In-code builders for the desk fixtures. The shipped fixture files under
// fixtures/ carry the same data; test_io_cli asserts they agree.

#include "modtens/enriched.hpp"
#include "modtens/grading.hpp"

namespace modtens::fixtures {

inline Bilinear scalar_bilinear(int dl, int dr, int dout, const Rational& c) {
    Bilinear b(dl, dr, dout);
    if (dl == 1 && dr == 1 && dout == 1) b.at(0, 0, 0) = c;
    return b;
}

inline void size_tables(MonCat& C) {
    C.comp.assign(C.n, std::vector<std::vector<Bilinear>>(C.n, std::vector<Bilinear>(C.n)));
    C.tens.assign(C.n, std::vector<std::vector<std::vector<Bilinear>>>(
                           C.n, std::vector<std::vector<Bilinear>>(C.n, std::vector<Bilinear>(C.n))));
    for (int i = 0; i < C.n; ++i)
        for (int j = 0; j < C.n; ++j)
            for (int k = 0; k < C.n; ++k) {
                C.comp[i][j][k] = Bilinear(C.hd[i][j], C.hd[j][k], C.hd[i][k]);
                for (int l = 0; l < C.n; ++l)
                    C.tens[i][j][k][l] =
                        Bilinear(C.hd[i][j], C.hd[k][l], C.hd[C.tt[i][k]][C.tt[j][l]]);
            }
}

/// One object, End = Q. Rigid, trivial braiding.
inline BasePtr make_triv() {
    auto B = std::make_shared<PresentedBase>();
    B->name = "triv";
    B->n = 1;
    B->unit = 0;
    B->tt = {{0}};
    B->hd = {{1}};
    B->id = {{Rational(1)}};
    size_tables(*B);
    B->comp[0][0][0].at(0, 0, 0) = Rational(1);
    B->tens[0][0][0][0].at(0, 0, 0) = Rational(1);
    B->braiding = {{Mor{0, 0, {Rational(1)}}}};
    Duality D;
    D.dual = {0};
    D.ev = {Mor{0, 0, {Rational(1)}}};
    D.coev = {Mor{0, 0, {Rational(1)}}};
    B->duality = std::move(D);
    return B;
}

/// Super vector spaces over Z/2: objects {even, odd}, beta_{1,1} = -1.
inline BasePtr make_svec(const Rational& beta_odd = Rational(-1)) {
    auto B = std::make_shared<PresentedBase>();
    B->name = "svec";
    B->n = 2;
    B->unit = 0;
    B->tt = {{0, 1}, {1, 0}};
    B->hd = {{1, 0}, {0, 1}};
    B->id = {{Rational(1)}, {Rational(1)}};
    size_tables(*B);
    for (int i = 0; i < 2; ++i) {
        B->comp[i][i][i] = scalar_bilinear(1, 1, 1, Rational(1));
        for (int j = 0; j < 2; ++j)
            B->tens[i][i][j][j] = scalar_bilinear(1, 1, 1, Rational(1));
    }
    B->braiding.assign(2, std::vector<Mor>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            B->braiding[i][j] = Mor{B->tt[i][j], B->tt[j][i],
                                    {(i == 1 && j == 1) ? beta_odd : Rational(1)}};
    Duality D;
    D.dual = {0, 1};
    D.ev = {Mor{0, 0, {Rational(1)}}, Mor{0, 0, {Rational(1)}}};
    D.coev = {Mor{0, 0, {Rational(1)}}, Mor{0, 0, {Rational(1)}}};
    B->duality = std::move(D);
    return B;
}

/// triv with a designated zero object adjoined (base for PT2 and ONE).
inline BasePtr make_trivz() {
    auto B = std::make_shared<PresentedBase>();
    B->name = "trivz";
    B->n = 2; // 0 = unit, 1 = zero object
    B->unit = 0;
    B->zero = 1;
    B->tt = {{0, 1}, {1, 1}};
    B->hd = {{1, 0}, {0, 0}};
    B->id = {{Rational(1)}, {}};
    size_tables(*B);
    B->comp[0][0][0].at(0, 0, 0) = Rational(1);
    B->tens[0][0][0][0].at(0, 0, 0) = Rational(1);
    B->braiding.assign(2, std::vector<Mor>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            B->braiding[i][j] = Mor{B->tt[i][j], B->tt[j][i],
                                    Vec(static_cast<std::size_t>(B->hd[B->tt[i][j]][B->tt[j][i]]))};
            if (i == 0 && j == 0) B->braiding[i][j].coeffs[0] = Rational(1);
        }
    Duality D;
    D.dual = {0, 1};
    D.ev = {Mor{0, 0, {Rational(1)}}, Mor{1, 0, {}}};
    D.coev = {Mor{0, 0, {Rational(1)}}, Mor{0, 1, {}}};
    B->duality = std::move(D);
    return B;
}

namespace detail {

inline VMonCatPtr pointed_cat(BasePtr base, std::string name, int n, int null_obj,
                              std::vector<std::vector<int>> tt) {
    // Pointed category over trivz: diagonal homs are the base unit, all other
    // homs the zero object; one designated null object absorbs the tensor.
    auto C = std::make_shared<VMonCat>();
    const PresentedBase& B = *base;
    C->base = std::move(base);
    C->name = std::move(name);
    C->n = n;
    C->unit = 0;
    C->tt = std::move(tt);
    C->hom.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            C->hom[a][b] = (a == b && a != null_obj) ? B.unit : *B.zero;
    C->j.resize(n);
    for (int a = 0; a < n; ++a)
        C->j[a] = a == null_obj ? zero_mor(B, B.unit, *B.zero)
                                : Mor{B.unit, B.unit, {Rational(1)}};
    C->comp.assign(n, std::vector<std::vector<Mor>>(n, std::vector<Mor>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                C->comp[a][b][c] = zero_mor(B, B.ten(C->hom[a][b], C->hom[b][c]), C->hom[a][c]);
                if (a == b && b == c && a != null_obj) C->comp[a][b][c].coeffs[0] = Rational(1);
            }
    C->tens.assign(n, std::vector<std::vector<std::vector<Mor>>>(
                          n, std::vector<std::vector<Mor>>(n, std::vector<Mor>(n))));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    C->tens[a][b][c][d] = zero_mor(B, B.ten(C->hom[a][c], C->hom[b][d]),
                                                   C->hom[C->tt[a][b]][C->tt[c][d]]);
                    if (a == c && b == d && a != null_obj && b != null_obj &&
                        C->tt[a][b] != null_obj)
                        C->tens[a][b][c][d].coeffs[0] = Rational(1);
                }
    return C;
}

} // namespace detail

/// PT2 over trivz: objects {1, x, 0} with x(x)x = 1 and a null object.
inline VMonCatPtr make_pt2(BasePtr trivz) {
    return detail::pointed_cat(std::move(trivz), "pt2", 3, 2,
                               {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
}

/// One nontrivial object plus the null object, over trivz.
inline VMonCatPtr make_one(BasePtr trivz) {
    return detail::pointed_cat(std::move(trivz), "one", 2, 1, {{0, 1}, {1, 1}});
}

/// Unit inclusion ONE -> PT2.
inline VMonFunctorPtr make_inclusion(VMonCatPtr one, VMonCatPtr pt2) {
    auto F = std::make_shared<VMonFunctor>();
    const PresentedBase& B = *one->base;
    F->src = one;
    F->dst = pt2;
    F->name = "incl";
    F->strong = true;
    F->obj = {0, 2};
    F->comp_mor.assign(one->n, std::vector<Mor>(one->n));
    F->lax.assign(one->n, std::vector<Mor>(one->n));
    for (int a = 0; a < one->n; ++a)
        for (int b = 0; b < one->n; ++b) {
            F->comp_mor[a][b] = zero_mor(B, one->hom[a][b], pt2->hom[F->obj[a]][F->obj[b]]);
            if (a == 0 && b == 0) F->comp_mor[a][b].coeffs[0] = Rational(1);
            F->lax[a][b] = zero_mor(B, B.unit,
                                    pt2->hom[pt2->ten(F->obj[a], F->obj[b])][F->obj[one->ten(a, b)]]);
            if (a == 0 && b == 0) F->lax[a][b].coeffs[0] = Rational(1);
        }
    return F;
}

/// Collapse endofunctor of PT2: x goes to 1 (strong, changes objects).
inline VMonFunctorPtr make_collapse(VMonCatPtr pt2) {
    auto F = std::make_shared<VMonFunctor>();
    const PresentedBase& B = *pt2->base;
    F->src = pt2;
    F->dst = pt2;
    F->name = "collapse";
    F->strong = true;
    F->obj = {0, 0, 2};
    F->comp_mor.assign(3, std::vector<Mor>(3));
    F->lax.assign(3, std::vector<Mor>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            F->comp_mor[a][b] = zero_mor(B, pt2->hom[a][b], pt2->hom[F->obj[a]][F->obj[b]]);
            if (a == b && a < 2) F->comp_mor[a][b].coeffs[0] = Rational(1);
            F->lax[a][b] = zero_mor(B, B.unit,
                                    pt2->hom[pt2->ten(F->obj[a], F->obj[b])][F->obj[pt2->ten(a, b)]]);
            if (a < 2 && b < 2) F->lax[a][b].coeffs[0] = Rational(1);
        }
    return F;
}

/// The sign transformation on id_PT2: theta_1 = 1, theta_x = -1.
inline std::shared_ptr<VTransform> make_sign(VMonFunctorPtr id_pt2) {
    auto t = std::make_shared<VTransform>();
    const VMonCat& C = *id_pt2->src;
    t->src = id_pt2;
    t->dst = id_pt2;
    t->name = "sign";
    t->comp.resize(C.n);
    t->comp[0] = Mor{C.base->unit, C.hom[0][0], {Rational(1)}};
    t->comp[1] = Mor{C.base->unit, C.hom[1][1], {Rational(-1)}};
    t->comp[2] = zero_mor(*C.base, C.base->unit, C.hom[2][2]);
    return t;
}

/// Z/3-graded one-dimensional spaces, trivial (symmetric) braiding. Useful
/// where Z/2 fixtures are blind: several corruptions of mu/rho on a pointed
/// Z/2 category are bilinear twists (still valid structures), while Z/3 has
/// asymmetric coassociativity instances that genuinely fail.
inline BasePtr make_vecz3() {
    auto B = std::make_shared<PresentedBase>();
    B->name = "vecz3";
    B->n = 3;
    B->unit = 0;
    B->tt.assign(3, std::vector<int>(3));
    B->hd.assign(3, std::vector<int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            B->tt[i][j] = (i + j) % 3;
            B->hd[i][j] = i == j ? 1 : 0;
        }
    B->id.assign(3, Vec{Rational(1)});
    size_tables(*B);
    for (int i = 0; i < 3; ++i) {
        B->comp[i][i][i].at(0, 0, 0) = Rational(1);
        for (int j = 0; j < 3; ++j) B->tens[i][i][j][j].at(0, 0, 0) = Rational(1);
    }
    B->braiding.assign(3, std::vector<Mor>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            B->braiding[i][j] = Mor{B->tt[i][j], B->tt[j][i], {Rational(1)}};
    Duality D;
    D.dual = {0, 2, 1};
    for (int i = 0; i < 3; ++i) {
        D.ev.push_back(Mor{0, 0, {Rational(1)}});
        D.coev.push_back(Mor{0, 0, {Rational(1)}});
    }
    B->duality = std::move(D);
    return B;
}

inline FiniteGroup make_z2() {
    FiniteGroup G;
    G.name = "z2";
    G.order = 2;
    G.identity = 0;
    G.table = {{0, 1}, {1, 0}};
    return G;
}

inline FiniteGroup make_z3() {
    FiniteGroup G;
    G.name = "z3";
    G.order = 3;
    G.identity = 0;
    G.table = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    return G;
}

} // namespace modtens::fixtures
