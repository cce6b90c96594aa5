#include "modtens/equivalence.hpp"

#include <map>
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

constexpr const char* kEngineVersion = "modtens-1.0";

} // namespace

ModTensPtr P0(std::shared_ptr<const TensorAdjunction> adj) {
    auto M = std::make_shared<ModTensCat>();
    M->name = "p0_" + adj->cat->name;
    M->base = adj->cat->base;
    M->A = adj->und;
    M->F_obj = adj->F_obj;
    M->F_mor = adj->F_mor;
    M->mu = adj->mu;
    M->e = adj->e;
    M->provenance = ModTensCat::Provenance::computed;
    M->stamp = "computed-by-P0 source=" + adj->cat->name + " engine=" + kEngineVersion;
    M->origin = adj->cat;
    M->adj = adj;
    return M;
}

ModTensCell1 P1(const VMonFunctor& F, ModTensPtr srcM, ModTensPtr dstM) {
    if (srcM->origin.get() != F.src.get() || dstM->origin.get() != F.dst.get())
        throw std::invalid_argument("P1: 0-cell endpoints do not match the functor");
    const VMonCat& A = *F.src;
    const VMonCat& Bc = *F.dst;
    const PresentedBase& B = *A.base;
    const TensorAdjunction& adjA = *srcM->adj;
    const TensorAdjunction& adjB = *dstM->adj;

    ModTensCell1 c;
    c.name = "p1_" + F.name;
    c.src = srcM;
    c.dst = dstM;
    c.strong = F.strong;
    OrdFunctor R = underlying_functor(F);
    c.obj = R.obj;
    c.mor = R.mor;
    c.rho.assign(A.n, std::vector<Mor>(A.n));
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b)
            c.rho[a][b] = Mor{Bc.ten(F.obj[a], F.obj[b]), F.obj[A.ten(a, b)], F.lax[a][b].coeffs};
    c.r.resize(B.n);
    for (int v = 0; v < B.n; ++v) {
        int FAv = adjA.F_obj[v];
        Mor arg = compose(B, adjA.eta[v], F.comp_mor[A.unit][FAv]);
        c.r[v] = mate_fwd(adjB, Bc.unit, F.obj[FAv], arg);
    }
    return c;
}

ModTensCell2 P2(const VTransform& t, ModTensCell1Ptr srcC, ModTensCell1Ptr dstC) {
    const VMonFunctor& R = *t.src;
    const VMonFunctor& S = *t.dst;
    ModTensCell2 th;
    th.name = "p2_" + t.name;
    th.src = srcC;
    th.dst = dstC;
    th.comp.resize(R.src->n);
    for (int a = 0; a < R.src->n; ++a)
        th.comp[a] = Mor{R.obj[a], S.obj[a], t.comp[a].coeffs};
    return th;
}

VMonFunctor Q1(const ModTensCell1& c) {
    const ModTensCat& S = *c.src;
    const ModTensCat& T = *c.dst;
    if (!S.adj || !T.adj)
        throw std::invalid_argument("Q1: endpoint 0-cells carry no computed adjunction");
    const VMonCat& A = *S.origin;
    const VMonCat& Bc = *T.origin;
    const PresentedBase& B = *A.base;
    const TensorAdjunction& adjA = *S.adj;
    const TensorAdjunction& adjB = *T.adj;
    const MonCat& AT = T.A;

    VMonFunctor F;
    F.src = S.origin;
    F.dst = T.origin;
    F.name = "q1_" + c.name;
    F.strong = c.strong;
    F.obj = c.obj;
    F.comp_mor.assign(A.n, std::vector<Mor>(A.n));
    F.lax.assign(A.n, std::vector<Mor>(A.n));
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b) {
            int h = A.hom[a][b];
            int FAh = adjA.F_obj[h];
            // (1_{R(a)} (x) r_h) ; rho_{a, F_A(h)} ; R(counit_A)
            Mor body = compose(AT, tensor(AT, identity_mor(AT, c.obj[a]), c.r[h]),
                               compose(AT, c.rho[a][FAh], c.R_of(counit(adjA, a, b))));
            F.comp_mor[a][b] = mate_bwd(adjB, c.obj[a], h, body);
            F.lax[a][b] = Mor{B.unit, Bc.hom[Bc.ten(c.obj[a], c.obj[b])][c.obj[A.ten(a, b)]],
                              c.rho[a][b].coeffs};
        }
    return F;
}

VTransform Q2(const ModTensCell2& th, VMonFunctorPtr srcF, VMonFunctorPtr dstF) {
    const VMonCat& A = *srcF->src;
    const VMonCat& Bc = *srcF->dst;
    VTransform t;
    t.name = "q2_" + th.name;
    t.src = srcF;
    t.dst = dstF;
    t.comp.resize(A.n);
    for (int a = 0; a < A.n; ++a)
        t.comp[a] = Mor{A.base->unit, Bc.hom[srcF->obj[a]][dstF->obj[a]], th.comp[a].coeffs};
    return t;
}

namespace {

/// Shared context: adjunctions, P0 images, and P1 cells per fixture object,
/// keyed by pointer so composability guards see shared endpoints.
struct PContext {
    std::map<const VMonCat*, std::shared_ptr<const TensorAdjunction>> adjs;
    std::map<const VMonCat*, ModTensPtr> p0s;
    std::map<const VMonFunctor*, ModTensCell1Ptr> cells;

    ModTensPtr image(VMonCatPtr C) {
        auto it = p0s.find(C.get());
        if (it != p0s.end()) return it->second;
        AdjResult r = compute_adjoint(C);
        if (std::holds_alternative<NotWeaklyTensored>(r))
            throw std::runtime_error("fixture category not weakly tensored: " + C->name);
        auto adj = std::make_shared<TensorAdjunction>(std::get<TensorAdjunction>(std::move(r)));
        adjs[C.get()] = adj;
        ModTensPtr M = P0(adj);
        p0s[C.get()] = M;
        return M;
    }

    ModTensCell1Ptr cell(VMonFunctorPtr F) {
        auto it = cells.find(F.get());
        if (it != cells.end()) return it->second;
        auto c = std::make_shared<ModTensCell1>(P1(*F, image(F->src), image(F->dst)));
        cells[F.get()] = c;
        return c;
    }
};

} // namespace

ValidationReport check_roundtrip(const EquivalenceFixtures& fx) {
    ValidationReport rep;
    PContext ctx;

    std::vector<VMonFunctorPtr> funs = fx.functors;
    for (const auto& C : fx.cats)
        funs.push_back(std::make_shared<VMonFunctor>(identity_functor(C)));

    bool q1p1 = true, p1q1 = true;
    int idx = 0;
    for (const auto& F : funs) {
        ModTensCell1Ptr cell = ctx.cell(F);
        VMonFunctor back = Q1(*cell);
        if (!same_data(back, *F)) {
            rep.fail("roundtrip.q1p1", "Q1(P1(F)) = F", wit({{"functor", idx}}));
            q1p1 = false;
        }
        ModTensCell1 forward_again = P1(back, ctx.image(F->src), ctx.image(F->dst));
        if (!same_data(forward_again, *cell)) {
            rep.fail("roundtrip.p1q1", "P1(Q1(c)) = c", wit({{"cell", idx}}));
            p1q1 = false;
        }
        ++idx;
    }
    if (q1p1) rep.add_pass("roundtrip.q1p1", "Q1(P1(F)) = F");
    if (p1q1) rep.add_pass("roundtrip.p1q1", "P1(Q1(c)) = c");

    std::vector<std::shared_ptr<const VTransform>> trans = fx.transforms;
    for (const auto& F : funs)
        trans.push_back(std::make_shared<VTransform>(identity_transform(F)));

    bool q2p2 = true, p2q2 = true;
    idx = 0;
    for (const auto& t : trans) {
        ModTensCell1Ptr sc = ctx.cell(t->src);
        ModTensCell1Ptr dc = ctx.cell(t->dst);
        ModTensCell2 th = P2(*t, sc, dc);
        VTransform back = Q2(th, t->src, t->dst);
        if (!same_data(back, *t)) {
            rep.fail("roundtrip.q2p2", "Q2(P2(t)) = t", wit({{"transform", idx}}));
            q2p2 = false;
        }
        ModTensCell2 fwd = P2(back, sc, dc);
        if (!same_data(fwd, th)) {
            rep.fail("roundtrip.p2q2", "P2(Q2(Theta)) = Theta", wit({{"transform", idx}}));
            p2q2 = false;
        }
        ++idx;
    }
    if (q2p2) rep.add_pass("roundtrip.q2p2", "Q2(P2(t)) = t");
    if (p2q2) rep.add_pass("roundtrip.p2q2", "P2(Q2(Theta)) = Theta");
    return rep;
}

ValidationReport check_2functoriality(const EquivalenceFixtures& fx) {
    ValidationReport rep;
    PContext ctx;

    bool units = true;
    int idx = 0;
    for (const auto& C : fx.cats) {
        ModTensPtr M = ctx.image(C);
        ModTensCell1 lhs = P1(identity_functor(C), M, M);
        if (!same_data(lhs, identity_cell1(M))) {
            rep.fail("twofun.unit", "P1(1_A) = 1_{P(A)}", wit({{"cat", idx}}));
            units = false;
        }
        ++idx;
    }
    if (units) rep.add_pass("twofun.unit", "P1(1_A) = 1_{P(A)}");

    auto p1_of = [&](const VMonFunctor& F) {
        return P1(F, ctx.image(F.src), ctx.image(F.dst));
    };

    bool comp1 = true;
    int pairs = 0;
    for (const auto& F : fx.functors)
        for (const auto& G : fx.functors) {
            if (F->dst.get() != G->src.get()) continue;
            ++pairs;
            ModTensCell1 lhs = p1_of(compose_functors(*F, *G));
            ModTensCell1 rhs = compose_cells1(*ctx.cell(F), *ctx.cell(G));
            if (!same_data(lhs, rhs)) {
                rep.fail("twofun.comp1", "P1(F;G) = P1(F);P1(G)", "pair=" + std::to_string(pairs - 1));
                comp1 = false;
            }
        }
    if (comp1) rep.add_pass("twofun.comp1", "P1(F;G) = P1(F);P1(G)",
                            "pairs=" + std::to_string(pairs));

    auto p2_of = [&](const VTransform& t) { return P2(t, ctx.cell(t.src), ctx.cell(t.dst)); };

    // include identity transforms so composable pairs exist on fixtures
    std::vector<std::shared_ptr<const VTransform>> trans = fx.transforms;
    for (const auto& F : fx.functors)
        trans.push_back(std::make_shared<VTransform>(identity_transform(F)));

    bool v2 = true;
    int vcount = 0;
    for (const auto& t1 : trans)
        for (const auto& t2 : trans) {
            if (t1->dst.get() != t2->src.get()) continue;
            ++vcount;
            ModTensCell2 lhs = p2_of(vertical_compose(*t1, *t2));
            ModTensCell2 rhs = compose_cells2_vertical(p2_of(*t1), p2_of(*t2));
            if (!same_data(lhs, rhs)) {
                rep.fail("twofun.vcomp2", "P2(t1;t2) = P2(t1);P2(t2)",
                         "pair=" + std::to_string(vcount - 1));
                v2 = false;
            }
        }
    if (v2) rep.add_pass("twofun.vcomp2", "P2(t1;t2) = P2(t1);P2(t2)",
                         "pairs=" + std::to_string(vcount));

    bool h2 = true;
    int hcount = 0;
    for (const auto& t1 : trans)
        for (const auto& t2 : trans) {
            if (t1->src->dst.get() != t2->src->src.get()) continue;
            ++hcount;
            ModTensCell2 lhs = p2_of(horizontal_compose(*t1, *t2));
            ModTensCell2 rhs = compose_cells2_horizontal(p2_of(*t1), p2_of(*t2));
            if (!same_data(lhs, rhs)) {
                rep.fail("twofun.hcomp2", "P2(t1*t2) = P2(t1)*P2(t2)",
                         "pair=" + std::to_string(hcount - 1));
                h2 = false;
            }
        }
    if (h2) rep.add_pass("twofun.hcomp2", "P2(t1*t2) = P2(t1)*P2(t2)",
                         "pairs=" + std::to_string(hcount));
    return rep;
}

ValidationReport check_reconstruction(const TensorAdjunction& adj) {
    ValidationReport rep;
    const VMonCat& C = *adj.cat;
    const PresentedBase& B = *C.base;
    const MonCat& und = adj.und;

    // Hom objects by representability search against A(a F(v) -> b).
    bool hom_ok = true;
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b) {
            int found = -1;
            for (int w = 0; w < B.n && found < 0; ++w) {
                bool dims_ok = true;
                for (int v = 0; v < B.n; ++v)
                    if (B.dim(v, w) != und.hd[C.ten(a, adj.F_obj[v])][b]) { dims_ok = false; break; }
                if (!dims_ok) continue;
                // kappa schedule over A(a F(w) -> b): zero, basis, pairwise sums
                int m = und.hd[C.ten(a, adj.F_obj[w])][b];
                std::vector<Vec> schedule;
                schedule.push_back(Vec(m));
                for (int i = 0; i < m; ++i) {
                    Vec e(m);
                    e[i] = Rational(1);
                    schedule.push_back(e);
                }
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j) {
                        Vec e(m);
                        e[i] = Rational(1);
                        e[j] = Rational(1);
                        schedule.push_back(e);
                    }
                for (const Vec& cand : schedule) {
                    Mor kappa{C.ten(a, adj.F_obj[w]), b, cand};
                    bool represents = true;
                    for (int v = 0; v < B.n && represents; ++v) {
                        int rows = und.hd[C.ten(a, adj.F_obj[v])][b];
                        Matrix phi(rows, B.dim(v, w));
                        for (int k = 0; k < B.dim(v, w); ++k) {
                            Mor fk = basis_mor(B, v, w, k);
                            Mor img = compose(und, tensor(und, identity_mor(und, a), apply_F(adj, fk)),
                                              kappa);
                            phi.set_col(k, img.coeffs);
                        }
                        if (!is_invertible(phi)) represents = false;
                    }
                    if (represents) { found = w; break; }
                }
            }
            if (found != C.hom[a][b]) {
                rep.fail("recon.homobj", "representability search finds hom(a,b)",
                         wit({{"a", a}, {"b", b}, {"found", found}}));
                hom_ok = false;
            }
        }
    if (hom_ok) rep.add_pass("recon.homobj", "representability search finds hom(a,b)");

    // Transported structure along the computed adjunction equals the origin.
    bool j_ok = true, comp_ok = true, tens_ok = true;
    for (int a = 0; a < C.n; ++a) {
        Mor jj = mate_bwd(adj, a, B.unit, identity_mor(und, a));
        if (!(jj == C.j[a])) {
            rep.fail("recon.j", "mate of 1_a reproduces j_a", wit({{"a", a}}));
            j_ok = false;
        }
    }
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int cc = 0; cc < C.n; ++cc) {
                int hab = C.hom[a][b], hbc = C.hom[b][cc];
                Mor chi = compose(und, tensor(und, identity_mor(und, a), adj.mu[hab][hbc]),
                                  compose(und,
                                          tensor(und, counit(adj, a, b),
                                                 identity_mor(und, adj.F_obj[hbc])),
                                          counit(adj, b, cc)));
                Mor back = mate_bwd(adj, a, B.ten(hab, hbc), chi);
                if (!(back == C.comp[a][b][cc])) {
                    rep.fail("recon.comp", "mate of double evaluation reproduces comp",
                             wit({{"a", a}, {"b", b}, {"c", cc}}));
                    comp_ok = false;
                }
            }
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int cc = 0; cc < C.n; ++cc)
                for (int d = 0; d < C.n; ++d) {
                    int hac = C.hom[a][cc], hbd = C.hom[b][d];
                    Mor xi = compose(
                        und,
                        tensor_all(und, {identity_mor(und, a), identity_mor(und, b),
                                         adj.mu[hac][hbd]}),
                        compose(und,
                                tensor_all(und, {identity_mor(und, a), adj.e[b][hac],
                                                 identity_mor(und, adj.F_obj[hbd])}),
                                tensor(und, counit(adj, a, cc), counit(adj, b, d))));
                    Mor back = mate_bwd(adj, C.ten(a, b), B.ten(hac, hbd), xi);
                    if (!(back == C.tens[a][b][cc][d])) {
                        rep.fail("recon.tens", "mate of crossed double evaluation reproduces tens",
                                 wit({{"a", a}, {"b", b}, {"c", cc}, {"d", d}}));
                        tens_ok = false;
                    }
                }
    if (j_ok) rep.add_pass("recon.j", "mate of 1_a reproduces j_a");
    if (comp_ok) rep.add_pass("recon.comp", "mate of double evaluation reproduces comp");
    if (tens_ok) rep.add_pass("recon.tens", "mate of crossed double evaluation reproduces tens");
    return rep;
}

} // namespace modtens
