#include "modtens/mates.hpp"

#include <sstream>
#include <stdexcept>

#include "modtens/rng.hpp"

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

// Underlying element of V(1_V -> hom(x,y)) viewed as a V-morphism.
Mor as_velt(const VMonCat& C, const Mor& g) {
    return Mor{C.base->unit, C.hom[g.src][g.dst], g.coeffs};
}

// The map g |-> (eta_v (x) g);comp : und(a -> x) -> V(v -> hom(1_A, x)),
// with a the candidate representing object. Columns over the basis of
// und(a -> x).
Matrix psi_matrix(const VMonCat& C, const MonCat& und, const Mor& eta, int a, int x) {
    const PresentedBase& B = *C.base;
    int cols = und.hd[a][x];
    int rows = B.dim(eta.src, C.hom[C.unit][x]);
    Matrix m(rows, cols);
    for (int k = 0; k < cols; ++k) {
        Mor g = basis_mor(und, a, x, k);
        Mor img = compose(B, tensor(B, eta, as_velt(C, g)), C.comp[C.unit][a][x]);
        m.set_col(k, img.coeffs);
    }
    return m;
}

bool eta_represents(const VMonCat& C, const MonCat& und, const Mor& eta, int a) {
    for (int x = 0; x < C.n; ++x)
        if (!is_invertible(psi_matrix(C, und, eta, a, x))) return false;
    return true;
}

} // namespace

AdjResult compute_adjoint(VMonCatPtr Cp) {
    const VMonCat& C = *Cp;
    const PresentedBase& B = *C.base;
    TensorAdjunction adj;
    adj.cat = Cp;
    adj.und = underlying(C);
    adj.F_obj.assign(B.n, -1);
    adj.eta.resize(B.n);

    for (int v = 0; v < B.n; ++v) {
        bool found = false;
        for (int a = 0; a < C.n && !found; ++a) {
            bool dims_ok = true;
            for (int x = 0; x < C.n; ++x)
                if (adj.und.hd[a][x] != B.dim(v, C.hom[C.unit][x])) { dims_ok = false; break; }
            if (!dims_ok) continue;
            const int m = B.dim(v, C.hom[C.unit][a]);
            // Schedule: zero, basis vectors, pairwise sums, in lexicographic order.
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
                Mor eta{v, C.hom[C.unit][a], cand};
                if (eta_represents(C, adj.und, eta, a)) {
                    adj.F_obj[v] = a;
                    adj.eta[v] = eta;
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            return NotWeaklyTensored{v, "no representing object for V-object " + std::to_string(v)};
    }

    // F on morphisms: the double-mate transport of postcomposition; F(f) is
    // the unique g with (eta_u (x) g);comp = f;eta_v.
    adj.F_mor.assign(B.n, std::vector<Matrix>(B.n));
    for (int u = 0; u < B.n; ++u)
        for (int v = 0; v < B.n; ++v) {
            int rows = adj.und.hd[adj.F_obj[u]][adj.F_obj[v]];
            int cols = B.dim(u, v);
            Matrix psi = psi_matrix(C, adj.und, adj.eta[u], adj.F_obj[u], adj.F_obj[v]);
            Matrix out(rows, cols);
            for (int k = 0; k < cols; ++k) {
                Mor fk = basis_mor(B, u, v, k);
                Vec target = compose(B, fk, adj.eta[v]).coeffs;
                auto x = solve(psi, target);
                if (!x) throw std::runtime_error("compute_adjoint: F_mor solve failed");
                out.set_col(k, *x);
            }
            adj.F_mor[u][v] = std::move(out);
        }

    // Oplaxitor mu_{u,v} = mate of (eta_u (x) eta_v);tens.
    adj.mu.assign(B.n, std::vector<Mor>(B.n));
    for (int u = 0; u < B.n; ++u)
        for (int v = 0; v < B.n; ++v) {
            Mor arg = compose(B, tensor(B, adj.eta[u], adj.eta[v]),
                              C.tens[C.unit][C.unit][adj.F_obj[u]][adj.F_obj[v]]);
            adj.mu[u][v] = mate_fwd(adj, C.unit, C.ten(adj.F_obj[u], adj.F_obj[v]), arg);
        }
    for (int v = 0; v < B.n; ++v) {
        if (!(adj.mu[B.unit][v] == identity_mor(adj.und, adj.F_obj[v])) ||
            !(adj.mu[v][B.unit] == identity_mor(adj.und, adj.F_obj[v])))
            throw std::runtime_error("compute_adjoint: unit-slot oplaxitor is not an identity; "
                                     "input category is not valid");
    }

    // Half-braidings e_{a,F(v)} = mate of (eta_v (x) j_a);tens.
    adj.e.assign(C.n, std::vector<Mor>(B.n));
    for (int a = 0; a < C.n; ++a)
        for (int v = 0; v < B.n; ++v) {
            Mor arg = compose(B, tensor(B, adj.eta[v], C.j[a]), C.tens[C.unit][a][adj.F_obj[v]][a]);
            adj.e[a][v] = mate_fwd(adj, a, C.ten(adj.F_obj[v], a), arg);
        }

    adj.tensored_flag = true;
    for (int u = 0; u < B.n && adj.tensored_flag; ++u)
        for (int v = 0; v < B.n; ++v)
            if (!is_invertible_mor(adj.und, adj.mu[u][v])) { adj.tensored_flag = false; break; }
    return adj;
}

Mor apply_F(const TensorAdjunction& adj, const Mor& f) {
    return Mor{adj.F_obj[f.src], adj.F_obj[f.dst], adj.F_mor[f.src][f.dst].apply(f.coeffs)};
}

Mor mate_bwd(const TensorAdjunction& adj, int a, int v, const Mor& g) {
    const VMonCat& C = *adj.cat;
    const PresentedBase& B = *C.base;
    int Fv = adj.F_obj[v];
    // v -> hom(1_A, F(v)) -> hom(a, a F(v)) via the whiskering functor a (x) -.
    Mor whisker = compose(B, tensor(B, C.j[a], identity_mor(B, C.hom[C.unit][Fv])),
                          C.tens[a][C.unit][a][Fv]);
    Mor w = compose(B, adj.eta[v], whisker);
    return compose(B, tensor(B, w, as_velt(C, g)), C.comp[a][C.ten(a, Fv)][g.dst]);
}

Mor counit(const TensorAdjunction& adj, int a, int b) {
    const VMonCat& C = *adj.cat;
    const PresentedBase& B = *C.base;
    int h = C.hom[a][b];
    int src = C.ten(a, adj.F_obj[h]);
    int cols = adj.und.hd[src][b];
    Matrix m(B.dim(h, h), cols);
    for (int k = 0; k < cols; ++k)
        m.set_col(k, mate_bwd(adj, a, h, basis_mor(adj.und, src, b, k)).coeffs);
    auto x = solve(m, identity_mor(B, h).coeffs);
    if (!x) throw std::runtime_error("counit: backward mate is not surjective onto the identity; "
                                     "input category is not weakly tensored at a=" + std::to_string(a));
    return Mor{src, b, *x};
}

Mor mate_fwd(const TensorAdjunction& adj, int a, int b, const Mor& f) {
    const VMonCat& C = *adj.cat;
    if (f.dst != C.hom[a][b]) throw std::invalid_argument("mate_fwd: f does not land in hom(a,b)");
    Mor Ff = apply_F(adj, f);
    Mor lifted = tensor(adj.und, identity_mor(adj.und, a), Ff);
    return compose(adj.und, lifted, counit(adj, a, b));
}

const Mor& oplaxitor(const TensorAdjunction& adj, int u, int v) { return adj.mu[u][v]; }
const Mor& half_braiding(const TensorAdjunction& adj, int a, int v) { return adj.e[a][v]; }

ValidationReport check_centrality(const TensorAdjunction& adj, const Mor& f) {
    ValidationReport rep;
    const MonCat& und = adj.und;
    Mor Ff = apply_F(adj, f);
    bool all = true;
    for (int a = 0; a < adj.cat->n; ++a) {
        Mor lhs = compose(und, tensor(und, identity_mor(und, a), Ff), adj.e[a][f.dst]);
        Mor rhs = compose(und, adj.e[a][f.src], tensor(und, Ff, identity_mor(und, a)));
        if (!(lhs == rhs)) {
            rep.fail("centrality", "(1_a (x) F(f));e = e;(F(f) (x) 1_a)",
                     wit({{"a", a}, {"u", f.src}, {"v", f.dst}}));
            all = false;
        }
    }
    if (all) rep.add_pass("centrality", "(1_a (x) F(f));e = e;(F(f) (x) 1_a)");
    return rep;
}

ValidationReport verify_mate_lemmas(const TensorAdjunction& adj, std::uint64_t seed, int trials) {
    ValidationReport rep;
    const VMonCat& C = *adj.cat;
    const PresentedBase& B = *C.base;
    const MonCat& und = adj.und;
    Rng rng(seed);

    if (trials <= 0) {
        for (const char* id : {"lemma.comp_post", "lemma.comp_pre", "lemma.fgcirc",
                               "lemma.fgtens", "lemma.Faf"})
            rep.add_pass(id, "mate lemma", "vacuous: trials=0");
        return rep;
    }

    // Composition lemma, mate(f1;f2) = mate(f1);R(f2).
    bool ok = true;
    for (int a = 0; a < C.n; ++a)
        for (int v = 0; v < B.n; ++v)
            for (int b = 0; b < C.n; ++b)
                for (int c = 0; c < C.n; ++c)
                    for (int t = 0; t < trials; ++t) {
                        Mor f1 = rng.mor(und, C.ten(a, adj.F_obj[v]), b);
                        Mor f2 = rng.mor(und, b, c);
                        Mor lhs = mate_bwd(adj, a, v, compose(und, f1, f2));
                        Mor post = compose(B, tensor(B, identity_mor(B, C.hom[a][b]), as_velt(C, f2)),
                                           C.comp[a][b][c]);
                        Mor rhs = compose(B, mate_bwd(adj, a, v, f1), post);
                        if (!(lhs == rhs)) {
                            rep.fail("lemma.comp_post", "mate(f1;f2) = mate(f1);R(f2)",
                                     wit({{"a", a}, {"v", v}, {"b", b}, {"c", c}, {"trial", t}}));
                            ok = false;
                        }
                    }
    if (ok) rep.add_pass("lemma.comp_post", "mate(f1;f2) = mate(f1);R(f2)");

    // Composition lemma, mate(g1;g2) = L(g1);mate(g2).
    ok = true;
    for (int x = 0; x < B.n; ++x)
        for (int y = 0; y < B.n; ++y)
            for (int a = 0; a < C.n; ++a)
                for (int b = 0; b < C.n; ++b)
                    for (int t = 0; t < trials; ++t) {
                        Mor g1 = rng.mor(B, x, y);
                        Mor g2 = rng.mor(B, y, C.hom[a][b]);
                        Mor lhs = mate_fwd(adj, a, b, compose(B, g1, g2));
                        Mor rhs = compose(und, tensor(und, identity_mor(und, a), apply_F(adj, g1)),
                                          mate_fwd(adj, a, b, g2));
                        if (!(lhs == rhs)) {
                            rep.fail("lemma.comp_pre", "mate(g1;g2) = L(g1);mate(g2)",
                                     wit({{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"trial", t}}));
                            ok = false;
                        }
                    }
    if (ok) rep.add_pass("lemma.comp_pre", "mate(g1;g2) = L(g1);mate(g2)");

    // mate((f (x) g);comp) through the oplaxitor.
    ok = true;
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int c = 0; c < C.n; ++c)
                for (int u = 0; u < B.n; ++u)
                    for (int v = 0; v < B.n; ++v)
                        for (int t = 0; t < trials; ++t) {
                            Mor f = rng.mor(B, u, C.hom[a][b]);
                            Mor g = rng.mor(B, v, C.hom[b][c]);
                            Mor lhs = mate_fwd(adj, a, c,
                                               compose(B, tensor(B, f, g), C.comp[a][b][c]));
                            Mor rhs = compose(und, tensor(und, identity_mor(und, a), adj.mu[u][v]),
                                              compose(und,
                                                      tensor(und, mate_fwd(adj, a, b, f),
                                                             identity_mor(und, adj.F_obj[v])),
                                                      mate_fwd(adj, b, c, g)));
                            if (!(lhs == rhs)) {
                                rep.fail("lemma.fgcirc", "mate((f (x) g);comp) = (1 (x) mu);(mate f (x) 1);mate g",
                                         wit({{"a", a}, {"b", b}, {"c", c}, {"u", u}, {"v", v}, {"trial", t}}));
                                ok = false;
                            }
                        }
    if (ok) rep.add_pass("lemma.fgcirc", "mate((f (x) g);comp) = (1 (x) mu);(mate f (x) 1);mate g");

    // mate((f (x) g);tens) through mu and the half-braiding.
    ok = true;
    for (int a = 0; a < C.n; ++a)
        for (int b = 0; b < C.n; ++b)
            for (int c = 0; c < C.n; ++c)
                for (int d = 0; d < C.n; ++d)
                    for (int u = 0; u < B.n; ++u)
                        for (int v = 0; v < B.n; ++v)
                            for (int t = 0; t < trials; ++t) {
                                Mor f = rng.mor(B, u, C.hom[a][c]);
                                Mor g = rng.mor(B, v, C.hom[b][d]);
                                Mor lhs = mate_fwd(adj, C.ten(a, b), C.ten(c, d),
                                                   compose(B, tensor(B, f, g), C.tens[a][b][c][d]));
                                Mor step1 = tensor_all(und, {identity_mor(und, a), identity_mor(und, b),
                                                             adj.mu[u][v]});
                                Mor step2 = tensor_all(und, {identity_mor(und, a), adj.e[b][u],
                                                             identity_mor(und, adj.F_obj[v])});
                                Mor step3 = tensor(und, mate_fwd(adj, a, c, f), mate_fwd(adj, b, d, g));
                                Mor rhs = compose(und, step1, compose(und, step2, step3));
                                if (!(lhs == rhs)) {
                                    rep.fail("lemma.fgtens",
                                             "mate((f (x) g);tens) = (1 (x) mu);(1 (x) e (x) 1);(mate f (x) mate g)",
                                             wit({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"u", u}, {"v", v}, {"trial", t}}));
                                    ok = false;
                                }
                            }
    if (ok) rep.add_pass("lemma.fgtens",
                         "mate((f (x) g);tens) = (1 (x) mu);(1 (x) e (x) 1);(mate f (x) mate g)");

    // Mates of F(f): (eta_u (x) F(f));comp = f;eta_v.
    ok = true;
    for (int u = 0; u < B.n; ++u)
        for (int v = 0; v < B.n; ++v)
            for (int t = 0; t < trials; ++t) {
                Mor f = rng.mor(B, u, v);
                Mor lhs = compose(B, tensor(B, adj.eta[u], as_velt(C, apply_F(adj, f))),
                                  C.comp[C.unit][adj.F_obj[u]][adj.F_obj[v]]);
                Mor rhs = compose(B, f, adj.eta[v]);
                if (!(lhs == rhs)) {
                    rep.fail("lemma.Faf", "(eta_u (x) F(f));comp = f;eta_v",
                             wit({{"u", u}, {"v", v}, {"trial", t}}));
                    ok = false;
                }
            }
    if (ok) rep.add_pass("lemma.Faf", "(eta_u (x) F(f));comp = f;eta_v");

    return rep;
}

} // namespace modtens
