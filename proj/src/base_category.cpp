#include "modtens/base_category.hpp"

#include <sstream>
#include <stdexcept>

namespace modtens {

Vec Bilinear::apply(const Vec& l, const Vec& r) const {
    if (static_cast<int>(l.size()) != dl || static_cast<int>(r.size()) != dr)
        throw std::invalid_argument("Bilinear::apply: dimension mismatch");
    Vec out(dout);
    for (int p = 0; p < dl; ++p) {
        if (l[p].is_zero()) continue;
        for (int q = 0; q < dr; ++q) {
            if (r[q].is_zero()) continue;
            Rational pq = l[p] * r[q];
            for (int k = 0; k < dout; ++k) {
                const Rational& c = at(p, q, k);
                if (!c.is_zero()) out[k] += pq * c;
            }
        }
    }
    return out;
}

Mor identity_mor(const MonCat& C, int obj) { return Mor{obj, obj, C.id[obj]}; }

Mor zero_mor(const MonCat& C, int src, int dst) {
    return Mor{src, dst, Vec(static_cast<std::size_t>(C.dim(src, dst)))};
}

Mor basis_mor(const MonCat& C, int src, int dst, int k) {
    Mor m = zero_mor(C, src, dst);
    m.coeffs.at(k) = Rational(1);
    return m;
}

Mor scale(const Rational& s, Mor f) {
    for (auto& c : f.coeffs) c *= s;
    return f;
}

Mor add(const Mor& f, const Mor& g) {
    if (f.src != g.src || f.dst != g.dst)
        throw std::invalid_argument("add: endpoint mismatch");
    Mor out = f;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += g.coeffs[i];
    return out;
}

Mor compose(const MonCat& C, const Mor& f, const Mor& g) {
    if (f.dst != g.src)
        throw std::invalid_argument("compose: object mismatch (" + std::to_string(f.dst) +
                                    " vs " + std::to_string(g.src) + ")");
    const Bilinear& sc = C.comp[f.src][f.dst][g.dst];
    return Mor{f.src, g.dst, sc.apply(f.coeffs, g.coeffs)};
}

Mor tensor(const MonCat& C, const Mor& f, const Mor& g) {
    const Bilinear& sc = C.tens[f.src][f.dst][g.src][g.dst];
    return Mor{C.ten(f.src, g.src), C.ten(f.dst, g.dst), sc.apply(f.coeffs, g.coeffs)};
}

Mor tensor_all(const MonCat& C, const std::vector<Mor>& fs) {
    if (fs.empty()) return identity_mor(C, C.unit);
    Mor acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = tensor(C, acc, fs[i]);
    return acc;
}

std::optional<Mor> invert(const MonCat& C, const Mor& f) {
    // Solve f;s = id_src and s;f = id_dst for s as one stacked linear system.
    const int ds = C.dim(f.dst, f.src);
    const int rows_l = C.dim(f.src, f.src), rows_r = C.dim(f.dst, f.dst);
    Matrix A(rows_l + rows_r, ds);
    for (int k = 0; k < ds; ++k) {
        Mor ek = basis_mor(C, f.dst, f.src, k);
        Vec l = compose(C, f, ek).coeffs;
        Vec r = compose(C, ek, f).coeffs;
        for (int i = 0; i < rows_l; ++i) A.at(i, k) = l[i];
        for (int i = 0; i < rows_r; ++i) A.at(rows_l + i, k) = r[i];
    }
    Vec b(rows_l + rows_r);
    for (int i = 0; i < rows_l; ++i) b[i] = C.id[f.src][i];
    for (int i = 0; i < rows_r; ++i) b[rows_l + i] = C.id[f.dst][i];
    auto x = solve(A, b);
    if (!x) return std::nullopt;
    return Mor{f.dst, f.src, *x};
}

bool is_invertible_mor(const MonCat& C, const Mor& f) { return invert(C, f).has_value(); }

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

bool moncat_struct(const MonCat& C, const std::string& pre, ValidationReport& rep) {
    bool ok = true;
    auto bad = [&](const std::string& w) {
        rep.fail(pre + "struct", "well-formed presentation", w);
        ok = false;
    };
    if (C.n <= 0) { bad("no objects"); return false; }
    if (C.unit < 0 || C.unit >= C.n) { bad("unit out of range"); return false; }
    if (static_cast<int>(C.tt.size()) != C.n || static_cast<int>(C.hd.size()) != C.n ||
        static_cast<int>(C.id.size()) != C.n || static_cast<int>(C.comp.size()) != C.n ||
        static_cast<int>(C.tens.size()) != C.n) {
        bad("table size mismatch");
        return false;
    }
    for (int i = 0; i < C.n; ++i) {
        if (static_cast<int>(C.tt[i].size()) != C.n || static_cast<int>(C.hd[i].size()) != C.n) {
            bad(wit({{"i", i}}) + ":row size");
            return false;
        }
        for (int j = 0; j < C.n; ++j) {
            if (C.tt[i][j] < 0 || C.tt[i][j] >= C.n) bad(wit({{"i", i}, {"j", j}}) + ":tensor_table out of range");
            if (C.hd[i][j] < 0) bad(wit({{"i", i}, {"j", j}}) + ":negative hom dim");
        }
        if (static_cast<int>(C.id[i].size()) != C.hd[i][i])
            bad(wit({{"i", i}}) + ":identity length");
    }
    if (!ok) return false;
    for (int i = 0; i < C.n && ok; ++i)
        for (int j = 0; j < C.n && ok; ++j) {
            if (static_cast<int>(C.comp[i].size()) != C.n || static_cast<int>(C.comp[i][j].size()) != C.n ||
                static_cast<int>(C.tens[i].size()) != C.n || static_cast<int>(C.tens[i][j].size()) != C.n) {
                bad("structure constant table size");
                break;
            }
            for (int k = 0; k < C.n; ++k) {
                const Bilinear& c = C.comp[i][j][k];
                if (c.dl != C.hd[i][j] || c.dr != C.hd[j][k] || c.dout != C.hd[i][k] ||
                    static_cast<int>(c.c.size()) != c.dl * c.dr * c.dout)
                    bad(wit({{"i", i}, {"j", j}, {"k", k}}) + ":compose dims");
                if (static_cast<int>(C.tens[i][j][k].size()) != C.n) { bad("tens table size"); break; }
                for (int l = 0; l < C.n; ++l) {
                    const Bilinear& t = C.tens[i][j][k][l];
                    if (t.dl != C.hd[i][j] || t.dr != C.hd[k][l] ||
                        t.dout != C.hd[C.tt[i][k]][C.tt[j][l]] ||
                        static_cast<int>(t.c.size()) != t.dl * t.dr * t.dout)
                        bad(wit({{"i", i}, {"j", j}, {"k", k}, {"l", l}}) + ":tensor dims");
                }
            }
        }
    if (C.zero) {
        int z = *C.zero;
        if (z < 0 || z >= C.n) bad("zero object out of range");
        else
            for (int i = 0; i < C.n; ++i)
                if (C.hd[z][i] != 0 || C.hd[i][z] != 0)
                    bad(wit({{"i", i}}) + ":zero object has nonzero hom");
    }
    if (ok) rep.add_pass(pre + "struct", "well-formed presentation");
    return ok;
}

} // namespace

ValidationReport validate_moncat(const MonCat& C, const std::string& pre) {
    ValidationReport rep;
    if (!moncat_struct(C, pre, rep)) return rep;

    {
        bool all = true;
        for (int i = 0; i < C.n; ++i) {
            if (C.ten(C.unit, i) != i) { rep.fail(pre + "tensor_table.unit", "1(x)a = a = a(x)1", wit({{"i", i}}) + ":left"); all = false; }
            if (C.ten(i, C.unit) != i) { rep.fail(pre + "tensor_table.unit", "1(x)a = a = a(x)1", wit({{"i", i}}) + ":right"); all = false; }
        }
        if (all) rep.add_pass(pre + "tensor_table.unit", "1(x)a = a = a(x)1");
    }
    {
        bool all = true;
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j)
                for (int k = 0; k < C.n; ++k)
                    if (C.ten(C.ten(i, j), k) != C.ten(i, C.ten(j, k))) {
                        rep.fail(pre + "tensor_table.assoc", "(ab)c = a(bc)", wit({{"i", i}, {"j", j}, {"k", k}}));
                        all = false;
                    }
        if (all) rep.add_pass(pre + "tensor_table.assoc", "(ab)c = a(bc)");
    }
    {
        bool all = true;
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j)
                for (int p = 0; p < C.dim(i, j); ++p) {
                    Mor f = basis_mor(C, i, j, p);
                    if (!(compose(C, identity_mor(C, i), f) == f)) {
                        rep.fail(pre + "comp.unit", "id;f = f = f;id", wit({{"i", i}, {"j", j}, {"p", p}}) + ":left");
                        all = false;
                    }
                    if (!(compose(C, f, identity_mor(C, j)) == f)) {
                        rep.fail(pre + "comp.unit", "id;f = f = f;id", wit({{"i", i}, {"j", j}, {"p", p}}) + ":right");
                        all = false;
                    }
                }
        if (all) rep.add_pass(pre + "comp.unit", "id;f = f = f;id");
    }
    {
        bool all = true;
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j)
                for (int k = 0; k < C.n; ++k)
                    for (int l = 0; l < C.n; ++l)
                        for (int p = 0; p < C.dim(i, j); ++p)
                            for (int q = 0; q < C.dim(j, k); ++q)
                                for (int r = 0; r < C.dim(k, l); ++r) {
                                    Mor f = basis_mor(C, i, j, p), g = basis_mor(C, j, k, q), h = basis_mor(C, k, l, r);
                                    if (!(compose(C, compose(C, f, g), h) == compose(C, f, compose(C, g, h)))) {
                                        rep.fail(pre + "comp.assoc", "(f;g);h = f;(g;h)",
                                                 wit({{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"p", p}, {"q", q}, {"r", r}}));
                                        all = false;
                                    }
                                }
        if (all) rep.add_pass(pre + "comp.assoc", "(f;g);h = f;(g;h)");
    }
    {
        bool all = true;
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j)
                if (!(tensor(C, identity_mor(C, i), identity_mor(C, j)) == identity_mor(C, C.ten(i, j)))) {
                    rep.fail(pre + "tens.id", "id(x)id = id", wit({{"i", i}, {"j", j}}));
                    all = false;
                }
        if (all) rep.add_pass(pre + "tens.id", "id(x)id = id");
    }
    {
        // Interchange: (f(x)g);(f'(x)g') = (f;f')(x)(g;g') on all basis tuples.
        bool all = true;
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j)
                for (int k = 0; k < C.n; ++k)
                    for (int l = 0; l < C.n; ++l)
                        for (int m = 0; m < C.n; ++m)
                            for (int o = 0; o < C.n; ++o)
                                for (int p = 0; p < C.dim(i, j); ++p)
                                    for (int p2 = 0; p2 < C.dim(j, k); ++p2)
                                        for (int q = 0; q < C.dim(l, m); ++q)
                                            for (int q2 = 0; q2 < C.dim(m, o); ++q2) {
                                                Mor f = basis_mor(C, i, j, p), fp = basis_mor(C, j, k, p2);
                                                Mor g = basis_mor(C, l, m, q), gp = basis_mor(C, m, o, q2);
                                                Mor lhs = compose(C, tensor(C, f, g), tensor(C, fp, gp));
                                                Mor rhs = tensor(C, compose(C, f, fp), compose(C, g, gp));
                                                if (!(lhs == rhs)) {
                                                    rep.fail(pre + "tens.functorial", "(f(x)g);(f'(x)g') = (f;f')(x)(g;g')",
                                                             wit({{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"m", m}, {"o", o},
                                                                  {"p", p}, {"p2", p2}, {"q", q}, {"q2", q2}}));
                                                    all = false;
                                                }
                                            }
        if (all) rep.add_pass(pre + "tens.functorial", "(f(x)g);(f'(x)g') = (f;f')(x)(g;g')");
    }
    {
        bool all = true;
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j)
                for (int p = 0; p < C.dim(i, j); ++p) {
                    Mor f = basis_mor(C, i, j, p);
                    Mor u = identity_mor(C, C.unit);
                    if (!(tensor(C, f, u) == f) || !(tensor(C, u, f) == f)) {
                        rep.fail(pre + "tens.unit_mor", "f(x)id_1 = f = id_1(x)f", wit({{"i", i}, {"j", j}, {"p", p}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass(pre + "tens.unit_mor", "f(x)id_1 = f = id_1(x)f");
    }
    {
        bool all = true;
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j)
                for (int k = 0; k < C.n; ++k)
                    for (int l = 0; l < C.n; ++l)
                        for (int m = 0; m < C.n; ++m)
                            for (int o = 0; o < C.n; ++o)
                                for (int p = 0; p < C.dim(i, j); ++p)
                                    for (int q = 0; q < C.dim(k, l); ++q)
                                        for (int r = 0; r < C.dim(m, o); ++r) {
                                            Mor f = basis_mor(C, i, j, p), g = basis_mor(C, k, l, q), h = basis_mor(C, m, o, r);
                                            if (!(tensor(C, tensor(C, f, g), h) == tensor(C, f, tensor(C, g, h)))) {
                                                rep.fail(pre + "tens.assoc_mor", "(f(x)g)(x)h = f(x)(g(x)h)",
                                                         wit({{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"m", m}, {"o", o},
                                                              {"p", p}, {"q", q}, {"r", r}}));
                                                all = false;
                                            }
                                        }
        if (all) rep.add_pass(pre + "tens.assoc_mor", "(f(x)g)(x)h = f(x)(g(x)h)");
    }
    return rep;
}

const Mor& braid(const PresentedBase& B, int u, int v) { return B.braiding[u][v]; }

Mor compose_v(const PresentedBase& B, const Mor& f, const Mor& g) { return compose(B, f, g); }
Mor tensor_v(const PresentedBase& B, const Mor& f, const Mor& g) { return tensor(B, f, g); }

int internal_hom(const PresentedBase& B, int u, int v) {
    if (!B.duality) throw std::invalid_argument("internal_hom: duality data missing");
    return B.ten(B.duality->dual[u], v);
}

Mor ev_right(const PresentedBase& B, int u) {
    if (!B.duality) throw std::invalid_argument("ev_right: duality data missing");
    return compose(B, braid(B, u, B.duality->dual[u]), B.duality->ev[u]);
}

Mor coev_right(const PresentedBase& B, int u) {
    if (!B.duality) throw std::invalid_argument("coev_right: duality data missing");
    return compose(B, B.duality->coev[u], braid(B, u, B.duality->dual[u]));
}

Mor mate_ih(const PresentedBase& B, int u, int w, const Mor& f) {
    // f : u(x)w -> v becomes (coev'_u (x) 1_w);(1_{u*} (x) f) : w -> u* v.
    if (!B.duality) throw std::invalid_argument("mate_ih: duality data missing");
    if (f.src != B.ten(u, w)) throw std::invalid_argument("mate_ih: source is not u(x)w");
    int us = B.duality->dual[u];
    Mor step1 = tensor(B, coev_right(B, u), identity_mor(B, w)); // w -> (u* u) w
    Mor step2 = tensor(B, identity_mor(B, us), f);               // u*(u w) -> u* v
    return compose(B, step1, step2);
}

Mor unmate_ih(const PresentedBase& B, int u, int v, const Mor& g) {
    // g : w -> u* v becomes (1_u (x) g);(ev'_u (x) 1_v) : u(x)w -> v.
    if (!B.duality) throw std::invalid_argument("unmate_ih: duality data missing");
    if (g.dst != B.ten(B.duality->dual[u], v))
        throw std::invalid_argument("unmate_ih: target is not u* (x) v");
    Mor step1 = tensor(B, identity_mor(B, u), g);                // u w -> u (u* v)
    Mor step2 = tensor(B, ev_right(B, u), identity_mor(B, v));   // (u u*) v -> v
    return compose(B, step1, step2);
}

ValidationReport validate_base(const PresentedBase& B) {
    ValidationReport rep = validate_moncat(B, "base.");
    if (!rep.ok() && rep.failed("base.struct")) return rep;

    // Braiding structural typing.
    bool braid_ok = true;
    if (static_cast<int>(B.braiding.size()) != B.n) braid_ok = false;
    for (int i = 0; braid_ok && i < B.n; ++i) {
        if (static_cast<int>(B.braiding[i].size()) != B.n) { braid_ok = false; break; }
        for (int j = 0; j < B.n; ++j) {
            const Mor& b = B.braiding[i][j];
            if (b.src != B.ten(i, j) || b.dst != B.ten(j, i) ||
                static_cast<int>(b.coeffs.size()) != B.dim(b.src, b.dst)) {
                rep.fail("base.struct", "well-formed presentation", wit({{"i", i}, {"j", j}}) + ":braiding typing");
                braid_ok = false;
            }
        }
    }
    if (!braid_ok) return rep;

    {
        bool all = true;
        for (int i = 0; i < B.n; ++i)
            for (int j = 0; j < B.n; ++j)
                if (!is_invertible_mor(B, B.braiding[i][j])) {
                    rep.fail("base.braid.invertible", "beta invertible", wit({{"i", i}, {"j", j}}));
                    all = false;
                }
        if (all) rep.add_pass("base.braid.invertible", "beta invertible");
    }
    {
        bool all = true;
        for (int u = 0; u < B.n; ++u)
            for (int u2 = 0; u2 < B.n; ++u2)
                for (int v = 0; v < B.n; ++v)
                    for (int v2 = 0; v2 < B.n; ++v2)
                        for (int p = 0; p < B.dim(u, u2); ++p)
                            for (int q = 0; q < B.dim(v, v2); ++q) {
                                Mor f = basis_mor(B, u, u2, p), g = basis_mor(B, v, v2, q);
                                Mor lhs = compose(B, tensor(B, f, g), braid(B, u2, v2));
                                Mor rhs = compose(B, braid(B, u, v), tensor(B, g, f));
                                if (!(lhs == rhs)) {
                                    rep.fail("base.braid.natural", "(f(x)g);beta = beta;(g(x)f)",
                                             wit({{"u", u}, {"u2", u2}, {"v", v}, {"v2", v2}, {"p", p}, {"q", q}}));
                                    all = false;
                                }
                            }
        if (all) rep.add_pass("base.braid.natural", "(f(x)g);beta = beta;(g(x)f)");
    }
    {
        bool all1 = true, all2 = true;
        for (int u = 0; u < B.n; ++u)
            for (int v = 0; v < B.n; ++v)
                for (int w = 0; w < B.n; ++w) {
                    Mor lhs1 = braid(B, u, B.ten(v, w));
                    Mor rhs1 = compose(B, tensor(B, braid(B, u, v), identity_mor(B, w)),
                                       tensor(B, identity_mor(B, v), braid(B, u, w)));
                    if (!(lhs1 == rhs1)) {
                        rep.fail("base.braid.hexagon1", "beta_{u,vw} = (beta_{u,v}(x)1);(1(x)beta_{u,w})",
                                 wit({{"u", u}, {"v", v}, {"w", w}}));
                        all1 = false;
                    }
                    Mor lhs2 = braid(B, B.ten(u, v), w);
                    Mor rhs2 = compose(B, tensor(B, identity_mor(B, u), braid(B, v, w)),
                                       tensor(B, braid(B, u, w), identity_mor(B, v)));
                    if (!(lhs2 == rhs2)) {
                        rep.fail("base.braid.hexagon2", "beta_{uv,w} = (1(x)beta_{v,w});(beta_{u,w}(x)1)",
                                 wit({{"u", u}, {"v", v}, {"w", w}}));
                        all2 = false;
                    }
                }
        if (all1) rep.add_pass("base.braid.hexagon1", "beta_{u,vw} = (beta_{u,v}(x)1);(1(x)beta_{u,w})");
        if (all2) rep.add_pass("base.braid.hexagon2", "beta_{uv,w} = (1(x)beta_{v,w});(beta_{u,w}(x)1)");
    }

    if (B.duality) {
        const Duality& D = *B.duality;
        bool struct_ok = static_cast<int>(D.dual.size()) == B.n &&
                         static_cast<int>(D.ev.size()) == B.n &&
                         static_cast<int>(D.coev.size()) == B.n;
        for (int i = 0; struct_ok && i < B.n; ++i) {
            if (D.dual[i] < 0 || D.dual[i] >= B.n) { struct_ok = false; break; }
            int is = D.dual[i];
            if (D.ev[i].src != B.ten(is, i) || D.ev[i].dst != B.unit ||
                D.coev[i].src != B.unit || D.coev[i].dst != B.ten(i, is))
                struct_ok = false;
        }
        if (!struct_ok) {
            rep.fail("base.struct", "well-formed presentation", "duality typing");
            return rep;
        }
        bool zl = true, zr = true;
        for (int i = 0; i < B.n; ++i) {
            int is = D.dual[i];
            Mor left = compose(B, tensor(B, D.coev[i], identity_mor(B, i)),
                               tensor(B, identity_mor(B, i), D.ev[i]));
            if (!(left == identity_mor(B, i))) {
                rep.fail("base.dual.zigzag_left", "(coev(x)1);(1(x)ev) = id", wit({{"i", i}}));
                zl = false;
            }
            Mor right = compose(B, tensor(B, identity_mor(B, is), D.coev[i]),
                                tensor(B, D.ev[i], identity_mor(B, is)));
            if (!(right == identity_mor(B, is))) {
                rep.fail("base.dual.zigzag_right", "(1(x)coev);(ev(x)1) = id", wit({{"i", i}}));
                zr = false;
            }
        }
        if (zl) rep.add_pass("base.dual.zigzag_left", "(coev(x)1);(1(x)ev) = id");
        if (zr) rep.add_pass("base.dual.zigzag_right", "(1(x)coev);(ev(x)1) = id");
    }
    return rep;
}

} // namespace modtens
