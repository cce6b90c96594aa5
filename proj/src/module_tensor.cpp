#include "modtens/module_tensor.hpp"

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

bool modtens_struct(const ModTensCat& M, ValidationReport& rep) {
    const PresentedBase& B = *M.base;
    const MonCat& A = M.A;
    bool ok = static_cast<int>(M.F_obj.size()) == B.n && static_cast<int>(M.F_mor.size()) == B.n &&
              static_cast<int>(M.mu.size()) == B.n && static_cast<int>(M.e.size()) == A.n;
    for (int v = 0; ok && v < B.n; ++v) {
        if (M.F_obj[v] < 0 || M.F_obj[v] >= A.n) { ok = false; break; }
        ok = static_cast<int>(M.F_mor[v].size()) == B.n && static_cast<int>(M.mu[v].size()) == B.n;
    }
    for (int u = 0; ok && u < B.n; ++u)
        for (int v = 0; ok && v < B.n; ++v) {
            const Matrix& m = M.F_mor[u][v];
            if (m.rows() != A.hd[M.F_obj[u]][M.F_obj[v]] || m.cols() != B.dim(u, v)) ok = false;
            const Mor& mu = M.mu[u][v];
            if (mu.src != M.F_obj[B.ten(u, v)] || mu.dst != A.tt[M.F_obj[u]][M.F_obj[v]] ||
                static_cast<int>(mu.coeffs.size()) != A.hd[mu.src][mu.dst]) ok = false;
        }
    for (int a = 0; ok && a < A.n; ++a) {
        ok = static_cast<int>(M.e[a].size()) == B.n;
        for (int v = 0; ok && v < B.n; ++v) {
            const Mor& ea = M.e[a][v];
            if (ea.src != A.tt[a][M.F_obj[v]] || ea.dst != A.tt[M.F_obj[v]][a] ||
                static_cast<int>(ea.coeffs.size()) != A.hd[ea.src][ea.dst]) ok = false;
        }
    }
    if (ok) rep.add_pass("mt0.struct", "well-formed module tensor data");
    else rep.fail("mt0.struct", "well-formed module tensor data", "typing");
    return ok;
}

} // namespace

ValidationReport validate_modtens_0cell(const ModTensCat& M) {
    ValidationReport rep = validate_moncat(M.A, "mt0.A.");
    if (!rep.ok()) return rep;
    if (!modtens_struct(M, rep)) return rep;
    const PresentedBase& B = *M.base;
    const MonCat& A = M.A;

    {
        bool all = M.F_obj[B.unit] == A.unit;
        if (!all) rep.fail("mt0.F.unit", "F(1_V) = 1_A", "unit");
        else rep.add_pass("mt0.F.unit", "F(1_V) = 1_A");
    }
    {
        bool all = true;
        for (int v = 0; v < B.n; ++v) {
            Mor ff = M.F_of(identity_mor(B, v));
            if (!(ff == identity_mor(A, M.F_obj[v]))) {
                rep.fail("mt0.F.functorial", "F(id) = id, F(f;g) = F(f);F(g)", wit({{"v", v}}) + ":id");
                all = false;
            }
        }
        for (int u = 0; u < B.n; ++u)
            for (int v = 0; v < B.n; ++v)
                for (int w = 0; w < B.n; ++w)
                    for (int p = 0; p < B.dim(u, v); ++p)
                        for (int q = 0; q < B.dim(v, w); ++q) {
                            Mor f = basis_mor(B, u, v, p), g = basis_mor(B, v, w, q);
                            Mor lhs = M.F_of(compose(B, f, g));
                            Mor rhs = compose(A, M.F_of(f), M.F_of(g));
                            if (!(lhs == rhs)) {
                                rep.fail("mt0.F.functorial", "F(id) = id, F(f;g) = F(f);F(g)",
                                         wit({{"u", u}, {"v", v}, {"w", w}, {"p", p}, {"q", q}}));
                                all = false;
                            }
                        }
        if (all) rep.add_pass("mt0.F.functorial", "F(id) = id, F(f;g) = F(f);F(g)");
    }
    {
        bool all = true;
        for (int v = 0; v < B.n; ++v)
            if (!(M.mu[B.unit][v] == identity_mor(A, M.F_obj[v])) ||
                !(M.mu[v][B.unit] == identity_mor(A, M.F_obj[v]))) {
                rep.fail("mt0.mu.unit", "mu_{1,v} = id = mu_{v,1}", wit({{"v", v}}));
                all = false;
            }
        if (all) rep.add_pass("mt0.mu.unit", "mu_{1,v} = id = mu_{v,1}");
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
                                Mor lhs = compose(A, M.F_of(tensor(B, f, g)), M.mu[u2][v2]);
                                Mor rhs = compose(A, M.mu[u][v], tensor(A, M.F_of(f), M.F_of(g)));
                                if (!(lhs == rhs)) {
                                    rep.fail("mt0.mu.natural", "F(f(x)g);mu = mu;(F(f)(x)F(g))",
                                             wit({{"u", u}, {"u2", u2}, {"v", v}, {"v2", v2}, {"p", p}, {"q", q}}));
                                    all = false;
                                }
                            }
        if (all) rep.add_pass("mt0.mu.natural", "F(f(x)g);mu = mu;(F(f)(x)F(g))");
    }
    {
        bool all = true;
        for (int u = 0; u < B.n; ++u)
            for (int v = 0; v < B.n; ++v)
                for (int w = 0; w < B.n; ++w) {
                    Mor lhs = compose(A, M.mu[B.ten(u, v)][w],
                                      tensor(A, M.mu[u][v], identity_mor(A, M.F_obj[w])));
                    Mor rhs = compose(A, M.mu[u][B.ten(v, w)],
                                      tensor(A, identity_mor(A, M.F_obj[u]), M.mu[v][w]));
                    if (!(lhs == rhs)) {
                        rep.fail("mt0.mu.coassoc", "mu_{uv,w};(mu(x)1) = mu_{u,vw};(1(x)mu)",
                                 wit({{"u", u}, {"v", v}, {"w", w}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass("mt0.mu.coassoc", "mu_{uv,w};(mu(x)1) = mu_{u,vw};(1(x)mu)");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int v = 0; v < B.n; ++v)
                if (!is_invertible_mor(A, M.e[a][v])) {
                    rep.fail("mt0.e.invertible", "e invertible", wit({{"a", a}, {"v", v}}));
                    all = false;
                }
        if (all) rep.add_pass("mt0.e.invertible", "e invertible");
    }
    {
        bool all = true;
        for (int v = 0; v < B.n; ++v)
            if (!(M.e[A.unit][v] == identity_mor(A, M.F_obj[v]))) {
                rep.fail("mt0.e.unit", "e_{1_A,F(v)} = id and e_{a,F(1)} = id", wit({{"v", v}}) + ":a=1");
                all = false;
            }
        for (int a = 0; a < A.n; ++a)
            if (!(M.e[a][B.unit] == identity_mor(A, a))) {
                rep.fail("mt0.e.unit", "e_{1_A,F(v)} = id and e_{a,F(1)} = id", wit({{"a", a}}) + ":v=1");
                all = false;
            }
        if (all) rep.add_pass("mt0.e.unit", "e_{1_A,F(v)} = id and e_{a,F(1)} = id");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                for (int v = 0; v < B.n; ++v)
                    for (int p = 0; p < A.hd[a][b]; ++p) {
                        Mor h = basis_mor(A, a, b, p);
                        Mor lhs = compose(A, tensor(A, h, identity_mor(A, M.F_obj[v])), M.e[b][v]);
                        Mor rhs = compose(A, M.e[a][v], tensor(A, identity_mor(A, M.F_obj[v]), h));
                        if (!(lhs == rhs)) {
                            rep.fail("mt0.e.natural", "(h(x)1);e_b = e_a;(1(x)h)",
                                     wit({{"a", a}, {"b", b}, {"v", v}, {"p", p}}));
                            all = false;
                        }
                    }
        if (all) rep.add_pass("mt0.e.natural", "(h(x)1);e_b = e_a;(1(x)h)");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                for (int v = 0; v < B.n; ++v) {
                    Mor rhs = compose(A, tensor(A, identity_mor(A, a), M.e[b][v]),
                                      tensor(A, M.e[a][v], identity_mor(A, b)));
                    if (!(M.e[A.tt[a][b]][v] == rhs)) {
                        rep.fail("mt0.e.multiplicative", "e_{ab} = (1(x)e_b);(e_a(x)1)",
                                 wit({{"a", a}, {"b", b}, {"v", v}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass("mt0.e.multiplicative", "e_{ab} = (1(x)e_b);(e_a(x)1)");
    }
    {
        bool all = true;
        for (int u = 0; u < B.n; ++u)
            for (int v = 0; v < B.n; ++v)
                for (int p = 0; p < B.dim(u, v); ++p) {
                    Mor f = basis_mor(B, u, v, p);
                    Mor Ff = M.F_of(f);
                    for (int a = 0; a < A.n; ++a) {
                        Mor lhs = compose(A, tensor(A, identity_mor(A, a), Ff), M.e[a][v]);
                        Mor rhs = compose(A, M.e[a][u], tensor(A, Ff, identity_mor(A, a)));
                        if (!(lhs == rhs)) {
                            rep.fail("mt0.centrality", "(1_a(x)F(f));e = e;(F(f)(x)1_a)",
                                     wit({{"a", a}, {"u", u}, {"v", v}, {"p", p}}));
                            all = false;
                        }
                    }
                }
        if (all) rep.add_pass("mt0.centrality", "(1_a(x)F(f));e = e;(F(f)(x)1_a)");
    }
    {
        // Braided compatibility. The orientation of this axiom is a
        // convention choice, so the report records which one the data
        // satisfies instead of hard-failing on the mirror.
        bool primary = true, mirror = true;
        std::vector<std::string> bad;
        for (int u = 0; u < B.n; ++u)
            for (int v = 0; v < B.n; ++v) {
                Mor Fbeta = M.F_of(braid(B, u, v));
                Mor rhs = compose(A, Fbeta, M.mu[v][u]);
                Mor lhs_primary = compose(A, M.mu[u][v], M.e[M.F_obj[u]][v]);
                bool p_ok = lhs_primary == rhs;
                bool m_ok = false;
                auto e_inv = invert(A, M.e[M.F_obj[v]][u]);
                if (e_inv) m_ok = compose(A, M.mu[u][v], *e_inv) == rhs;
                if (!p_ok) primary = false;
                if (!m_ok) mirror = false;
                if (!p_ok && !m_ok) bad.push_back(wit({{"u", u}, {"v", v}}));
            }
        if (primary)
            rep.add_pass("mt0.braided_compat", "mu;e = F(beta);mu'", "orientation=primary");
        else if (mirror)
            rep.add_pass("mt0.braided_compat", "mu;e_inv = F(beta);mu'", "orientation=mirror");
        else
            for (const auto& w : bad) rep.fail("mt0.braided_compat", "mu;e = F(beta);mu'", w);
    }
    return rep;
}

ValidationReport validate_modtens_1cell(const ModTensCell1& c) {
    ValidationReport rep;
    const ModTensCat& S = *c.src;
    const ModTensCat& T = *c.dst;
    const PresentedBase& B = *S.base;
    const MonCat& AS = S.A;
    const MonCat& AT = T.A;
    if (S.base.get() != T.base.get()) {
        rep.fail("mt1.struct", "well-formed 1-cell", "0-cells over different bases");
        return rep;
    }
    bool ok = static_cast<int>(c.obj.size()) == AS.n && static_cast<int>(c.mor.size()) == AS.n &&
              static_cast<int>(c.rho.size()) == AS.n && static_cast<int>(c.r.size()) == B.n;
    for (int a = 0; ok && a < AS.n; ++a) {
        if (c.obj[a] < 0 || c.obj[a] >= AT.n) { ok = false; break; }
        ok = static_cast<int>(c.mor[a].size()) == AS.n && static_cast<int>(c.rho[a].size()) == AS.n;
    }
    for (int a = 0; ok && a < AS.n; ++a)
        for (int b = 0; ok && b < AS.n; ++b) {
            if (c.mor[a][b].rows() != AT.hd[c.obj[a]][c.obj[b]] || c.mor[a][b].cols() != AS.hd[a][b])
                ok = false;
            const Mor& rho = c.rho[a][b];
            if (rho.src != AT.tt[c.obj[a]][c.obj[b]] || rho.dst != c.obj[AS.tt[a][b]] ||
                static_cast<int>(rho.coeffs.size()) != AT.hd[rho.src][rho.dst]) ok = false;
        }
    for (int v = 0; ok && v < B.n; ++v) {
        const Mor& rv = c.r[v];
        if (rv.src != T.F_obj[v] || rv.dst != c.obj[S.F_obj[v]] ||
            static_cast<int>(rv.coeffs.size()) != AT.hd[rv.src][rv.dst]) ok = false;
    }
    if (!ok) {
        rep.fail("mt1.struct", "well-formed 1-cell", "typing");
        return rep;
    }
    rep.add_pass("mt1.struct", "well-formed 1-cell");

    {
        bool all = c.obj[AS.unit] == AT.unit && c.r[B.unit] == identity_mor(AT, AT.unit);
        for (int a = 0; a < AS.n && all; ++a)
            all = c.rho[AS.unit][a] == identity_mor(AT, c.obj[a]) &&
                  c.rho[a][AS.unit] == identity_mor(AT, c.obj[a]);
        if (all) rep.add_pass("mt1.strict_unit", "R(1)=1, r_1 = id, rho unit slots = id");
        else rep.fail("mt1.strict_unit", "R(1)=1, r_1 = id, rho unit slots = id", "unit");
    }
    {
        bool all = true;
        for (int a = 0; a < AS.n; ++a)
            if (!(c.R_of(identity_mor(AS, a)) == identity_mor(AT, c.obj[a]))) {
                rep.fail("mt1.R.functorial", "R(id)=id, R(f;g)=R(f);R(g)", wit({{"a", a}}) + ":id");
                all = false;
            }
        for (int a = 0; a < AS.n; ++a)
            for (int b = 0; b < AS.n; ++b)
                for (int d = 0; d < AS.n; ++d)
                    for (int p = 0; p < AS.hd[a][b]; ++p)
                        for (int q = 0; q < AS.hd[b][d]; ++q) {
                            Mor f = basis_mor(AS, a, b, p), g = basis_mor(AS, b, d, q);
                            if (!(c.R_of(compose(AS, f, g)) == compose(AT, c.R_of(f), c.R_of(g)))) {
                                rep.fail("mt1.R.functorial", "R(id)=id, R(f;g)=R(f);R(g)",
                                         wit({{"a", a}, {"b", b}, {"d", d}, {"p", p}, {"q", q}}));
                                all = false;
                            }
                        }
        if (all) rep.add_pass("mt1.R.functorial", "R(id)=id, R(f;g)=R(f);R(g)");
    }
    {
        bool all = true;
        for (int a = 0; a < AS.n; ++a)
            for (int b = 0; b < AS.n; ++b)
                for (int a2 = 0; a2 < AS.n; ++a2)
                    for (int b2 = 0; b2 < AS.n; ++b2)
                        for (int p = 0; p < AS.hd[a][a2]; ++p)
                            for (int q = 0; q < AS.hd[b][b2]; ++q) {
                                Mor f = basis_mor(AS, a, a2, p), g = basis_mor(AS, b, b2, q);
                                Mor lhs = compose(AT, tensor(AT, c.R_of(f), c.R_of(g)), c.rho[a2][b2]);
                                Mor rhs = compose(AT, c.rho[a][b], c.R_of(tensor(AS, f, g)));
                                if (!(lhs == rhs)) {
                                    rep.fail("mt1.rho.natural", "(R(f)(x)R(g));rho = rho;R(f(x)g)",
                                             wit({{"a", a}, {"b", b}, {"a2", a2}, {"b2", b2}, {"p", p}, {"q", q}}));
                                    all = false;
                                }
                            }
        if (all) rep.add_pass("mt1.rho.natural", "(R(f)(x)R(g));rho = rho;R(f(x)g)");
    }
    {
        bool all = true;
        for (int a = 0; a < AS.n; ++a)
            for (int b = 0; b < AS.n; ++b)
                for (int d = 0; d < AS.n; ++d) {
                    Mor lhs = compose(AT, tensor(AT, c.rho[a][b], identity_mor(AT, c.obj[d])),
                                      c.rho[AS.tt[a][b]][d]);
                    Mor rhs = compose(AT, tensor(AT, identity_mor(AT, c.obj[a]), c.rho[b][d]),
                                      c.rho[a][AS.tt[b][d]]);
                    if (!(lhs == rhs)) {
                        rep.fail("mt1.rho.assoc", "(rho(x)1);rho = (1(x)rho);rho",
                                 wit({{"a", a}, {"b", b}, {"d", d}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass("mt1.rho.assoc", "(rho(x)1);rho = (1(x)rho);rho");
    }
    {
        bool all = true;
        for (int u = 0; u < B.n; ++u)
            for (int v = 0; v < B.n; ++v)
                for (int p = 0; p < B.dim(u, v); ++p) {
                    Mor f = basis_mor(B, u, v, p);
                    Mor lhs = compose(AT, T.F_of(f), c.r[v]);
                    Mor rhs = compose(AT, c.r[u], c.R_of(S.F_of(f)));
                    if (!(lhs == rhs)) {
                        rep.fail("mt1.r.natural", "F_B(f);r = r;R(F_A(f))",
                                 wit({{"u", u}, {"v", v}, {"p", p}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass("mt1.r.natural", "F_B(f);r = r;R(F_A(f))");
    }
    {
        bool all = true;
        for (int a = 0; a < AS.n; ++a)
            for (int v = 0; v < B.n; ++v) {
                int Ra = c.obj[a], FAv = S.F_obj[v];
                Mor lhs = compose(AT, T.e[Ra][v],
                                  compose(AT, tensor(AT, c.r[v], identity_mor(AT, Ra)),
                                          c.rho[FAv][a]));
                Mor rhs = compose(AT, tensor(AT, identity_mor(AT, Ra), c.r[v]),
                                  compose(AT, c.rho[a][FAv], c.R_of(S.e[a][v])));
                if (!(lhs == rhs)) {
                    rep.fail("mt1.halfbraid_coherence",
                             "e;(r(x)1);rho = (1(x)r);rho;R(e)", wit({{"a", a}, {"v", v}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("mt1.halfbraid_coherence", "e;(r(x)1);rho = (1(x)r);rho;R(e)");
    }
    {
        bool all = true;
        for (int u = 0; u < B.n; ++u)
            for (int v = 0; v < B.n; ++v) {
                Mor lhs = compose(AT, c.r[B.ten(u, v)], c.R_of(S.mu[u][v]));
                Mor rhs = compose(AT, T.mu[u][v],
                                  compose(AT, tensor(AT, c.r[u], c.r[v]),
                                          c.rho[S.F_obj[u]][S.F_obj[v]]));
                if (!(lhs == rhs)) {
                    rep.fail("mt1.action_coherence", "r_{uv};R(mu^A) = mu^B;(r(x)r);rho",
                             wit({{"u", u}, {"v", v}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("mt1.action_coherence", "r_{uv};R(mu^A) = mu^B;(r(x)r);rho");
    }
    if (c.strong) {
        bool all = true;
        for (int a = 0; a < AS.n; ++a)
            for (int b = 0; b < AS.n; ++b)
                if (!is_invertible_mor(AT, c.rho[a][b])) {
                    rep.fail("mt1.strong.invertible", "rho invertible", wit({{"a", a}, {"b", b}}));
                    all = false;
                }
        if (all) rep.add_pass("mt1.strong.invertible", "rho invertible");
    }
    return rep;
}

ValidationReport validate_modtens_2cell(const ModTensCell2& th) {
    ValidationReport rep;
    const ModTensCell1& R = *th.src;
    const ModTensCell1& S = *th.dst;
    if (R.src.get() != S.src.get() || R.dst.get() != S.dst.get()) {
        rep.fail("mt2.struct", "well-formed 2-cell", "endpoint 1-cells not parallel");
        return rep;
    }
    const ModTensCat& M = *R.src;
    const MonCat& AS = M.A;
    const MonCat& AT = R.dst->A;
    const PresentedBase& B = *M.base;
    bool ok = static_cast<int>(th.comp.size()) == AS.n;
    for (int a = 0; ok && a < AS.n; ++a) {
        const Mor& t = th.comp[a];
        if (t.src != R.obj[a] || t.dst != S.obj[a] ||
            static_cast<int>(t.coeffs.size()) != AT.hd[t.src][t.dst]) ok = false;
    }
    if (!ok) {
        rep.fail("mt2.struct", "well-formed 2-cell", "typing");
        return rep;
    }
    rep.add_pass("mt2.struct", "well-formed 2-cell");

    {
        bool un = th.comp[AS.unit] == identity_mor(AT, AT.unit);
        if (un) rep.add_pass("mt2.unit", "Theta_{1_A} = id");
        else rep.fail("mt2.unit", "Theta_{1_A} = id", "unit");
    }
    {
        bool all = true;
        for (int a = 0; a < AS.n; ++a)
            for (int b = 0; b < AS.n; ++b)
                for (int p = 0; p < AS.hd[a][b]; ++p) {
                    Mor f = basis_mor(AS, a, b, p);
                    Mor lhs = compose(AT, R.R_of(f), th.comp[b]);
                    Mor rhs = compose(AT, th.comp[a], S.R_of(f));
                    if (!(lhs == rhs)) {
                        rep.fail("mt2.natural", "R(f);Theta = Theta;S(f)", wit({{"a", a}, {"b", b}, {"p", p}}));
                        all = false;
                    }
                }
        if (all) rep.add_pass("mt2.natural", "R(f);Theta = Theta;S(f)");
    }
    {
        bool all = true;
        for (int a = 0; a < AS.n; ++a)
            for (int b = 0; b < AS.n; ++b) {
                Mor lhs = compose(AT, tensor(AT, th.comp[a], th.comp[b]), S.rho[a][b]);
                Mor rhs = compose(AT, R.rho[a][b], th.comp[AS.tt[a][b]]);
                if (!(lhs == rhs)) {
                    rep.fail("mt2.monoidal", "(Theta(x)Theta);sigma = rho;Theta", wit({{"a", a}, {"b", b}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("mt2.monoidal", "(Theta(x)Theta);sigma = rho;Theta");
    }
    {
        bool all = true;
        for (int v = 0; v < B.n; ++v) {
            Mor lhs = compose(AT, R.r[v], th.comp[M.F_obj[v]]);
            if (!(lhs == S.r[v])) {
                rep.fail("mt2.rs_coherence", "r_v;Theta_{F_A(v)} = s_v", wit({{"v", v}}));
                all = false;
            }
        }
        if (all) rep.add_pass("mt2.rs_coherence", "r_v;Theta_{F_A(v)} = s_v");
    }
    return rep;
}

ModTensCell1 identity_cell1(ModTensPtr M) {
    const MonCat& A = M->A;
    ModTensCell1 c;
    c.name = "id_" + M->name;
    c.src = M;
    c.dst = M;
    c.strong = true;
    c.obj.resize(A.n);
    c.mor.assign(A.n, std::vector<Matrix>(A.n));
    c.rho.assign(A.n, std::vector<Mor>(A.n));
    c.r.resize(M->base->n);
    for (int a = 0; a < A.n; ++a) {
        c.obj[a] = a;
        for (int b = 0; b < A.n; ++b) {
            c.mor[a][b] = Matrix::identity(A.hd[a][b]);
            c.rho[a][b] = identity_mor(A, A.tt[a][b]);
        }
    }
    for (int v = 0; v < M->base->n; ++v) c.r[v] = identity_mor(A, M->F_obj[v]);
    return c;
}

ModTensCell1 compose_cells1(const ModTensCell1& c1, const ModTensCell1& c2) {
    if (c1.dst.get() != c2.src.get())
        throw std::invalid_argument("compose_cells1: endpoints not composable");
    const MonCat& AS = c1.src->A;
    const MonCat& AU = c2.dst->A;
    ModTensCell1 c;
    c.name = c1.name + ";" + c2.name;
    c.src = c1.src;
    c.dst = c2.dst;
    c.strong = c1.strong && c2.strong;
    c.obj.resize(AS.n);
    c.mor.assign(AS.n, std::vector<Matrix>(AS.n));
    c.rho.assign(AS.n, std::vector<Mor>(AS.n));
    c.r.resize(c1.src->base->n);
    for (int a = 0; a < AS.n; ++a) c.obj[a] = c2.obj[c1.obj[a]];
    for (int a = 0; a < AS.n; ++a)
        for (int b = 0; b < AS.n; ++b) {
            c.mor[a][b] = c2.mor[c1.obj[a]][c1.obj[b]].multiply(c1.mor[a][b]);
            // sigma_{R(a),R(b)} ; S(rho_{a,b})
            c.rho[a][b] = compose(AU, c2.rho[c1.obj[a]][c1.obj[b]], c2.R_of(c1.rho[a][b]));
        }
    for (int v = 0; v < c1.src->base->n; ++v)
        c.r[v] = compose(AU, c2.r[v], c2.R_of(c1.r[v])); // s_v then S(r_v)
    return c;
}

ModTensCell2 identity_cell2(ModTensCell1Ptr c) {
    ModTensCell2 t;
    t.name = "id_" + c->name;
    t.src = c;
    t.dst = c;
    const MonCat& AT = c->dst->A;
    t.comp.resize(c->src->A.n);
    for (int a = 0; a < c->src->A.n; ++a) t.comp[a] = identity_mor(AT, c->obj[a]);
    return t;
}

ModTensCell2 compose_cells2_vertical(const ModTensCell2& t1, const ModTensCell2& t2) {
    if (t1.dst.get() != t2.src.get())
        throw std::invalid_argument("compose_cells2_vertical: not composable");
    const MonCat& AT = t1.src->dst->A;
    ModTensCell2 t;
    t.name = t1.name + ";" + t2.name;
    t.src = t1.src;
    t.dst = t2.dst;
    t.comp.resize(t1.comp.size());
    for (std::size_t a = 0; a < t.comp.size(); ++a)
        t.comp[a] = compose(AT, t1.comp[a], t2.comp[a]);
    return t;
}

ModTensCell2 compose_cells2_horizontal(const ModTensCell2& t1, const ModTensCell2& t2) {
    // t1 : R1 => R2 (A -> B), t2 : S1 => S2 (B -> C); (t1 t2)_a = phi_{R1(a)} ; S2(Theta_a).
    if (t1.src->dst.get() != t2.src->src.get())
        throw std::invalid_argument("compose_cells2_horizontal: middle 0-cell mismatch");
    const ModTensCell1& R1 = *t1.src;
    const ModTensCell1& S2 = *t2.dst;
    const MonCat& AC = S2.dst->A;
    ModTensCell2 t;
    t.name = t1.name + "*" + t2.name;
    t.src = std::make_shared<ModTensCell1>(compose_cells1(*t1.src, *t2.src));
    t.dst = std::make_shared<ModTensCell1>(compose_cells1(*t1.dst, *t2.dst));
    t.comp.resize(t1.comp.size());
    for (std::size_t a = 0; a < t.comp.size(); ++a)
        t.comp[a] = compose(AC, t2.comp[R1.obj[a]], S2.R_of(t1.comp[a]));
    return t;
}

bool same_data(const ModTensCell1& a, const ModTensCell1& b) {
    return a.obj == b.obj && a.mor == b.mor && a.rho == b.rho && a.r == b.r && a.strong == b.strong;
}

bool same_data(const ModTensCell2& a, const ModTensCell2& b) { return a.comp == b.comp; }

} // namespace modtens
