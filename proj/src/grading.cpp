#include "modtens/grading.hpp"

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

} // namespace

int FiniteGroup::inverse(int g) const {
    for (int h = 0; h < order; ++h)
        if (table[g][h] == identity) return h;
    throw std::domain_error("FiniteGroup::inverse: no inverse for element " + std::to_string(g));
}

ValidationReport validate_group(const FiniteGroup& G) {
    ValidationReport rep;
    bool ok = G.order > 0 && static_cast<int>(G.table.size()) == G.order &&
              G.identity >= 0 && G.identity < G.order;
    for (int g = 0; ok && g < G.order; ++g) {
        if (static_cast<int>(G.table[g].size()) != G.order) { ok = false; break; }
        for (int h = 0; h < G.order; ++h)
            if (G.table[g][h] < 0 || G.table[g][h] >= G.order) ok = false;
    }
    if (!ok) {
        rep.fail("grp.struct", "well-formed multiplication table", "typing");
        return rep;
    }
    rep.add_pass("grp.struct", "well-formed multiplication table");

    {
        bool all = true;
        for (int g = 0; g < G.order; ++g)
            if (G.mul(G.identity, g) != g || G.mul(g, G.identity) != g) {
                rep.fail("grp.identity", "e*g = g = g*e", wit({{"g", g}}));
                all = false;
            }
        if (all) rep.add_pass("grp.identity", "e*g = g = g*e");
    }
    {
        bool all = true;
        for (int g = 0; g < G.order; ++g)
            for (int h = 0; h < G.order; ++h)
                for (int k = 0; k < G.order; ++k)
                    if (G.mul(G.mul(g, h), k) != G.mul(g, G.mul(h, k))) {
                        rep.fail("grp.assoc", "(g*h)*k = g*(h*k)", wit({{"g", g}, {"h", h}, {"k", k}}));
                        all = false;
                    }
        if (all) rep.add_pass("grp.assoc", "(g*h)*k = g*(h*k)");
    }
    {
        bool all = true;
        for (int g = 0; g < G.order; ++g) {
            bool has = false;
            for (int h = 0; h < G.order; ++h)
                if (G.mul(g, h) == G.identity && G.mul(h, g) == G.identity) { has = true; break; }
            if (!has) {
                rep.fail("grp.inverse", "every element has a two-sided inverse", wit({{"g", g}}));
                all = false;
            }
        }
        if (all) rep.add_pass("grp.inverse", "every element has a two-sided inverse");
    }
    return rep;
}

ValidationReport validate_graded_vmoncat(const VMonCat& C, const GradingAssignment& g) {
    ValidationReport rep = validate_group(g.group);
    if (!rep.ok()) return rep;
    const PresentedBase& B = *C.base;
    const FiniteGroup& G = g.group;
    if (static_cast<int>(g.degree.size()) != C.n) {
        rep.fail("graded.struct", "degree per object", "size");
        return rep;
    }
    for (int a = 0; a < C.n; ++a)
        if (g.degree[a] < 0 || g.degree[a] >= G.order) {
            rep.fail("graded.struct", "degree per object", wit({{"a", a}}) + ":range");
            return rep;
        }
    rep.add_pass("graded.struct", "degree per object");

    // An object is null when it has no identity element (zero identity hom);
    // such objects lie in every grade and carry no meaningful degree.
    auto is_null = [&](int a) { return B.dim(B.unit, C.hom[a][a]) == 0; };

    {
        bool ok = is_null(C.unit) || g.degree[C.unit] == G.identity;
        if (ok) rep.add_pass("graded.vmoncat.deg_unit", "deg(1_A) = e");
        else rep.fail("graded.vmoncat.deg_unit", "deg(1_A) = e", "unit");
    }
    {
        bool all = true;
        for (int a = 0; a < C.n; ++a)
            for (int b = 0; b < C.n; ++b) {
                if (is_null(a) || is_null(b) || is_null(C.ten(a, b))) continue;
                if (g.degree[C.ten(a, b)] != G.mul(g.degree[a], g.degree[b])) {
                    rep.fail("graded.vmoncat.deg_mult", "deg(ab) = deg(a)deg(b)", wit({{"a", a}, {"b", b}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("graded.vmoncat.deg_mult", "deg(ab) = deg(a)deg(b)");
    }
    {
        bool all = true;
        for (int a = 0; a < C.n; ++a)
            for (int b = 0; b < C.n; ++b) {
                if (is_null(a) || is_null(b)) continue;
                if (g.degree[a] == g.degree[b]) continue;
                bool zero_hom = !B.zero ? false : C.hom[a][b] == *B.zero;
                if (!zero_hom) {
                    rep.fail("graded.vmoncat.cross_zero",
                             "hom(a,b) = 0_V for objects in distinct grades", wit({{"a", a}, {"b", b}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("graded.vmoncat.cross_zero", "hom(a,b) = 0_V for objects in distinct grades");
    }
    {
        bool all = true;
        for (int gg = 0; gg < G.order; ++gg) {
            bool inhabited = false;
            for (int a = 0; a < C.n && !inhabited; ++a)
                for (int b = 0; b < C.n && !inhabited; ++b) {
                    if (is_null(a) || is_null(b)) continue;
                    if (g.degree[a] != gg || g.degree[b] != gg) continue;
                    bool zero_hom = B.zero && C.hom[a][b] == *B.zero;
                    if (!zero_hom) inhabited = true;
                }
            if (!inhabited) {
                rep.fail("graded.vmoncat.faithful", "every grade has a nonzero hom object",
                         wit({{"g", gg}}));
                all = false;
            }
        }
        if (all) rep.add_pass("graded.vmoncat.faithful", "every grade has a nonzero hom object");
    }
    return rep;
}

ValidationReport validate_graded_modtens(const ModTensCat& M, const GradingAssignment& g) {
    ValidationReport rep = validate_group(g.group);
    if (!rep.ok()) return rep;
    const PresentedBase& B = *M.base;
    const MonCat& A = M.A;
    const FiniteGroup& G = g.group;
    if (static_cast<int>(g.degree.size()) != A.n) {
        rep.fail("graded.struct", "degree per object", "size");
        return rep;
    }
    rep.add_pass("graded.struct", "degree per object");

    {
        bool ok = A.is_null_object(A.unit) || g.degree[A.unit] == G.identity;
        if (ok) rep.add_pass("graded.modtens.deg_unit", "deg(1_A) = e");
        else rep.fail("graded.modtens.deg_unit", "deg(1_A) = e", "unit");
    }
    {
        bool all = true;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b) {
                if (A.is_null_object(a) || A.is_null_object(b) || A.is_null_object(A.tt[a][b])) continue;
                if (g.degree[A.tt[a][b]] != G.mul(g.degree[a], g.degree[b])) {
                    rep.fail("graded.modtens.deg_mult", "deg(ab) = deg(a)deg(b)", wit({{"a", a}, {"b", b}}));
                    all = false;
                }
            }
        if (all) rep.add_pass("graded.modtens.deg_mult", "deg(ab) = deg(a)deg(b)");
    }
    {
        // F_C(V) lies in the identity component.
        bool all = true;
        for (int v = 0; v < B.n; ++v) {
            int Fv = M.F_obj[v];
            if (A.is_null_object(Fv)) continue;
            if (g.degree[Fv] != G.identity) {
                rep.fail("graded.modtens.F_in_e", "deg(F(v)) = e", wit({{"v", v}, {"Fv", Fv}}));
                all = false;
            }
        }
        if (all) rep.add_pass("graded.modtens.F_in_e", "deg(F(v)) = e");
    }
    return rep;
}

ValidationReport validate_graded_cell1(const ModTensCell1& c, const GradingAssignment& gsrc,
                                       const GradingAssignment& gdst) {
    ValidationReport rep;
    const MonCat& AS = c.src->A;
    const MonCat& AT = c.dst->A;
    bool all = true;
    for (int a = 0; a < AS.n; ++a) {
        if (AS.is_null_object(a) || AT.is_null_object(c.obj[a])) continue;
        if (gdst.degree[c.obj[a]] != gsrc.degree[a]) {
            rep.fail("graded.cell1.deg_preserved", "deg(R(a)) = deg(a)", wit({{"a", a}}));
            all = false;
        }
    }
    if (all) rep.add_pass("graded.cell1.deg_preserved", "deg(R(a)) = deg(a)");
    return rep;
}

} // namespace modtens
