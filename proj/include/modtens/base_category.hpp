#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modtens/linalg.hpp"
#include "modtens/report.hpp"

namespace modtens {

/// A morphism presented as a coefficient vector over the implicit ordered
/// basis of the hom space src -> dst. The zero vector is a legal morphism;
/// hom spaces of dimension zero give empty vectors.
struct Mor {
    int src = 0;
    int dst = 0;
    Vec coeffs;

    friend bool operator==(const Mor& a, const Mor& b) {
        return a.src == b.src && a.dst == b.dst && a.coeffs == b.coeffs;
    }
};

/// Structure constants of a bilinear map hom(dl) x hom(dr) -> hom(dout),
/// stored dense: c[(p*dr + q)*dout + r] is the coefficient of output basis
/// element r in the image of (e_p, e_q).
struct Bilinear {
    int dl = 0, dr = 0, dout = 0;
    Vec c;

    Bilinear() = default;
    Bilinear(int l, int r, int o)
        : dl(l), dr(r), dout(o), c(static_cast<std::size_t>(l) * r * o) {}

    Rational& at(int p, int q, int r) {
        return c[(static_cast<std::size_t>(p) * dr + q) * dout + r];
    }
    const Rational& at(int p, int q, int r) const {
        return c[(static_cast<std::size_t>(p) * dr + q) * dout + r];
    }

    Vec apply(const Vec& l, const Vec& r) const;
};

/// A finite, strict, skeletal monoidal linear category presented by structure
/// constants. Also serves as the underlying monoidal category of an enriched
/// one; the braided base adds braiding and duality on top (PresentedBase).
struct MonCat {
    std::string name;
    int n = 0;     // objects are indices 0..n-1
    int unit = 0;
    std::vector<std::vector<int>> tt;            // tensor on objects
    std::vector<std::vector<int>> hd;            // hom dims
    std::vector<Vec> id;                         // identity coefficients per object
    std::vector<std::vector<std::vector<Bilinear>>> comp; // [i][j][k]
    std::vector<std::vector<std::vector<std::vector<Bilinear>>>> tens; // [i][j][k][l]
    std::optional<int> zero;                     // designated zero object

    int dim(int i, int j) const { return hd[i][j]; }
    int ten(int i, int j) const { return tt[i][j]; }
    bool is_null_object(int i) const { return hd[i][i] == 0; }
};

Mor identity_mor(const MonCat& C, int obj);
Mor zero_mor(const MonCat& C, int src, int dst);
Mor basis_mor(const MonCat& C, int src, int dst, int k);
Mor scale(const Rational& s, Mor f);
Mor add(const Mor& f, const Mor& g);

/// f then g (compositions are written left to right throughout).
Mor compose(const MonCat& C, const Mor& f, const Mor& g);
Mor tensor(const MonCat& C, const Mor& f, const Mor& g);
Mor tensor_all(const MonCat& C, const std::vector<Mor>& fs);

/// Two-sided inverse, when one exists.
std::optional<Mor> invert(const MonCat& C, const Mor& f);
bool is_invertible_mor(const MonCat& C, const Mor& f);

/// Monoidal-linear-category laws by exhaustive basis enumeration. `prefix`
/// parameterizes the check ids so the same enumeration serves presented bases
/// ("base.") and underlying categories ("moncat.").
ValidationReport validate_moncat(const MonCat& C, const std::string& prefix = "moncat.");

struct Duality {
    std::vector<int> dual;  // object -> dual object
    std::vector<Mor> ev;    // i* (x) i -> 1
    std::vector<Mor> coev;  // 1 -> i (x) i*
};

/// The braided monoidal linear base category V.
struct PresentedBase : MonCat {
    std::vector<std::vector<Mor>> braiding;  // [i][j] : i(x)j -> j(x)i
    std::optional<Duality> duality;
};

using BasePtr = std::shared_ptr<const PresentedBase>;

const Mor& braid(const PresentedBase& B, int u, int v);

Mor compose_v(const PresentedBase& B, const Mor& f, const Mor& g);
Mor tensor_v(const PresentedBase& B, const Mor& f, const Mor& g);

/// u* (x) v, the rigid model of the internal hom [u,v].
int internal_hom(const PresentedBase& B, int u, int v);

// Right-duality data derived from the left duality through the braiding:
// ev'_u = beta_{u,u*} ; ev_u and coev'_u = coev_u ; beta_{u,u*}. These drive
// the internal-hom mates of the self-enrichment.
Mor ev_right(const PresentedBase& B, int u);
Mor coev_right(const PresentedBase& B, int u);

/// Mate of f : u(x)w -> v under V(u w -> v) = V(w -> [u,v]). The factor w of
/// f.src is passed explicitly (tensor decompositions of an object index are
/// not unique).
Mor mate_ih(const PresentedBase& B, int u, int w, const Mor& f);
/// Inverse direction: g : w -> [u,v] becomes u(x)w -> v.
Mor unmate_ih(const PresentedBase& B, int u, int v, const Mor& g);

/// Every axiom instance of a strict braided monoidal linear category (with
/// rigidity when duality data is present), each failure located by object and
/// basis indices. Structural malformation is reported distinctly under
/// "base.struct".
ValidationReport validate_base(const PresentedBase& B);

} // namespace modtens
