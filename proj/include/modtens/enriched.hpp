#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modtens/base_category.hpp"

namespace modtens {

/// Category enriched in a presented base V. hom(a,b) is a V-object; j and
/// comp are V-morphisms (identity element and composition).
struct VCat {
    BasePtr base;
    std::string name;
    int n = 0;
    std::vector<std::vector<int>> hom;               // hom objects
    std::vector<Mor> j;                              // V(1_V -> hom(a,a))
    std::vector<std::vector<std::vector<Mor>>> comp; // V(hom(a,b)(x)hom(b,c) -> hom(a,c))
};

/// V-monoidal category: a VCat with strict tensor data.
struct VMonCat : VCat {
    int unit = 0;
    std::vector<std::vector<int>> tt;
    // tens[a][b][c][d] : V(hom(a->c)(x)hom(b->d) -> hom(ab->cd))
    std::vector<std::vector<std::vector<std::vector<Mor>>>> tens;

    int ten(int a, int b) const { return tt[a][b]; }
};

using VMonCatPtr = std::shared_ptr<const VMonCat>;

/// Strictly unital lax V-monoidal functor (R, rho^R).
struct VMonFunctor {
    VMonCatPtr src, dst;
    std::string name;
    std::vector<int> obj;
    std::vector<std::vector<Mor>> comp_mor; // V(homA(a,b) -> homB(Ra,Rb))
    std::vector<std::vector<Mor>> lax;      // V(1_V -> homB(R(a)R(b) -> R(ab)))
    bool strong = false;
};

using VMonFunctorPtr = std::shared_ptr<const VMonFunctor>;

/// 1_V-graded (monoidal) natural transformation.
struct VTransform {
    VMonFunctorPtr src, dst;
    std::string name;
    std::vector<Mor> comp; // V(1_V -> homB(R(a) -> S(a)))
};

ValidationReport validate_vcat(const VCat& C);
ValidationReport validate_vmoncat(const VMonCat& C);
ValidationReport validate_vmon_functor(const VMonFunctor& F);
ValidationReport validate_vtransform(const VTransform& t, bool monoidal);

VMonFunctor identity_functor(VMonCatPtr C);
VMonFunctor compose_functors(const VMonFunctor& F, const VMonFunctor& G);
VTransform identity_transform(VMonFunctorPtr F);
VTransform vertical_compose(const VTransform& t1, const VTransform& t2);
VTransform horizontal_compose(const VTransform& t1, const VTransform& t2);

bool same_data(const VMonFunctor& F, const VMonFunctor& G);
bool same_data(const VTransform& s, const VTransform& t);

/// Underlying (monoidal) category: hom space at (a,b) is the coefficient
/// space of V(1_V -> hom(a,b)).
MonCat underlying(const VMonCat& C);

/// Underlying functor between underlying categories, as matrices on the
/// underlying hom spaces.
struct OrdFunctor {
    std::string name;
    std::vector<int> obj;
    std::vector<std::vector<Matrix>> mor; // [a][b]
};

OrdFunctor underlying_functor(const VMonFunctor& F);

/// Categorified trace Tr(a) = hom(1_A -> a), landing in V hom spaces.
struct TraceFunctor {
    std::vector<int> obj;                 // a -> V-object hom(1_A, a)
    std::vector<std::vector<Matrix>> mor; // A(a->b) coeffs -> V(Tr a -> Tr b) coeffs
};

TraceFunctor trace(const VMonCat& C);
ValidationReport validate_trace(const VMonCat& C);

/// Self-enrichment of a rigid base: hom objects u* (x) v, structure built
/// from ev/coev through the internal-hom mates; the tensor picks up one
/// braiding crossing.
VMonCat self_enrichment(BasePtr base);

/// Same enriched data over a different (structurally identical) base. Used by
/// mutation tests that corrupt the braiding under fixed enriched data.
VMonCat with_base(const VMonCat& C, BasePtr base);

} // namespace modtens
