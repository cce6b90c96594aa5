#pragma once

#include <cstdint>
#include <variant>

#include "modtens/enriched.hpp"

namespace modtens {

struct NotWeaklyTensored {
    int v = -1; // offending V-object
    std::string reason;
};

/// The tensoring adjunction A(a F(v) -> b) = V(v -> hom(a -> b)), computed by
/// brute-force representability search. Underlying morphisms are Mor values
/// whose src/dst are objects of `und` (the underlying category of `cat`).
struct TensorAdjunction {
    VMonCatPtr cat;
    MonCat und;
    std::vector<int> F_obj;                     // per V-object
    std::vector<std::vector<Matrix>> F_mor;     // [u][v]: V(u->v) -> und(F(u)->F(v))
    std::vector<Mor> eta;                       // V(v -> hom(1_A, F(v)))
    std::vector<std::vector<Mor>> mu;           // und: F(uv) -> F(u)F(v)
    std::vector<std::vector<Mor>> e;            // [a][v], und: a F(v) -> F(v) a
    bool tensored_flag = false;

    const PresentedBase& base() const { return *cat->base; }
};

using AdjResult = std::variant<TensorAdjunction, NotWeaklyTensored>;

/// Searches, per V-object v, the representing object of x -> V(v -> hom(1_A,x))
/// in object-index order with the documented eta schedule (zero, basis
/// vectors, pairwise sums); derives F on morphisms, the counit, the oplaxitor
/// and the half-braidings; sets tensored_flag iff every mu is invertible.
AdjResult compute_adjoint(VMonCatPtr C);

/// F on a V-morphism, as an underlying morphism F(u) -> F(v).
Mor apply_F(const TensorAdjunction& adj, const Mor& f);

/// Counit at (a,b): underlying a F(hom(a,b)) -> b; the backward mate of the
/// identity on the hom object. Triangle identities are exercised in tests.
Mor counit(const TensorAdjunction& adj, int a, int b);

/// Forward mate of f in V(v -> hom(a,b)) (v = f.src): (1_a (x) F(f)) ; counit.
Mor mate_fwd(const TensorAdjunction& adj, int a, int b, const Mor& f);

/// Backward mate of underlying g : a F(v) -> b, via the eta-side formula with
/// the whiskering functor a (x) -.
Mor mate_bwd(const TensorAdjunction& adj, int a, int v, const Mor& g);

const Mor& oplaxitor(const TensorAdjunction& adj, int u, int v);
const Mor& half_braiding(const TensorAdjunction& adj, int a, int v);

/// (1_a (x) F(f));e_{a,F(v)} = e_{a,F(u)};(F(f) (x) 1_a) for the given f, all a.
ValidationReport check_centrality(const TensorAdjunction& adj, const Mor& f);

/// Seeded random evaluation of both sides of each mate lemma, `trials` tuples
/// per well-typed object shape.
ValidationReport verify_mate_lemmas(const TensorAdjunction& adj, std::uint64_t seed, int trials);

} // namespace modtens
