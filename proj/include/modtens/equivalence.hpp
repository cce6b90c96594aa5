#pragma once

#include "modtens/module_tensor.hpp"

namespace modtens {

/// P on 0-cells: underlying category plus the computed central structure.
/// The result keeps the adjunction, so the inverse maps can take mates.
ModTensPtr P0(std::shared_ptr<const TensorAdjunction> adj);

/// P on 1-cells: underlying functor, laxitor carried across the identity
/// adjunction, r_v = mate(eta_v ; R_{1 -> F(v)}).
ModTensCell1 P1(const VMonFunctor& F, ModTensPtr srcM, ModTensPtr dstM);

/// P on 2-cells: componentwise identification.
ModTensCell2 P2(const VTransform& t, ModTensCell1Ptr srcC, ModTensCell1Ptr dstC);

/// Inverse on 1-cells; endpoints must carry computed adjunctions.
VMonFunctor Q1(const ModTensCell1& c);

/// Inverse on 2-cells: componentwise identification.
VTransform Q2(const ModTensCell2& th, VMonFunctorPtr srcF, VMonFunctorPtr dstF);

/// Named fixture cells for the executable theorem checks.
struct EquivalenceFixtures {
    std::vector<VMonCatPtr> cats;
    std::vector<VMonFunctorPtr> functors;
    std::vector<std::shared_ptr<const VTransform>> transforms;
};

/// Q1(P1(F)) = F, P1(Q1(c)) = c, Q2(P2(t)) = t, P2(Q2(Theta)) = Theta, with
/// strict data equality, on all fixture cells (including identity cells).
ValidationReport check_roundtrip(const EquivalenceFixtures& fx);

/// P preserves unit cells, 1-cell composition and vertical/horizontal 2-cell
/// composition, strict equality on all composable fixture chains.
ValidationReport check_2functoriality(const EquivalenceFixtures& fx);

/// Per-fixture essential-surjectivity witness: reconstructs hom objects of
/// the origin category from the module tensor data by representability
/// search (Yoneda formula) and transports j/comp/tens back through the
/// adjunction; exact equality with the origin on skeletal fixtures.
ValidationReport check_reconstruction(const TensorAdjunction& adj);

} // namespace modtens
