#pragma once

#include "modtens/mates.hpp"

namespace modtens {

/// 0-cell of the module tensor side: a monoidal linear category A together
/// with the data of the central functor (F on objects and hom spaces, the
/// oplaxitor mu and the half-braidings e).
struct ModTensCat {
    std::string name;
    BasePtr base;
    MonCat A;
    std::vector<int> F_obj;
    std::vector<std::vector<Matrix>> F_mor;  // [u][v]: V(u->v) -> A(F(u)->F(v))
    std::vector<std::vector<Mor>> mu;        // F(uv) -> F(u)F(v)
    std::vector<std::vector<Mor>> e;         // [a][v]: a F(v) -> F(v) a

    enum class Provenance { computed, loaded };
    Provenance provenance = Provenance::loaded;
    std::string stamp;

    // Present when provenance == computed; carries eta for the mates.
    VMonCatPtr origin;
    std::shared_ptr<const TensorAdjunction> adj;

    Mor F_of(const Mor& f) const {
        return Mor{F_obj[f.src], F_obj[f.dst], F_mor[f.src][f.dst].apply(f.coeffs)};
    }
};

using ModTensPtr = std::shared_ptr<const ModTensCat>;

/// 1-cell (R, rho, r) between module tensor categories.
struct ModTensCell1 {
    std::string name;
    ModTensPtr src, dst;
    std::vector<int> obj;
    std::vector<std::vector<Matrix>> mor;  // A_src(a->b) -> A_dst(R(a)->R(b))
    std::vector<std::vector<Mor>> rho;     // R(a)R(b) -> R(ab) in A_dst
    std::vector<Mor> r;                    // F_B(v) -> R(F_A(v)) in A_dst
    bool strong = false;

    Mor R_of(const Mor& f) const {
        return Mor{obj[f.src], obj[f.dst], mor[f.src][f.dst].apply(f.coeffs)};
    }
};

using ModTensCell1Ptr = std::shared_ptr<const ModTensCell1>;

/// 2-cell Theta between parallel 1-cells.
struct ModTensCell2 {
    std::string name;
    ModTensCell1Ptr src, dst;
    std::vector<Mor> comp; // R(a) -> S(a) in A_dst
};

ValidationReport validate_modtens_0cell(const ModTensCat& M);
ValidationReport validate_modtens_1cell(const ModTensCell1& c);
ValidationReport validate_modtens_2cell(const ModTensCell2& th);

ModTensCell1 identity_cell1(ModTensPtr M);
ModTensCell1 compose_cells1(const ModTensCell1& c1, const ModTensCell1& c2);
ModTensCell2 identity_cell2(ModTensCell1Ptr c);
ModTensCell2 compose_cells2_vertical(const ModTensCell2& t1, const ModTensCell2& t2);
ModTensCell2 compose_cells2_horizontal(const ModTensCell2& t1, const ModTensCell2& t2);

bool same_data(const ModTensCell1& a, const ModTensCell1& b);
bool same_data(const ModTensCell2& a, const ModTensCell2& b);

} // namespace modtens
