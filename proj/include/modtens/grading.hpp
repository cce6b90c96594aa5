#pragma once

#include "modtens/module_tensor.hpp"

namespace modtens {

struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> table; // table[g][h] = g*h
    int identity = 0;

    int mul(int g, int h) const { return table[g][h]; }
    int inverse(int g) const;
};

ValidationReport validate_group(const FiniteGroup& G);

/// Degree labels for the (homogeneous, non-null) objects of a category.
/// Null objects (zero identity hom) lie in every grade and are exempt.
struct GradingAssignment {
    std::string name;
    FiniteGroup group;
    std::vector<int> degree; // object -> group element
};

ValidationReport validate_graded_vmoncat(const VMonCat& C, const GradingAssignment& g);
ValidationReport validate_graded_modtens(const ModTensCat& M, const GradingAssignment& g);
ValidationReport validate_graded_cell1(const ModTensCell1& c, const GradingAssignment& gsrc,
                                       const GradingAssignment& gdst);

} // namespace modtens
