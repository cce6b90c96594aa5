#pragma once

#include <cstdint>
#include <random>

#include "modtens/base_category.hpp"

namespace modtens {

/// Deterministic generator for small random rationals and morphisms.
/// mt19937_64 is fully specified by the standard, so seeded runs reproduce
/// across platforms; raw engine output only (no distributions).
struct Rng {
    std::mt19937_64 g;

    explicit Rng(std::uint64_t seed) : g(seed) {}

    Rational rational() {
        long num = static_cast<long>(g() % 7) - 3; // -3..3
        long den = 1 + static_cast<long>(g() % 3); // 1..3
        return Rational(num, den);
    }

    Vec vec(int n) {
        Vec v(n);
        for (auto& x : v) x = rational();
        return v;
    }

    Mor mor(const MonCat& C, int src, int dst) { return Mor{src, dst, vec(C.dim(src, dst))}; }
};

} // namespace modtens
