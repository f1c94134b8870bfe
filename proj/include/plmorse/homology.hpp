#pragma once

#include <cstdint>
#include <vector>

#include "plmorse/complex.hpp"

namespace plmorse {

enum class Field { GF2, Rational };

const char* field_name(Field F);

// Betti numbers by degree. For reduced homology the extra rank in
// degree -1 is carried separately; it is 1 exactly for the empty
// complex.
struct BettiVector {
    std::vector<std::int64_t> ranks; // ranks[i] = rank in degree i
    std::int64_t minus_one = 0;
    bool reduced = false;

    std::int64_t at(int i) const {
        if (i == -1) return minus_one;
        if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
        return ranks[i];
    }
    std::int64_t operator[](int i) const { return at(i); }
    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector betti(const SimplicialComplex& K, Field F = Field::GF2);
BettiVector reduced_betti(const SimplicialComplex& K, Field F = Field::GF2);

// Homology of the quotient chain complex C(K)/C(L). L must be a
// subcomplex of K; it may be empty.
BettiVector relative_betti(const SimplicialComplex& K, const SimplicialComplex& L,
                           Field F = Field::GF2);

} // namespace plmorse
