#pragma once

#include "artin/sigma.hpp"

namespace artin::detail {

// The cut with the first Liv component on one side and the rest on the other.
Cut default_cut(const LivingSubgraph& liv);

// Quotient onto C_p sending the first side of the cut to the generator.
Witness uniform_prime_witness(const LabeledGraph& g, const Character& chi, const Cut& cut, unsigned long p);

// Quotient onto the product of C_p over the colours met by the cut, built
// from a balanced colouring of the even core. Throws ColouringInvalidOnCut.
Witness balanced_witness(const LabeledGraph& g, const Character& chi, const Cut& cut,
                         const BalancedColouring& colouring);

}  // namespace artin::detail
