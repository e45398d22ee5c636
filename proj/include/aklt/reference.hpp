#pragma once

// Literal port of the published Python generators: floating-point
// coordinates compared with a 1e-6 tolerance, turn-based stepping and
// pairwise reversal deduplication. Slow by design; used only as an oracle.

#include <cstdint>
#include <map>

namespace aklt::reference {

// length -> count, for even lengths 6..max
std::map<int, std::int64_t> loops(int max);
// length -> N(length) for 1..max
std::map<int, std::int64_t> walks_to_boundary(int max);
// length -> R(length), even lengths 4..max
std::map<int, std::int64_t> right_endpoint(int max);
// length -> Q(length), odd lengths 3..max
std::map<int, std::int64_t> odd_corner(int max);
// C_n for the square lattice: corner walks through the worst vertex plus
// closed trails through a bulk vertex
std::int64_t square_cn(int n);

}  // namespace aklt::reference
