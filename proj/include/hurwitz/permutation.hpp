#pragma once

#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Permutation of {0..d-1} as its image table. Products compose right to
// left: (a * b)(x) = a(b(x)).
using Perm = std::vector<int>;

Perm identity_perm(int d);
Perm compose(const Perm& a, const Perm& b);
Partition cycle_type(const Perm& p);

// A permutation with cycle type mu, cycles laid out over 0..d-1 in part order.
Perm class_representative(const Partition& mu);

// All transpositions (a, b) of S_d in lexicographic order, a < b.
std::vector<std::pair<int, int>> transpositions(int d);

// True iff the group generated by ts has a single orbit on {0..d-1}.
// The empty generating set on d = 1 is transitive.
bool is_transitive(const std::vector<Perm>& ts, int d);

}  // namespace hurwitz
