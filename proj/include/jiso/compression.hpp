#pragma once

#include "jiso/family.hpp"

namespace jiso {

// The ij-shift T_ij: every member x with i in x, j outside x moves to
// x - e_i + e_j unless that set is already a member. Preserves cardinality;
// for i > j it never increases the boundary. Throws when i = j.
Family shift(const Family& S, int i, int j);

// True iff every T_ij with i > j fixes S, i.e. S is a down-set under
// componentwise element decrease.
bool is_compressed(const Family& S);

// Fixpoint of repeated shifts, sweeping pairs (i,j), i > j, in lexicographic
// order of (j,i) until a full sweep changes nothing. Terminates because the
// total weight strictly drops whenever a sweep moves anything.
Family compress(const Family& S);

// Largest element used by a compressed family. Guaranteed <= m + |S| + 1;
// throws std::invalid_argument if S is not compressed and std::logic_error
// if the bound fails (defect signal).
int support_bound(const Family& S);

}  // namespace jiso
