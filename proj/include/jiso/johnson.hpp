#pragma once

#include <cstdint>

#include "jiso/family.hpp"
#include "jiso/subset.hpp"

namespace jiso {

// All x - e_i + e_j for i in x, j outside x, j <= n. Cardinality m(n-m).
// Throws when m = 0 or m = n (no neighbors, contract violated).
Family neighbors(Mask x, int n);

// Vertices outside S at distance exactly one. S must be nonempty, 0 < m < n.
Family boundary(const Family& S);

// S together with its boundary; |ball(S)| = |S| + |boundary(S)|.
Family ball(const Family& S);

// (m-1)-sets contained in some member.
Family lower_shadow(const Family& S);

// (m+1)-sets containing some member, within the family's ground set (or an
// explicit larger one).
Family upper_shadow(const Family& S);
Family upper_shadow(const Family& S, int n);

// ball(S) computed as both shadow compositions; checks they agree.
Family ball_via_shadows(const Family& S);

// w(x) = sum of element labels.
long long weight(Mask x);
long long family_weight(const Family& S);

// Vertices at graph distance exactly two from S, i.e. the boundary of the
// ball of S.
Family distance_two_set(const Family& S);

}  // namespace jiso
