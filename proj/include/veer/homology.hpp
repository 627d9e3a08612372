#pragma once

#include "veer/smith.hpp"
#include "veer/taut.hpp"
#include "veer/triangulation.hpp"

#include <vector>

namespace veer {

struct abelian_group {
    int free_rank = 0;
    std::vector<long long> torsion; // invariant factors > 1, divisibility order

    friend bool operator==(const abelian_group& a, const abelian_group& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// H1 of the cusped manifold, computed from the dual 2-complex (spine):
// dual 0-cells = tetrahedra, dual 1-cells = faces (oriented below -> above by
// the coorientation), dual 2-cells = edge fans (oriented by the walk).
// Requires an orientable triangulation.
abelian_group homology_h1(const ideal_triangulation& T, const coorientation& co);

// boundary maps, exposed for tests and for the mod-2 cover machinery
imat dual_d1(const ideal_triangulation& T, const coorientation& co);
imat dual_d2(const ideal_triangulation& T, const coorientation& co);

} // namespace veer
