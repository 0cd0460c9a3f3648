// The two closed-form point-set constructions (pinwheel and parabolic)
// and the conjectured optimum they achieve.
#pragma once

#include "pentamin/geom.hpp"
#include "pentamin/rational.hpp"

namespace pent {

// Four spokes of k points each (n = 4k), scaled to integer coordinates
// and sheared to make all x distinct; the shear preserves every
// orientation, and general position / distinct x are verified on every
// call (std::logic_error on failure). Induces exactly 2*C(2k,5) convex
// pentagons.
PointSet pinwheel(int k);

// floor(n/2) top points (i*n^2, 2n^2+i^2) and ceil(n/2) bottom points
// (i*n^2+1, -2n^2-i^2); the +1 offset resolves the top/bottom x
// collisions while keeping the induced pentagon count at
// C(floor(n/2),5)+C(ceil(n/2),5) (covered by tests over the supported
// range). General position is verified on every call.
PointSet parabolic(int n);

// C(floor(n/2),5) + C(ceil(n/2),5), the conjectured value of the
// pentagon minimum.
Int conjectured_mu5(long long n);

}  // namespace pent
