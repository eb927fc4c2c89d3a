#pragma once

#include <cstddef>

#include "qrep/basecat.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

// Number of paths in a finite acyclic quiver, trivial paths included.
std::size_t total_path_count(const Quiver& q);

// Random finite acyclic quiver with 1..max_vertices vertices and at most
// max_arrows arrows (parallel arrows allowed), whose total path count stays
// within path_cap. Arrows are added in random order and dropped when they
// would exceed the cap.
Quiver random_acyclic_quiver(Rng& rng, std::size_t max_vertices, std::size_t max_arrows,
                             std::size_t path_cap);

}  // namespace qrep
