#pragma once

#include <string>

#include "affscat/instance.hpp"
#include "affscat/scattering.hpp"

namespace affscat {

// Rank 2: walls as rays or lines from the origin, clipped to a square.
std::string render_rank2(const ScatDiagram& d);

// Rank 3 affine: the slice <x, delta> = 1, where each wall is a segment, next
// to the plane delta-perp with the imaginary wall shaded. Walls meeting
// delta-perp in a ray are drawn there too.
std::string render_affine_slice(const ScatDiagram& d, const Instance& inst);

// Picks the view by rank; throws Unsupported for other ranks.
std::string render_slice(const ScatDiagram& d, const Instance* inst);

}  // namespace affscat
