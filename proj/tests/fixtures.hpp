#pragma once

#include "affscat/rational.hpp"

namespace fixtures {

using affscat::mat;

inline affscat::Mat affine_a1() { return mat({{0, 2}, {-2, 0}}); }
inline affscat::Mat affine_a2() { return mat({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}); }
inline affscat::Mat twisted_a2() { return mat({{0, 1}, {-4, 0}}); }
inline affscat::Mat finite_a2() { return mat({{0, 1}, {-1, 0}}); }
inline affscat::Mat finite_b2() { return mat({{0, 1}, {-2, 0}}); }
inline affscat::Mat affine_g2() { return mat({{0, 1, 0}, {-1, 0, 1}, {0, -3, 0}}); }

}  // namespace fixtures
