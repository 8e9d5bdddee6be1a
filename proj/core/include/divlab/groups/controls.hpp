#pragma once

#include <memory>

#include "divlab/groups/backend.hpp"

namespace divlab {

// Z^n with generators +-e_i; exact L1 distance; n=1 knows when removing
// a ball disconnects the line.
std::shared_ptr<const ActionBackend> make_zn_backend(int n);

// Free group of given rank; states are reduced words; exact distance via
// longest common prefix.
std::shared_ptr<const ActionBackend> make_free_backend(int rank);

// B3 = <x,y | x^2 = y^3> (sigma1 = y^{-1}x, sigma2 = x^{-1}y^2) with the
// amalgam normal form z^m * alternating syllables, z = x^2 central.
// Letters: sigma1, sigma2 and inverses. Independent of any surface code.
std::shared_ptr<const ActionBackend> make_braid3_backend();

}  // namespace divlab
