#pragma once

#include <memory>
#include <string>
#include <vector>

#include "divlab/groups/cayley.hpp"

namespace divlab {

struct GroupSpaceHandle {
  std::shared_ptr<const ActionBackend> backend;
  std::shared_ptr<CayleySpace> space;
};

// Control spaces by short kind id: z1, z2, z3, free2, free3, braid3.
// Mapping-class-group spaces are built from fixtures elsewhere; this
// registry only covers the self-contained controls.
GroupSpaceHandle make_group_space(const std::string& kind);
std::vector<std::string> group_space_kinds();

}  // namespace divlab
