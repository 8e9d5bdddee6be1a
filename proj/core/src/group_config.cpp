#include "divlab/groups/config.hpp"

#include "divlab/groups/controls.hpp"

namespace divlab {

GroupSpaceHandle make_group_space(const std::string& kind) {
  std::shared_ptr<const ActionBackend> backend;
  if (kind == "z1") {
    backend = make_zn_backend(1);
  } else if (kind == "z2") {
    backend = make_zn_backend(2);
  } else if (kind == "z3") {
    backend = make_zn_backend(3);
  } else if (kind == "free2") {
    backend = make_free_backend(2);
  } else if (kind == "free3") {
    backend = make_free_backend(3);
  } else if (kind == "braid3") {
    backend = make_braid3_backend();
  } else {
    std::string known;
    for (const auto& k : group_space_kinds()) known += " " + k;
    throw UsageError("unknown group space '" + kind + "'; known:" + known);
  }
  GroupSpaceHandle h;
  h.backend = backend;
  h.space = std::make_shared<CayleySpace>(backend);
  return h;
}

std::vector<std::string> group_space_kinds() {
  return {"z1", "z2", "z3", "free2", "free3", "braid3"};
}

}  // namespace divlab
