#include "divlab/metric/io.hpp"

#include <nlohmann/json.hpp>

namespace divlab {

using nlohmann::json;

void write_profile_csv(std::ostream& os, const DivergenceProfile& profile) {
  os << "t,div,path_len,status\n";
  for (const auto& e : profile.entries) {
    os << e.t << ",";
    if (e.status == DivStatus::kExact || e.status == DivStatus::kUpperBound)
      os << e.div;
    else if (e.status == DivStatus::kInfinite)
      os << "inf";
    else
      os << "";
    os << "," << e.path_len << "," << to_string(e.status) << "\n";
  }
}

std::string profile_to_json(const DivergenceProfile& profile) {
  json j;
  j["space"] = profile.space_name;
  j["entries"] = json::array();
  for (const auto& e : profile.entries) {
    json je;
    je["t"] = e.t;
    je["status"] = to_string(e.status);
    if (e.status == DivStatus::kExact || e.status == DivStatus::kUpperBound) je["div"] = e.div;
    je["path_len"] = e.path_len;
    if (!e.note.empty()) je["note"] = e.note;
    j["entries"].push_back(std::move(je));
  }
  try {
    GrowthFit fit = fit_growth_exponent(profile);
    j["fit"] = {{"slope", fit.slope},
                {"max_residual", fit.max_residual},
                {"points", fit.points},
                {"ok", fit.ok}};
  } catch (const UsageError&) {
    j["fit"] = nullptr;
  }
  return j.dump(2);
}

void write_witness_jsonl(std::ostream& os, const CoarseSpace& space,
                         const std::vector<Point>& witness) {
  for (std::size_t i = 0; i < witness.size(); ++i) {
    json j;
    j["i"] = i;
    j["point"] = witness[i];
    j["label"] = space.describe(witness[i]);
    os << j.dump() << "\n";
  }
}

}  // namespace divlab
