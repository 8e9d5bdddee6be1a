#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "divlab/groups/config.hpp"
#include "divlab/groups/rays.hpp"
#include "divlab/metric/divergence.hpp"
#include "divlab/metric/io.hpp"

namespace {

using namespace divlab;
using nlohmann::json;

struct CommonOpts {
  std::string space_kind = "z2";
  std::size_t max_states = 10'000'000;
  std::uint64_t seed = 0;
};

SearchLimits limits_of(const CommonOpts& c) {
  SearchLimits l;
  l.max_states = c.max_states;
  return l;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot open output file " + path);
  os << content;
}

// Finds the letter carrying one witness vertex to the next; the step
// exists because witnesses are edge paths.
int connecting_letter(const CayleySpace& s, Point from, Point to) {
  std::vector<Point> nbr;
  s.neighbors(from, nbr);
  for (int l = 0; l < static_cast<int>(nbr.size()); ++l)
    if (nbr[static_cast<std::size_t>(l)] == to) return l;
  throw FalsificationError("witness vertices are not adjacent",
                           s.describe(from) + " -> " + s.describe(to));
}

std::string profile_with_meta(const DivergenceProfile& profile, const CommonOpts& common,
                              const std::string& ray1, const std::string& ray2) {
  json j = json::parse(profile_to_json(profile));
  j["config"] = {{"space", common.space_kind},
                 {"ray1", ray1},
                 {"ray2", ray2},
                 {"max_states", common.max_states},
                 {"seed", common.seed}};
  return j.dump(2) + "\n";
}

int cmd_divergence(const CommonOpts& common, const std::string& ray1_spec,
                   const std::string& ray2_spec, const std::vector<Weight>& ts,
                   const std::string& csv_path, const std::string& json_path) {
  if (ts.empty()) throw UsageError("divergence needs a nonempty t list");
  auto h = make_group_space(common.space_kind);
  AxisRay r1(h.space, parse_word(*h.backend, ray1_spec), ray1_spec);
  AxisRay r2(h.space, parse_word(*h.backend, ray2_spec), ray2_spec);
  auto profile = divergence_profile(*h.space, r1.ray(1.0), r2.ray(1.0), ts, limits_of(common));
  std::ostringstream csv;
  write_profile_csv(csv, profile);
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  std::string pj = profile_with_meta(profile, common, ray1_spec, ray2_spec);
  if (!json_path.empty()) write_file(json_path, pj);
  std::cout << pj;
  return 0;
}

int cmd_path(const CommonOpts& common, const std::string& from_spec, const std::string& to_spec,
             const std::string& center_spec, Weight radius, const std::string& out_path) {
  auto h = make_group_space(common.space_kind);
  const CayleySpace& s = *h.space;
  GroupElement from = s.normalize(parse_word(*h.backend, from_spec));
  GroupElement to = s.normalize(parse_word(*h.backend, to_spec));
  GroupElement center = s.normalize(parse_word(*h.backend, center_spec));
  Ball forbidden = ball(s, center.id, radius, limits_of(common));
  std::ostringstream out;
  json header = {{"space", common.space_kind}, {"from", from_spec},      {"to", to_spec},
                 {"avoid_center", center_spec}, {"avoid_radius", radius}, {"seed", common.seed}};
  if (from.id == to.id) {
    header["status"] = "empty";
    out << header.dump() << "\n";
  } else {
    ConstrainedResult res = constrained_distance(s, from.id, to.id, forbidden, limits_of(common));
    if (res.disconnected) {
      header["status"] = "disconnected";
      out << header.dump() << "\n";
    } else {
      header["status"] = "path";
      header["length"] = res.distance;
      header["method"] = res.method;
      out << header.dump() << "\n";
      Word acc = from.word;
      for (std::size_t i = 0; i < res.witness.size(); ++i) {
        if (i > 0) acc.push_back(connecting_letter(s, res.witness[i - 1], res.witness[i]));
        json line = {{"i", i},
                     {"word", word_to_string(*h.backend, acc)},
                     {"label", s.describe(res.witness[i])}};
        out << line.dump() << "\n";
      }
    }
  }
  if (!out_path.empty()) write_file(out_path, out.str());
  std::cout << out.str();
  return 0;
}

int cmd_props(const CommonOpts& common, Weight radius) {
  auto h = make_group_space(common.space_kind);
  const CayleySpace& s = *h.space;
  json report;
  report["space"] = s.name();
  report["letters"] = json::array();
  for (int l = 0; l < h.backend->letter_count(); ++l) {
    report["letters"].push_back({{"label", h.backend->letter_label(l)},
                                 {"inverse", h.backend->letter_label(h.backend->inverse_letter(l))}});
  }
  bool ok = true;
  report["relators"] = json::array();
  for (const auto& rel : h.backend->relators()) {
    bool trivial = s.normalize(rel).id == s.basepoint();
    ok = ok && trivial;
    report["relators"].push_back(
        {{"word", word_to_string(*h.backend, rel)}, {"normalizes_to_identity", trivial}});
  }
  report["ball_sizes"] = json::array();
  for (Weight r = 1; r <= radius; ++r) {
    Ball b = ball(s, s.basepoint(), r, limits_of(common));
    report["ball_sizes"].push_back({{"radius", r}, {"size", b.dist.size()}});
  }
  report["ok"] = ok;
  std::cout << report.dump(2) << "\n";
  if (!ok) throw FalsificationError("a relator failed to normalize to the identity", s.name());
  return 0;
}

int cmd_calibrate(const CommonOpts& common, const std::string& ray_spec, Weight max_gap,
                  const std::vector<Weight>& holdout) {
  auto h = make_group_space(common.space_kind);
  AxisRay axis(h.space, parse_word(*h.backend, ray_spec), ray_spec);
  double q = calibrate_axis_quasi_constant(axis, max_gap, limits_of(common));
  json report = {{"space", common.space_kind}, {"ray", ray_spec}, {"max_gap", max_gap}, {"q", q}};
  if (!holdout.empty()) {
    double held = check_ray_contract(*h.space, axis.ray(q), holdout, limits_of(common));
    report["holdout_q"] = held;
    report["holdout_ok"] = held <= q + 1e-9;
    if (held > q + 1e-9)
      throw FalsificationError("calibrated Q fails on the held-out range",
                               ray_spec + " q=" + std::to_string(q) +
                                   " holdout=" + std::to_string(held));
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_replay(const CommonOpts& common, const std::string& file) {
  std::ifstream is(file);
  if (!is) throw UsageError("cannot open path file " + file);
  std::string line;
  if (!std::getline(is, line)) throw UsageError("path file is empty (missing header)");
  json header = json::parse(line);
  std::string kind = header.value("space", "");
  auto h = make_group_space(kind.empty() ? common.space_kind : kind);
  const CayleySpace& s = *h.space;
  GroupElement from = s.normalize(parse_word(*h.backend, header.value("from", "1")));
  GroupElement to = s.normalize(parse_word(*h.backend, header.value("to", "1")));
  GroupElement center = s.normalize(parse_word(*h.backend, header.value("avoid_center", "1")));
  Weight radius = header.value("avoid_radius", Weight{0});
  std::string status = header.value("status", "");
  json verdict;
  verdict["file"] = file;
  verdict["vertices"] = json::array();
  if (status == "empty") {
    if (from.id != to.id)
      throw FalsificationError("file claims an empty path between distinct elements", file);
    verdict["ok"] = true;
    std::cout << verdict.dump(2) << "\n";
    return 0;
  }
  Ball forbidden = ball(s, center.id, radius, limits_of(common));
  if (status == "disconnected") {
    ConstrainedResult res = constrained_distance(s, from.id, to.id, forbidden, limits_of(common));
    if (!res.disconnected)
      throw FalsificationError("file claims disconnection but a path exists", file);
    verdict["ok"] = true;
    std::cout << verdict.dump(2) << "\n";
    return 0;
  }
  std::vector<GroupElement> vertices;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line);
    vertices.push_back(s.normalize(parse_word(*h.backend, rec.value("word", "1"))));
  }
  bool all_ok = !vertices.empty();
  std::string first_bad;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    bool ok = !forbidden.contains(vertices[i].id);
    if (ok && i > 0) {
      std::vector<Point> nbr;
      s.neighbors(vertices[i - 1].id, nbr);
      ok = std::find(nbr.begin(), nbr.end(), vertices[i].id) != nbr.end();
    }
    if (i == 0) ok = ok && vertices[i].id == from.id;
    if (i + 1 == vertices.size()) ok = ok && vertices[i].id == to.id;
    verdict["vertices"].push_back({{"i", i}, {"ok", ok}});
    if (!ok && first_bad.empty()) first_bad = "vertex " + std::to_string(i);
    all_ok = all_ok && ok;
  }
  verdict["ok"] = all_ok;
  std::cout << verdict.dump(2) << "\n";
  if (!all_ok)
    throw FalsificationError("replay found an invalid vertex", first_bad.empty() ? file : first_bad);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarse divergence laboratory"};
  app.set_config("--config", "", "plain key/value config file");
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--space", common.space_kind, "space selector (z1,z2,z3,free2,free3,braid3)")
      ->capture_default_str();
  app.add_option("--max-states", common.max_states, "search capacity cap")->capture_default_str();
  app.add_option("--seed", common.seed, "experiment seed (embedded in outputs)")
      ->capture_default_str();

  auto* div = app.add_subcommand("divergence", "measure a divergence profile");
  std::string ray1 = "x", ray2 = "y";
  std::vector<Weight> ts;
  std::string csv_path, json_path;
  div->add_option("--ray1", ray1, "period word of the first ray");
  div->add_option("--ray2", ray2, "period word of the second ray");
  div->add_option("--t", ts, "t values")->delimiter(',');
  div->add_option("--csv", csv_path, "write profile CSV here");
  div->add_option("--json", json_path, "write profile JSON here");

  auto* path = app.add_subcommand("path", "shortest path avoiding a ball");
  std::string from_spec = "1", to_spec = "1", center_spec = "1", out_path;
  Weight radius = 0;
  path->add_option("--from", from_spec, "start word");
  path->add_option("--to", to_spec, "end word");
  path->add_option("--avoid-center", center_spec, "ball center word");
  path->add_option("--avoid-radius", radius, "open ball radius");
  path->add_option("--out", out_path, "write JSON lines here");

  auto* props = app.add_subcommand("props", "relator and ball sanity report");
  Weight props_radius = 3;
  props->add_option("--radius", props_radius, "max ball radius to report");

  auto* cal = app.add_subcommand("calibrate", "measure an axis ray's quasi constant");
  std::string ray_spec = "x";
  Weight max_gap = 6;
  std::vector<Weight> holdout;
  cal->add_option("--ray", ray_spec, "period word");
  cal->add_option("--max-gap", max_gap, "calibration gap bound");
  cal->add_option("--holdout", holdout, "held-out t samples to assert")->delimiter(',');

  auto* replay = app.add_subcommand("replay", "re-verify a path file from scratch");
  std::string replay_file;
  replay->add_option("file", replay_file, "JSON lines path file")->required();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(div)) return cmd_divergence(common, ray1, ray2, ts, csv_path, json_path);
    if (app.got_subcommand(path))
      return cmd_path(common, from_spec, to_spec, center_spec, radius, out_path);
    if (app.got_subcommand(props)) return cmd_props(common, props_radius);
    if (app.got_subcommand(cal)) return cmd_calibrate(common, ray_spec, max_gap, holdout);
    if (app.got_subcommand(replay)) return cmd_replay(common, replay_file);
    throw divlab::UsageError("no subcommand selected");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const divlab::FalsificationError& e) {
    std::cerr << "falsified: " << e.what() << "\n  witness: " << e.witness << "\n";
    return 1;
  } catch (const divlab::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const divlab::UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
