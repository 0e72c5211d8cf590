#include "zerocyc/config_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace zerocyc::config {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

void check_fields(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) fail("unknown field '" + key + "' in " + where);
  }
}

std::string require_string(const json& obj, const char* field,
                           const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) fail("missing field '" + std::string(field) + "' in " + where);
  if (!it->is_string())
    fail("field '" + std::string(field) + "' in " + where + " must be a string");
  return it->get<std::string>();
}

Slot parse_slot(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "a") return Slot::A;
    if (s == "b") return Slot::B;
  }
  fail("branch slot must be \"a\" or \"b\"");
}

}  // namespace

GluingConfiguration parse_configuration(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) fail("top-level value must be an object");
  check_fields(doc, "configuration",
               {"name", "upstream_components", "upstream_points",
                "component_map", "point_blocks", "branch_classes"});

  GluingConfiguration cfg;
  cfg.name = require_string(doc, "name", "configuration");

  std::set<std::string> comp_ids;
  if (!doc.contains("upstream_components") ||
      !doc["upstream_components"].is_array())
    fail("'upstream_components' must be an array");
  for (const json& jc : doc["upstream_components"]) {
    if (!jc.is_object()) fail("component entries must be objects");
    check_fields(jc, "upstream component", {"id", "label"});
    UpstreamComponent c;
    c.id = require_string(jc, "id", "upstream component");
    if (jc.contains("label")) c.label = require_string(jc, "label", c.id);
    if (!comp_ids.insert(c.id).second) fail("duplicate id '" + c.id + "'");
    cfg.upstream_components.push_back(std::move(c));
  }

  std::set<std::string> point_ids;
  if (!doc.contains("upstream_points") || !doc["upstream_points"].is_array())
    fail("'upstream_points' must be an array");
  for (const json& jp : doc["upstream_points"]) {
    if (!jp.is_object()) fail("point entries must be objects");
    check_fields(jp, "upstream point", {"id", "label", "branches"});
    UpstreamPoint p;
    p.id = require_string(jp, "id", "upstream point");
    if (jp.contains("label")) p.label = require_string(jp, "label", p.id);
    if (!jp.contains("branches") || !jp["branches"].is_array() ||
        jp["branches"].size() != 2)
      fail("point '" + p.id + "' must list exactly two branch components");
    for (const json& b : jp["branches"])
      if (!b.is_string()) fail("branch entries of '" + p.id + "' must be strings");
    p.branch_a = jp["branches"][0].get<std::string>();
    p.branch_b = jp["branches"][1].get<std::string>();
    for (const std::string& c : {p.branch_a, p.branch_b})
      if (!comp_ids.count(c)) fail("unknown id '" + c + "' in point '" + p.id + "'");
    if (!point_ids.insert(p.id).second) fail("duplicate id '" + p.id + "'");
    cfg.upstream_points.push_back(std::move(p));
  }

  if (!doc.contains("component_map") || !doc["component_map"].is_object())
    fail("'component_map' must be an object");
  for (const auto& [up, down] : doc["component_map"].items()) {
    if (!comp_ids.count(up)) fail("unknown id '" + up + "' in component_map");
    if (!down.is_string()) fail("component_map values must be strings");
    cfg.component_map.emplace(up, down.get<std::string>());
  }
  for (const std::string& id : comp_ids)
    if (!cfg.component_map.count(id))
      fail("component '" + id + "' is missing from component_map");

  if (!doc.contains("point_blocks") || !doc["point_blocks"].is_array())
    fail("'point_blocks' must be an array");
  std::set<std::string> block_labels;
  std::set<std::string> blocked_points;
  for (const json& jb : doc["point_blocks"]) {
    if (!jb.is_object()) fail("point block entries must be objects");
    check_fields(jb, "point block", {"label", "points"});
    PointBlock block;
    block.label = require_string(jb, "label", "point block");
    if (!block_labels.insert(block.label).second)
      fail("duplicate id '" + block.label + "' among point block labels");
    if (!jb.contains("points") || !jb["points"].is_array())
      fail("point block '" + block.label + "' must list its points");
    for (const json& jp : jb["points"]) {
      if (!jp.is_string()) fail("point ids must be strings");
      std::string pid = jp.get<std::string>();
      if (!point_ids.count(pid))
        fail("unknown id '" + pid + "' in point block '" + block.label + "'");
      if (!blocked_points.insert(pid).second)
        fail("point '" + pid + "' appears in more than one block");
      block.points.push_back(std::move(pid));
    }
    cfg.point_blocks.push_back(std::move(block));
  }
  for (const std::string& pid : point_ids)
    if (!blocked_points.count(pid))
      fail("point '" + pid + "' is not assigned to any point block");

  if (!doc.contains("branch_classes") || !doc["branch_classes"].is_array())
    fail("'branch_classes' must be an array");
  std::set<std::pair<std::string, Slot>> seen_branches;
  for (const json& jc : doc["branch_classes"]) {
    if (!jc.is_array()) fail("branch classes must be arrays of branches");
    std::vector<BranchRef> cls;
    for (const json& jb : jc) {
      if (!jb.is_array() || jb.size() != 2 || !jb[0].is_string())
        fail("a branch must be a [pointId, slot] pair");
      BranchRef ref;
      ref.point = jb[0].get<std::string>();
      ref.slot = parse_slot(jb[1]);
      if (!point_ids.count(ref.point))
        fail("unknown id '" + ref.point + "' in branch_classes");
      if (!seen_branches.insert({ref.point, ref.slot}).second)
        fail("branch [" + ref.point + ", " +
             (ref.slot == Slot::A ? "a" : "b") +
             "] appears in more than one class");
      cls.push_back(std::move(ref));
    }
    cfg.branch_classes.push_back(std::move(cls));
  }
  if (seen_branches.size() != 2 * cfg.upstream_points.size())
    fail("branch_classes must partition all branches: " +
         std::to_string(seen_branches.size()) + " listed, " +
         std::to_string(2 * cfg.upstream_points.size()) + " expected");

  return cfg;
}

GluingConfiguration load_configuration_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_configuration(buf.str());
}

std::string serialize(const GluingConfiguration& cfg) {
  ordered_json doc;
  doc["name"] = cfg.name;
  doc["upstream_components"] = ordered_json::array();
  for (const UpstreamComponent& c : cfg.upstream_components) {
    ordered_json jc;
    jc["id"] = c.id;
    if (!c.label.empty()) jc["label"] = c.label;
    doc["upstream_components"].push_back(std::move(jc));
  }
  doc["upstream_points"] = ordered_json::array();
  for (const UpstreamPoint& p : cfg.upstream_points) {
    ordered_json jp;
    jp["id"] = p.id;
    if (!p.label.empty()) jp["label"] = p.label;
    jp["branches"] = {p.branch_a, p.branch_b};
    doc["upstream_points"].push_back(std::move(jp));
  }
  doc["component_map"] = ordered_json::object();
  for (const auto& [up, down] : cfg.component_map)
    doc["component_map"][up] = down;
  doc["point_blocks"] = ordered_json::array();
  for (const PointBlock& b : cfg.point_blocks) {
    ordered_json jb;
    jb["label"] = b.label;
    jb["points"] = b.points;
    doc["point_blocks"].push_back(std::move(jb));
  }
  doc["branch_classes"] = ordered_json::array();
  for (const auto& cls : cfg.branch_classes) {
    ordered_json jc = ordered_json::array();
    for (const BranchRef& b : cls)
      jc.push_back({b.point, b.slot == Slot::A ? "a" : "b"});
    doc["branch_classes"].push_back(std::move(jc));
  }
  return doc.dump(2) + "\n";
}

}  // namespace zerocyc::config
