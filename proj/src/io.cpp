#include "sqtile/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sqtile {

using nlohmann::json;

namespace {

Rational frac(const json& j) {
  if (!j.is_string()) throw std::runtime_error("expected a fraction string");
  auto r = parse_fraction(j.get<std::string>());
  if (!r) throw std::runtime_error("bad fraction: " + j.get<std::string>());
  return *r;
}

}  // namespace

std::string tiling_to_json(const Tiling& t) {
  json j;
  j["width"] = fraction_str(t.width);
  j["height"] = fraction_str(t.height);
  json sq = json::array();
  for (const auto& s : t.squares) {
    sq.push_back({{"x", fraction_str(s.x)}, {"y", fraction_str(s.y)}, {"side", fraction_str(s.side)}});
  }
  j["squares"] = sq;
  if (t.residual) {
    json r;
    r["type"] = "rect";
    r["x"] = fraction_str(t.residual->x);
    r["y"] = fraction_str(t.residual->y);
    r["width"] = fraction_str(t.residual->w);
    r["height"] = fraction_str(t.residual->h);
    if (t.residual_trivial) r["trivial"] = true;
    j["residual"] = r;
  } else {
    j["residual"] = nullptr;
  }
  return j.dump(2) + "\n";
}

Tiling tiling_from_json(const std::string& text) {
  json j = json::parse(text);
  Tiling t;
  t.width = frac(j.at("width"));
  t.height = frac(j.at("height"));
  for (const auto& s : j.at("squares")) {
    t.squares.push_back({frac(s.at("x")), frac(s.at("y")), frac(s.at("side"))});
  }
  if (j.contains("residual") && !j.at("residual").is_null()) {
    const auto& r = j.at("residual");
    t.residual = Rect{frac(r.at("x")), frac(r.at("y")), frac(r.at("width")), frac(r.at("height"))};
    t.residual_trivial = r.value("trivial", false);
  }
  return t;
}

std::string network_to_json(const ResistorNetwork& g) {
  json j;
  json verts = json::array();
  for (std::size_t v = 0; v < g.vertex_count; ++v) verts.push_back(static_cast<int>(v));
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = edges;
  j["a"] = g.pole_a;
  j["b"] = g.pole_b;
  if (g.has_rotation()) {
    json rot = json::object();
    for (std::size_t v = 0; v < g.rotation.size(); ++v)
      rot[std::to_string(v)] = g.rotation[v];
    j["rotation"] = rot;
  }
  return j.dump(2) + "\n";
}

ResistorNetwork network_from_json(const std::string& text) {
  json j = json::parse(text);
  ResistorNetwork g;
  g.vertex_count = j.at("vertices").size();
  for (const auto& e : j.at("edges")) {
    g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  g.pole_a = j.at("a").get<int>();
  g.pole_b = j.at("b").get<int>();
  if (j.contains("rotation") && !j.at("rotation").is_null()) {
    g.rotation.assign(g.vertex_count, {});
    for (auto& [key, val] : j.at("rotation").items()) {
      std::size_t v = std::stoul(key);
      if (v >= g.vertex_count) throw std::runtime_error("rotation references unknown vertex");
      g.rotation[v] = val.get<std::vector<int>>();
    }
  }
  return g;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace sqtile
