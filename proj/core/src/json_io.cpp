#include "wheelgebra/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wheelgebra/expr.hpp"

namespace wg {

namespace {

using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::unique_ptr<Quiver> load_quiver_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
  std::map<std::string, int> vid;
  for (size_t i = 0; i < vertices.size(); ++i) vid[vertices[i]] = static_cast<int>(i);
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    Arrow ar;
    ar.name = a.at("name").get<std::string>();
    auto t = vid.find(a.at("tail").get<std::string>());
    auto h = vid.find(a.at("head").get<std::string>());
    if (t == vid.end() || h == vid.end())
      throw std::runtime_error("arrow " + ar.name + ": unknown vertex");
    ar.tail = t->second;
    ar.head = h->second;
    arrows.push_back(ar);
  }
  bool doubled = j.value("double", true);
  int star_parity = j.value("star_parity", 1);
  bool omega = j.value("omega", true);
  return std::make_unique<Quiver>(std::move(vertices), std::move(arrows), doubled,
                                  star_parity, omega);
}

std::unique_ptr<Quiver> load_quiver_file(const std::string& path) {
  return load_quiver_json(slurp(path));
}

Connection load_connection_json(const Quiver& q, const std::string& text) {
  json j = json::parse(text);
  Connection nab(&q);
  for (const auto& rec : j) {
    auto name = rec.at("arrow").get<std::string>();
    auto id = q.arrow_id(name);
    if (!id || q.arrow(*id).stratum != Stratum::Base)
      throw std::runtime_error("connection: unknown plain arrow " + name);
    WheelElement left(&q), right(&q);
    if (rec.contains("left"))
      for (const auto& s : rec.at("left")) left += eval_element(q, s.get<std::string>());
    if (rec.contains("right"))
      for (const auto& s : rec.at("right")) right += eval_element(q, s.get<std::string>());
    nab.set_left(*id, left);
    nab.set_right(*id, right);
  }
  return nab;
}

Connection load_connection_file(const Quiver& q, const std::string& path) {
  return load_connection_json(q, slurp(path));
}

std::string wheel_to_json(const WheelElement& u) {
  const Quiver* q = u.quiver();
  json terms = json::array();
  for (const auto& [k, c] : u.terms()) {
    json t;
    t["coeff"] = rat_str(c);
    json sigma = json::array();
    for (int v : k.sigma) sigma.push_back(v + 1);
    t["sigma"] = sigma;
    json word = json::array();
    for (const auto& w : k.word) word.push_back(w.str(*q));
    t["word"] = word;
    json cycs = json::array();
    for (const auto& cy : k.cycs) cycs.push_back(cy.str(*q));
    t["cyclic"] = cycs;
    terms.push_back(t);
  }
  return terms.dump();
}

}  // namespace wg
