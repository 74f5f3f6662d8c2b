#include "tworoots/json_io.hpp"

#include <stdexcept>

namespace tworoots::io {

json to_json(const Diagram& d) {
  if (d.is_y()) return {{"kind", "Y"}, {"a", d.a()}, {"b", d.b()}, {"c", d.c()}};
  return {{"kind", "Path"}, {"n", d.n()}};
}

Diagram diagram_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Y") return Diagram::y(j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>());
  if (kind == "Path") return Diagram::path(j.at("n").get<int>());
  throw std::invalid_argument("unknown diagram kind '" + kind + "'");
}

json to_json(const Root& r) { return json(r); }
Root root_from_json(const json& j) { return j.get<Root>(); }

json to_json(const EpsilonForm& e) {
  json j{{"sign", e.plus ? "+" : "-"}, {"i", e.i}, {"j", e.j}};
  if (e.negated) j["negated"] = true;
  return j;
}

EpsilonForm epsilon_from_json(const json& j) {
  EpsilonForm e;
  const std::string s = j.at("sign").get<std::string>();
  if (s != "+" && s != "-") throw std::invalid_argument("epsilon sign must be + or -");
  e.plus = s == "+";
  e.i = j.at("i").get<std::size_t>();
  e.j = j.at("j").get<std::size_t>();
  e.negated = j.value("negated", false);
  return e;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<Int>(row.begin(), row.end()));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  const auto rows = j.get<std::vector<std::vector<Int>>>();
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

json tworoot_to_json(const IntMatrix& s, bool with_components) {
  json j{{"S", to_json(s)}};
  if (with_components) {
    try {
      const auto [a, b] = components(s);
      j["components"] = {a, b};
    } catch (const std::invalid_argument&) {
      // not a decomposable element; leave components out
    }
  }
  return j;
}

IntMatrix tworoot_from_json(const json& j) {
  IntMatrix s = matrix_from_json(j.at("S"));
  if (!s.is_symmetric()) throw std::invalid_argument("S must be a symmetric matrix");
  if (j.contains("components")) {
    const auto c = j.at("components");
    if (vee(root_from_json(c.at(0)), root_from_json(c.at(1))) != s)
      throw std::invalid_argument("components do not match S");
  }
  return s;
}

json to_json(const RootPair& p) { return json::array({p.first, p.second}); }

RootPair root_pair_from_json(const json& j) { return RootPair::make(root_from_json(j.at(0)), root_from_json(j.at(1))); }

json to_json(const OrbitTable& o, bool with_members) {
  json j{{"id", o.id},
         {"size", o.size()},
         {"basis_members", o.basis_members},
         {"highest", tworoot_to_json(o.highest.tworoot())},
         {"height", o.height}};
  if (with_members) {
    json m = json::array();
    for (const auto& p : o.members) m.push_back(to_json(p));
    j["members"] = std::move(m);
  }
  return j;
}

OrbitTable orbit_from_json(const json& j) {
  OrbitTable o;
  o.id = j.at("id").get<std::size_t>();
  o.basis_members = j.at("basis_members").get<std::vector<std::size_t>>();
  const auto [a, b] = components(tworoot_from_json(j.at("highest")));
  o.highest = RootPair::make(a, b);
  o.height = j.at("height").get<Int>();
  if (j.contains("members")) {
    for (const auto& m : j.at("members")) o.members.push_back(root_pair_from_json(m));
    if (o.members.size() != j.at("size").get<std::size_t>()) throw std::invalid_argument("orbit size does not match members");
  }
  return o;
}

json coords_to_json(const CanonicalBasis& basis, const IntVector& coords, const std::vector<std::string>& names) {
  json legend = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) legend.push_back(basis.label(k, names));
  return {{"coords", coords}, {"legend", legend}};
}

json to_json(const Decomposition& d) {
  return {{"dim_s2v", d.dim_s2v},
          {"omega_dim", d.omega_dim},
          {"dims", d.dims},
          {"orbit_ids", d.orbit_ids},
          {"radical_dims", d.radical_dims}};
}

}  // namespace tworoots::io
