#include "tworoots/skein.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tworoots {

namespace {

std::size_t point_count(const Diagram& d) { return d.is_y() ? d.n() : d.n() + 1; }

Arc arc_of(const EpsilonForm& e) { return {e.i, e.j, e.plus}; }

}  // namespace

ArcDiagram arc_diagram(const Diagram& d, const IntMatrix& tworoot) {
  if (!has_epsilon_model(d)) throw std::invalid_argument("arc diagrams exist for types A and D only");
  const auto [a, b] = components(positive_normal(tworoot));
  ArcDiagram out{point_count(d), {arc_of(epsilon_coords(d, a)), arc_of(epsilon_coords(d, b))}};
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

Skein skein_expand(const CanonicalBasis& basis, const IntMatrix& tworoot) {
  const Diagram& d = basis.diagram();
  Skein s;
  s.lhs = arc_diagram(d, tworoot);
  const auto [a, b] = components(positive_normal(tworoot));
  s.components = {epsilon_coords(d, a), epsilon_coords(d, b)};
  const IntVector c = basis.expand(tworoot);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) s.terms.push_back({c[k], k, arc_diagram(d, basis[k].s)});
  return s;
}

std::string render_arcs(const ArcDiagram& a) {
  std::ostringstream out;
  const std::size_t width = 3;
  auto col = [&](std::size_t p) { return (p - 1) * width; };
  std::string labels;
  for (std::size_t p = 1; p <= a.points; ++p) {
    std::string l = std::to_string(p);
    labels += l + std::string(width - std::min(width - 1, l.size()), ' ');
  }
  while (!labels.empty() && labels.back() == ' ') labels.pop_back();
  out << labels << '\n';
  for (const Arc& arc : a.arcs) {
    std::string row(col(arc.j) + 1, ' ');
    for (std::size_t x = col(arc.i); x <= col(arc.j); ++x) row[x] = arc.decorated ? '*' : '-';
    row[col(arc.i)] = '+';
    row[col(arc.j)] = '+';
    out << row << '\n';
  }
  return out.str();
}

std::string render_skein(const CanonicalBasis& basis, const Skein& s, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << to_string(s.components[0]) << " v " << to_string(s.components[1]) << '\n' << render_arcs(s.lhs);
  bool first = true;
  for (const auto& t : s.terms) {
    const char* sign = t.coefficient < 0 ? "-" : (first ? "=" : "+");
    out << sign << ' ' << (t.coefficient < 0 ? -t.coefficient : t.coefficient) << " x " << basis.label(t.basis_index, names)
        << '\n'
        << render_arcs(t.diagram);
    first = false;
  }
  return out.str();
}

}  // namespace tworoots
