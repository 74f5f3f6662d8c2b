// Command-line front end for the 2-root library.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "tworoots/forms.hpp"
#include "tworoots/json_io.hpp"
#include "tworoots/orbits.hpp"
#include "tworoots/skein.hpp"
#include "verify_suites.hpp"

using namespace tworoots;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<int> y;
  int path = 0;
  bool json_out = false;
  std::uint64_t seed = 1;
  Int height_bound = 0;
  std::string word;
  Int prime = 0;
  std::string numbering;
  std::uint64_t max_order = 60000;
  std::uint64_t words = 10000;
  bool check_coherence = false;
  std::string alpha, beta, eps;
  std::string suite = "all";
};

Diagram make_diagram(const Options& o) {
  if (!o.y.empty() && o.path) throw UsageError("give either --y or --path, not both");
  if (o.y.size() == 3) return Diagram::y(o.y[0], o.y[1], o.y[2]);
  if (o.path) return Diagram::path(o.path);
  throw UsageError("a diagram is required: --y A B C or --path N");
}

std::vector<std::string> vertex_names(const Diagram& d, const Options& o) {
  if (o.numbering.empty()) return {};
  if (o.numbering != "d" && o.numbering != "e") throw UsageError("--paper-numbering takes d or e");
  return classical_labels(d, o.numbering[0]);
}

std::string root_text(const Root& r) {
  std::ostringstream s;
  s << '(';
  for (std::size_t k = 0; k < r.size(); ++k) s << (k ? "," : "") << r[k];
  s << ')';
  return s.str();
}

Root parse_root(const std::string& text, std::size_t n) {
  Root r;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) r.push_back(std::stoll(tok));
  if (r.size() != n) throw UsageError("root '" + text + "' needs " + std::to_string(n) + " coefficients");
  return r;
}

// "e1+e4,e2+e3" -> two epsilon forms
std::vector<EpsilonForm> parse_eps(const std::string& text) {
  static const std::regex one(R"(\s*(-?)e(\d+)\s*([+-])\s*e(\d+)\s*)");
  std::vector<EpsilonForm> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::smatch m;
    if (!std::regex_match(tok, m, one)) throw UsageError("cannot parse epsilon form '" + tok + "'");
    out.push_back({m[3] == "+", std::stoul(m[2]), std::stoul(m[4]), m[1] == "-"});
  }
  return out;
}

IntMatrix input_tworoot(const Diagram& d, const Options& o) {
  if (!o.eps.empty()) {
    const auto e = parse_eps(o.eps);
    if (e.size() != 2) throw UsageError("--eps needs two forms separated by a comma");
    return vee(root_from_epsilon(d, e[0]), root_from_epsilon(d, e[1]));
  }
  if (o.alpha.empty() || o.beta.empty()) throw UsageError("give --alpha and --beta, or --eps");
  const Root a = parse_root(o.alpha, d.n()), b = parse_root(o.beta, d.n());
  if (bform(d.cartan(), a, b) != 0) throw UsageError("the two roots are not orthogonal");
  return vee(a, b);
}

std::string pair_text(const RootPair& p) { return root_text(p.first) + " v " + root_text(p.second); }

int cmd_basis(const Options& o) {
  const Diagram d = make_diagram(o);
  const auto basis = CanonicalBasis::build(d);
  const auto names = vertex_names(d, o);
  if (o.json_out) {
    json rows = json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto [a, b] = components(basis[k].s);
      rows.push_back({{"index", k}, {"label", basis.label(k, names)}, {"components", {a, b}}});
    }
    std::cout << json{{"diagram", io::to_json(d)}, {"size", basis.size()}, {"basis", rows}}.dump(2) << '\n';
    return 0;
  }
  std::cout << d.type_name() << ": " << basis.size() << " basis elements\n";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto [a, b] = components(basis[k].s);
    std::cout << std::setw(4) << k << "  " << std::left << std::setw(20) << basis.label(k, names) << std::right << "  "
              << root_text(a) << " v " << root_text(b) << '\n';
  }
  return 0;
}

int cmd_roots(const Options& o) {
  const Diagram d = make_diagram(o);
  std::optional<Int> bound;
  if (o.height_bound > 0) bound = o.height_bound;
  const auto roots = positive_roots(d, bound);
  if (o.json_out) {
    std::cout << json{{"diagram", io::to_json(d)}, {"count", roots.size()}, {"roots", roots}}.dump(2) << '\n';
    return 0;
  }
  const bool eps = has_epsilon_model(d);
  std::cout << d.type_name() << ": " << roots.size() << " positive roots\n";
  for (const auto& r : roots) {
    std::cout << std::setw(4) << height(r) << "  " << root_text(r);
    if (eps) std::cout << "  " << to_string(epsilon_coords(d, r));
    std::cout << '\n';
  }
  return 0;
}

int cmd_orbits(const Options& o) {
  const Diagram d = make_diagram(o);
  const auto basis = CanonicalBasis::build(d);
  if (d.classify() != TypeClass::Finite) {
    if (o.height_bound <= 0) throw UsageError("infinite types need --height-bound");
    const auto [a, b] = components(basis[0].s);
    const auto members = orbit_of(basis, RootPair::make(a, b), o.height_bound);
    if (o.json_out) {
      json m = json::array();
      for (const auto& p : members) m.push_back(io::to_json(p));
      std::cout << json{{"diagram", io::to_json(d)}, {"height_bound", o.height_bound}, {"members", m}}.dump(2) << '\n';
    } else {
      std::cout << d.type_name() << " (" << to_string(d.classify()) << "): " << members.size()
                << " positive 2-roots with ht2 <= " << o.height_bound << '\n';
    }
    return 0;
  }
  const auto orbits = enumerate_orbits(basis);
  if (o.json_out) {
    json arr = json::array();
    for (const auto& orb : orbits) arr.push_back(io::to_json(orb));
    std::cout << json{{"diagram", io::to_json(d)}, {"orbits", arr}}.dump(2) << '\n';
    return 0;
  }
  std::cout << std::setw(4) << "id" << std::setw(8) << "size" << std::setw(8) << "|B|" << std::setw(8) << "height"
            << "  highest\n";
  for (const auto& orb : orbits)
    std::cout << std::setw(4) << orb.id << std::setw(8) << orb.size() << std::setw(8) << orb.basis_members.size()
              << std::setw(8) << orb.height << "  " << pair_text(orb.highest) << '\n';
  return 0;
}

int cmd_highest(const Options& o) {
  const Diagram d = make_diagram(o);
  const auto basis = CanonicalBasis::build(d);
  if (d.classify() != TypeClass::Finite) throw UsageError("highest 2-roots exist for finite types only");
  const auto orbits = enumerate_orbits(basis);
  const auto names = vertex_names(d, o);
  json arr = json::array();
  for (const auto& orb : orbits) {
    const IntVector c = basis.expand(orb.highest.tworoot());
    if (o.json_out) {
      arr.push_back({{"orbit", orb.id},
                     {"highest", io::to_json(orb.highest)},
                     {"height", orb.height},
                     {"coords", io::coords_to_json(basis, c, names)}});
      continue;
    }
    std::cout << "orbit " << orb.id << ": height " << orb.height << "  " << pair_text(orb.highest) << '\n';
    if (has_epsilon_model(d))
      std::cout << "  " << to_string(epsilon_coords(d, orb.highest.first)) << " v "
                << to_string(epsilon_coords(d, orb.highest.second)) << '\n';
  }
  if (o.json_out) std::cout << json{{"diagram", io::to_json(d)}, {"highest", arr}}.dump(2) << '\n';
  return 0;
}

int cmd_expand(const Options& o) {
  const Diagram d = make_diagram(o);
  const auto basis = CanonicalBasis::build(d);
  const IntMatrix t = input_tworoot(d, o);
  const IntVector c = basis.expand(t);
  const auto names = vertex_names(d, o);
  const Sign s = coherence_sign(c);
  if (o.json_out) {
    json j = io::coords_to_json(basis, c, names);
    j["sign"] = to_string(s);
    j["input"] = io::tworoot_to_json(t);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) std::cout << std::setw(6) << c[k] << "  " << basis.label(k, names) << '\n';
  std::cout << "sign: " << to_string(s) << '\n';
  return 0;
}

int cmd_matrix(const Options& o) {
  const Diagram d = make_diagram(o);
  const auto basis = CanonicalBasis::build(d);
  const IntMatrix m = word_matrix(basis, parse_word(o.word, d.n()));
  std::size_t bad = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (coherence_sign(m.column(j)) == Sign::Mixed) ++bad;
  if (o.json_out) {
    json j{{"diagram", io::to_json(d)}, {"word", o.word}, {"matrix", io::to_json(m)}};
    if (o.check_coherence) j["incoherent_columns"] = bad;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << m;
    if (o.check_coherence) std::cout << "incoherent columns: " << bad << '\n';
  }
  return o.check_coherence && bad ? 1 : 0;
}

int cmd_decompose(const Options& o) {
  const Diagram d = make_diagram(o);
  const auto basis = CanonicalBasis::build(d);
  if (d.classify() == TypeClass::Affine) {
    const auto w = affine_radical_witness(basis);
    if (o.json_out) {
      std::cout << json{{"diagram", io::to_json(d)},
                        {"delta", w.delta},
                        {"radical_dim", w.radical_dim},
                        {"witness_rank", w.witness_rank},
                        {"witnesses_in_radical", w.witnesses_in_radical},
                        {"delta_delta_in_span", w.delta_delta_in_span}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << d.type_name() << ": radical of B' on M has dimension " << w.radical_dim << "\n  delta "
                << root_text(w.delta) << ", rank of delta v alpha_i " << w.witness_rank << ", in radical "
                << (w.witnesses_in_radical ? "yes" : "no") << ", delta v delta in span "
                << (w.delta_delta_in_span ? "yes" : "no") << '\n';
    }
    return 0;
  }
  std::optional<Int> p;
  if (o.prime > 0) p = o.prime;
  const auto dec = decompose_s2v(basis);
  json mod_p = json::array();
  if (p) {
    for (std::size_t k = 0; k < dec.orbit_ids.size(); ++k) {
      std::vector<std::size_t> idx;
      if (d.classify() == TypeClass::Finite) {
        idx = enumerate_orbits(basis).at(dec.orbit_ids[k]).basis_members;
      } else {
        for (std::size_t x = 0; x < basis.size(); ++x) idx.push_back(x);
      }
      mod_p.push_back(radical_mod_p(gram(basis.cartan(), basis_matrices(basis, idx), p), *p).size());
    }
  }
  if (o.json_out) {
    json j = io::to_json(dec);
    if (p) j["radical_dims_mod_p"] = mod_p;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "dim S^2(V) = " << dec.dim_s2v << " = " << dec.omega_dim;
  for (std::size_t x : dec.dims) std::cout << " + " << x;
  std::cout << '\n';
  for (std::size_t k = 0; k < dec.dims.size(); ++k) {
    std::cout << "  summand " << k << " (orbit " << dec.orbit_ids[k] << "): dim " << dec.dims[k] << ", radical "
              << dec.radical_dims[k];
    if (p) std::cout << ", radical mod " << *p << ": " << mod_p[k].get<std::size_t>();
    std::cout << '\n';
  }
  return 0;
}

int cmd_kernel(const Options& o) {
  const Diagram d = make_diagram(o);
  const std::uint64_t order = cli::weyl_group_order(d);
  if (order == 0) throw UsageError("no classical group order for " + d.type_name());
  if (order > o.max_order)
    throw UsageError("|W| = " + std::to_string(order) + " exceeds --max-order " + std::to_string(o.max_order));
  const auto basis = CanonicalBasis::build(d);
  json arr = json::array();
  for (const auto& orb : enumerate_orbits(basis)) {
    const std::uint64_t k = action_kernel_order(basis, orb, order);
    if (o.json_out)
      arr.push_back({{"orbit", orb.id}, {"size", orb.size()}, {"kernel_order", k}});
    else
      std::cout << "orbit " << orb.id << " (size " << orb.size() << "): kernel order " << k << '\n';
  }
  if (o.json_out) std::cout << json{{"diagram", io::to_json(d)}, {"group_order", order}, {"kernels", arr}}.dump(2) << '\n';
  return 0;
}

int cmd_skein(const Options& o) {
  const Diagram d = make_diagram(o);
  const auto basis = CanonicalBasis::build(d);
  const Skein s = skein_expand(basis, input_tworoot(d, o));
  if (o.json_out) {
    auto arcs = [](const ArcDiagram& a) {
      json out = json::array();
      for (const auto& arc : a.arcs) out.push_back({{"i", arc.i}, {"j", arc.j}, {"decorated", arc.decorated}});
      return out;
    };
    json terms = json::array();
    for (const auto& t : s.terms)
      terms.push_back({{"coefficient", t.coefficient}, {"basis_index", t.basis_index}, {"arcs", arcs(t.diagram)}});
    std::cout << json{{"points", s.lhs.points}, {"lhs", arcs(s.lhs)}, {"terms", terms}}.dump(2) << '\n';
    return 0;
  }
  // arcs are numbered from 1, so default to the classical labels
  const auto names = o.numbering.empty() ? classical_labels(d, 'd') : vertex_names(d, o);
  std::cout << render_skein(basis, s, names);
  return 0;
}

int cmd_verify(const Options& o) {
  const auto results = cli::run_suite(o.suite, {o.seed, o.max_order, o.words});
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (o.json_out)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(5) << r.id << std::setw(36) << r.name
                << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.detail
                << '\n';
  }
  if (o.json_out) std::cout << json{{"suite", o.suite}, {"pass", ok}, {"checks", arr}}.dump(2) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-roots of simply laced Weyl groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--y", o.y, "arm lengths of Y(a,b,c)")->expected(3);
  app.add_option("--path", o.path, "type A_n as a path on N vertices");
  app.add_flag("--json", o.json_out, "JSON output");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--height-bound", o.height_bound, "height bound for roots and bounded orbits");
  app.add_option("--prime", o.prime, "also compute radicals mod P");
  app.add_option("--paper-numbering", o.numbering, "label vertices in the classical d or e scheme");
  app.add_option("--max-order", o.max_order, "largest group order for kernel closures");

  std::map<std::string, std::function<int(const Options&)>> run{
      {"basis", cmd_basis},         {"roots", cmd_roots},   {"orbits", cmd_orbits}, {"highest", cmd_highest},
      {"expand", cmd_expand},       {"matrix", cmd_matrix}, {"decompose", cmd_decompose},
      {"kernel", cmd_kernel},       {"skein", cmd_skein},   {"verify", cmd_verify}};

  app.add_subcommand("basis", "list the canonical basis");
  app.add_subcommand("roots", "list positive roots");
  app.add_subcommand("orbits", "orbits of positive 2-roots");
  app.add_subcommand("highest", "highest 2-root of each orbit");
  auto* expand = app.add_subcommand("expand", "expand a 2-root in the canonical basis");
  auto* matrix = app.add_subcommand("matrix", "matrix of a word acting on the canonical basis");
  app.add_subcommand("decompose", "decomposition of S^2(V)");
  app.add_subcommand("kernel", "kernels of the orbit actions");
  auto* skein = app.add_subcommand("skein", "arc diagram expansion for types A and D");
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");

  for (auto* sub : {expand, skein}) {
    sub->add_option("--alpha", o.alpha, "first root as comma separated coefficients");
    sub->add_option("--beta", o.beta, "second root as comma separated coefficients");
    sub->add_option("--eps", o.eps, "two roots in epsilon form, e.g. e1+e4,e2+e3");
  }
  matrix->add_option("--word", o.word, "space separated vertices, the last acts first");
  matrix->add_flag("--check-sign-coherence", o.check_coherence, "exit 1 if a column has mixed signs");
  verify->add_option("suite", o.suite, "basis, orbits, coherence, highest, forms, kernels or all")
      ->check(CLI::IsMember(cli::suite_names()));
  verify->add_option("--words", o.words, "random words per infinite type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run.at(app.get_subcommands().front()->get_name())(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
