#include "permsimple/cayley.hpp"
#include "permsimple/classify.hpp"
#include "permsimple/complexes.hpp"
#include "permsimple/coxeter.hpp"
#include "permsimple/enumerate.hpp"
#include "permsimple/error.hpp"
#include "permsimple/notation.hpp"
#include "permsimple/planarity.hpp"
#include "permsimple/polygon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace permsimple;
using json = nlohmann::ordered_json;

namespace {

constexpr int census_cap = 10;
constexpr int graph_cap = 9;
constexpr int complex_cap = 6;

struct Globals {
  int jobs = 1;
  bool unsafe_bounds = false;
  std::string input_format = "auto";
  std::string output;
};

/// Usage problems detected after parsing; exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cap(const Globals &g, int limit)
{
  return g.unsafe_bounds ? INT_MAX : limit;
}

InputFormat input_format(const Globals &g)
{
  static const std::map<std::string, InputFormat> names{{"auto", InputFormat::automatic},
                                                        {"one-line", InputFormat::one_line},
                                                        {"cycles", InputFormat::cycles},
                                                        {"coxeter", InputFormat::coxeter}};
  return names.at(g.input_format);
}

/// Writes to --output when given, otherwise to stdout.
void emit(const Globals &g, const std::string &text)
{
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out)
    throw UsageError("cannot open " + g.output);
  out << text;
}

void write_file(const std::string &path, const std::string &text)
{
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot open " + path);
  out << text;
}

const char *yes(bool b)
{
  return b ? "true" : "false";
}

std::vector<SimpleClass> class_selection(const std::string &text)
{
  if (text == "all")
    return {std::begin(all_classes), std::end(all_classes)};
  const auto c = parse_class(text);
  if (!c)
    throw UsageError("unknown class '" + text + "'");
  return {*c};
}

SimpleClass single_class(const std::string &text)
{
  const auto c = parse_class(text);
  if (!c)
    throw UsageError("unknown class '" + text + "' (expected one of s, c, g, b, t)");
  return *c;
}

// classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string permutation;
  std::optional<int> degree;
  std::string format = "text";
};

int run_classify(const Globals &g, const ClassifyArgs &a)
{
  const auto p = parse_permutation(a.permutation, input_format(g), a.degree);
  const auto prof = classify(p);
  const auto word = coxeter_normal_form(p);
  if (a.format == "json") {
    json j;
    j["one_line"] = format_one_line(p);
    j["cycles"] = format_cycles(p);
    j["coxeter"] = format_coxeter_word(word);
    j["length"] = coxeter_length(p);
    for (auto c : all_classes)
      j[std::string(1, class_letter(c))] = prof.has(c);
    if (prof.g_witness)
      j["g_witness"] = {{"prime", prof.g_witness->prime}, {"multiplicity", prof.g_witness->multiplicity}};
    j["b_and_c"] = prof.in_b_and_c;
    j["b_and_g"] = prof.in_b_and_g;
    j["b_and_s"] = prof.in_b_and_s;
    j["b_and_t"] = prof.in_b_and_t;
    emit(g, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "one-line: " << format_one_line(p) << "\n"
      << "cycles: " << format_cycles(p) << "\n"
      << "coxeter: " << format_coxeter_word(word) << " (length " << coxeter_length(p) << ")\n";
  out << "s=" << yes(prof.s_simple) << ",c=" << yes(prof.c_simple) << ",g=" << yes(prof.g_simple)
      << ",b=" << yes(prof.b_simple) << ",t=" << yes(prof.t_simple) << "\n";
  if (prof.g_witness)
    out << "g-witness: " << prof.g_witness->multiplicity << " cycle(s) of length " << prof.g_witness->prime << "\n";
  emit(g, out.str());
  return 0;
}

// count ------------------------------------------------------------------

struct CountArgs {
  int n = 1;
  std::optional<int> from;
  std::string cls = "all";
  std::string method = "census";
  std::string format = "csv";
  bool intersections = false;
  bool asymptotic = false;
};

int run_count(const Globals &g, const CountArgs &a)
{
  const auto classes = class_selection(a.cls);
  const bool use_census = a.method != "formula";
  const bool use_formula = a.method != "census";
  if (!use_census && (a.intersections || a.asymptotic))
    throw UsageError("--intersections and --asymptotic need the census");
  const int lo = a.from.value_or(a.n);
  if (lo < 1 || lo > a.n)
    throw UsageError("--from must lie in [1, n]");

  json rows = json::array();
  std::ostringstream csv;
  csv << "n";
  for (auto c : classes)
    csv << "," << class_letter(c);
  csv << ",total";
  if (a.intersections)
    csv << ",b_and_c,b_and_g,b_and_s,b_and_t,all_five";
  if (a.asymptotic)
    csv << ",s_ratio,s_asymptote,s_relative_gap";
  csv << "\n";

  for (int n = lo; n <= a.n; ++n) {
    std::optional<CensusReport> report;
    if (use_census)
      report = census(n, cap(g, census_cap), g.jobs);
    json row;
    row["n"] = n;
    csv << n;
    for (auto c : classes) {
      const auto formula = use_formula ? count_formula(c, n) : std::nullopt;
      std::string value;
      if (report) {
        value = std::to_string(report->count(c));
        if (formula && BigInt(report->count(c)) != *formula)
          throw Error(Errc::invariant_violation, std::string("census and closed form disagree for class ") + class_letter(c));
      } else if (formula) {
        value = formula->str();
      }
      csv << "," << value;
      row[std::string(1, class_letter(c))] = value.empty() ? json(nullptr) : json(value);
    }
    const std::string total = report ? std::to_string(report->total) : factorial(n).str();
    csv << "," << total;
    row["total"] = total;
    if (a.intersections) {
      csv << "," << report->b_and_c << "," << report->b_and_g << "," << report->b_and_s << "," << report->b_and_t
          << "," << report->all_five;
      row["b_and_c"] = report->b_and_c;
      row["b_and_g"] = report->b_and_g;
      row["b_and_s"] = report->b_and_s;
      row["b_and_t"] = report->b_and_t;
      row["all_five"] = report->all_five;
    }
    if (a.asymptotic) {
      const auto check = s_asymptotic_check(*report);
      std::ostringstream r;
      r.precision(10);
      r << check.census_ratio << ",";
      if (check.asymptote)
        r << *check.asymptote;
      r << ",";
      if (const auto gap = check.relative_gap())
        r << *gap;
      csv << "," << r.str();
      row["s_ratio"] = check.census_ratio;
      row["s_asymptote"] = check.asymptote ? json(*check.asymptote) : json(nullptr);
      row["s_relative_gap"] = check.relative_gap() ? json(*check.relative_gap()) : json(nullptr);
    }
    csv << "\n";
    rows.push_back(row);
  }
  emit(g, a.format == "json" ? rows.dump(2) + "\n" : csv.str());
  return 0;
}

// graph ------------------------------------------------------------------

struct GraphArgs {
  int n = 1;
  std::string cls = "b";
  bool components = false;
  bool planarity = false;
  bool decorate = false;
  std::string dot;
  std::string json_path;
};

std::string path_text(const LabeledGraph &graph, const std::vector<int> &path)
{
  std::string out;
  for (std::size_t k = 0; k < path.size(); ++k)
    out += (k ? " -- [" : "[") + format_one_line(graph.vertex(path[k])) + "]";
  return out;
}

int run_graph(const Globals &g, const GraphArgs &a)
{
  const auto graph = build_gamma(a.n, single_class(a.cls), cap(g, graph_cap));
  const auto comps = components(graph);
  std::ostringstream out;
  out << "Gamma(" << a.cls << "S" << a.n << ")\n"
      << graph.vertex_count() << " vertices\n"
      << graph.edge_count() << " edges\n"
      << comps.size() << " components\n";
  json j;
  j["n"] = a.n;
  j["class"] = a.cls;
  j["vertices"] = json::array();
  for (const auto &p : graph.vertices())
    j["vertices"].push_back(format_one_line(p));
  j["edges"] = json::array();
  for (const auto &e : graph.edges())
    j["edges"].push_back({e.a, e.b, e.generator});
  j["components"] = json::array();
  for (const auto &c : comps)
    j["components"].push_back(c);

  if (a.components)
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (comps[k].size() == 1)
        out << "component " << k << ": 1 vertex " << format_cycles(graph.vertex(comps[k].front())) << "\n";
      else
        out << "component " << k << ": " << comps[k].size() << " vertices\n";
    }

  if (a.planarity) {
    const auto result = is_planar(graph);
    json pj;
    pj["planar"] = result.planar;
    if (result.planar) {
      const int faces = count_faces(graph, *result.embedding);
      out << "planar: yes (rotation system verified by Euler's formula, " << faces << " faces)\n";
      pj["faces"] = faces;
    } else {
      const auto &obs = *result.obstruction;
      const bool k5 = obs.kind == KuratowskiSubdivision::Kind::k5;
      out << "planar: no (" << (k5 ? "K5" : "K3,3") << " subdivision verified)\n";
      pj["obstruction"] = k5 ? "K5" : "K3,3";
      const auto k33 = k5 ? k33_witness(graph) : std::optional<KuratowskiSubdivision>(obs);
      if (k33) {
        out << "K3,3 sides: {";
        for (std::size_t k = 0; k < k33->side_a.size(); ++k)
          out << (k ? "; " : "") << format_one_line(graph.vertex(k33->side_a[k]));
        out << "} {";
        for (std::size_t k = 0; k < k33->side_b.size(); ++k)
          out << (k ? "; " : "") << format_one_line(graph.vertex(k33->side_b[k]));
        out << "}\n";
        json paths = json::array();
        for (const auto &path : k33->paths) {
          out << "  " << path_text(graph, path) << "\n";
          paths.push_back(path);
        }
        pj["k33_paths"] = paths;
      }
    }
    j["planarity"] = pj;
  }

  emit(g, out.str());
  if (!a.dot.empty())
    write_file(a.dot, export_dot(graph, DotOptions{a.components, a.decorate, "gamma_" + a.cls + std::to_string(a.n)}));
  if (!a.json_path.empty())
    write_file(a.json_path, j.dump(2) + "\n");
  return 0;
}

// polygon ----------------------------------------------------------------

struct PolygonArgs {
  std::string cycle;
  std::optional<int> degree;
  std::string format = "text";
};

std::string polygon_text(const PolygonalType &p)
{
  std::string out = "(";
  for (std::size_t k = 0; k < p.vertices.size(); ++k)
    out += (k ? " " : "") + std::to_string(p.vertices[k]);
  return out + ")";
}

std::string interval_text(const Interval &iv)
{
  if (iv.empty())
    return "{}";
  if (iv.lo == iv.hi)
    return "{" + std::to_string(iv.lo) + "}";
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

int run_polygon(const Globals &, const PolygonArgs &a)
{
  const auto points = parse_cycle(a.cycle);
  int n = a.degree.value_or(0);
  for (int v : points)
    n = std::max(n, v);
  const auto poly = polygon_of_cycle(points, n);
  const auto moves = reduce_once(poly);
  const auto result = irreducible_type(poly);

  json j;
  j["n"] = n;
  j["polygon"] = poly.vertices;
  j["reductions"] = json::array();
  for (const auto &m : moves)
    j["reductions"].push_back(m.vertices);
  std::ostringstream out;
  out << "polygon: " << polygon_text(poly) << " in degree " << n << "\n";
  out << "one-step reductions:";
  if (moves.empty())
    out << " none";
  for (const auto &m : moves)
    out << " " << polygon_text(m);
  out << "\n";
  if (std::holds_alternative<TriangleClass>(result)) {
    out << "type: TriangleClass\n";
    j["type"] = "TriangleClass";
  } else {
    const auto &t = std::get<IrreducibleType>(result);
    out << "type: irreducible " << polygon_text(t.polygon) << "\n";
    j["type"] = t.polygon.vertices;
    json intervals = json::object();
    for (const auto &[v, iv] : neighboring_intervals(t)) {
      out << "  I-(" << v << ") = " << interval_text(iv.minus) << "  I+(" << v << ") = " << interval_text(iv.plus) << "\n";
      intervals[std::to_string(v)] = {{"minus", {iv.minus.lo, iv.minus.hi}}, {"plus", {iv.plus.lo, iv.plus.hi}}};
    }
    j["intervals"] = intervals;
  }
  if (a.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << out.str();
  return 0;
}

// complex ----------------------------------------------------------------

struct ComplexArgs {
  int n = 1;
  std::string space = "P";
  std::string cls = "b";
  bool homology = false;
  bool euler = false;
  bool filtration = false;
  std::string format = "text";
};

std::function<bool(const Permutation &)> membership(const std::string &cls)
{
  if (cls == "all")
    return [](const Permutation &) { return true; };
  const auto c = single_class(cls);
  return [c](const Permutation &p) { return in_class(c, p); };
}

json homology_json(const std::vector<HomologyGroup> &h)
{
  json out = json::array();
  for (const auto &g : h)
    out.push_back({{"dim", g.dim}, {"rank", g.rank}, {"torsion", g.torsion}});
  return out;
}

int run_complex(const Globals &g, const ComplexArgs &a)
{
  const int bound = cap(g, complex_cap);
  if (a.filtration) {
    if (a.cls != "b" || a.space != "P")
      throw UsageError("--filtration applies to --space P --class b");
    const auto f = bs_filtration(a.n, bound);
    json j;
    j["n"] = a.n;
    j["stages"] = json::array();
    std::ostringstream out;
    for (std::size_t t = 0; t < f.stages.size(); ++t) {
      const auto &s = f.stages[t];
      out << "F" << s.j << ": " << s.vertices.size() << " vertices, f-vector";
      for (auto v : s.complex.f_vector())
        out << " " << v;
      out << ", chi " << euler_characteristic(s.complex);
      json sj{{"j", s.j}, {"vertices", s.vertices.size()}, {"f_vector", s.complex.f_vector()}};
      if (t > 0) {
        const bool ok = f.collapses[t - 1] == CollapseOutcome::collapsed;
        out << (ok ? ", collapses onto F" : ", collapse onto F") << f.stages[t - 1].j << (ok ? "" : " inconclusive");
        sj["collapses_onto_previous"] = ok;
      }
      out << "\n";
      j["stages"].push_back(sj);
    }
    emit(g, a.format == "json" ? j.dump(2) + "\n" : out.str());
    return 0;
  }

  CellComplex c;
  const auto keep = membership(a.cls);
  if (a.space == "P") {
    c = induced_subcomplex(permutahedron_complex(a.n, bound), keep);
  } else {
    if (a.n > bound)
      throw Error(Errc::bound_exceeded, "complex degree exceeds bound");
    std::vector<Permutation> elements;
    for_each_permutation(a.n, [&](const Permutation &p) {
      if (keep(p))
        elements.push_back(p);
    });
    c = order_complex(elements, a.space == "B" ? Order::bruhat : Order::weak, bound);
  }

  json j;
  j["n"] = a.n;
  j["space"] = a.space;
  j["class"] = a.cls;
  j["f_vector"] = c.f_vector();
  j["points"] = json::array();
  for (const auto &p : c.points)
    j["points"].push_back(format_one_line(p));
  j["cells"] = json::array();
  for (int d = 0; d <= c.dimension(); ++d) {
    json layer = json::array();
    for (int id : c.cells_of_dim(d)) {
      const auto &cell = c.cells[static_cast<std::size_t>(id)];
      json bd = json::array();
      for (const auto &[f, s] : cell.boundary)
        bd.push_back({f, s});
      layer.push_back({{"id", id}, {"vertices", cell.vertices}, {"boundary", bd}});
    }
    j["cells"].push_back(layer);
  }
  std::ostringstream out;
  out << a.space << "(" << a.cls << "S" << a.n << "): f-vector";
  for (auto v : c.f_vector())
    out << " " << v;
  out << "\n";
  if (a.euler) {
    out << "euler characteristic: " << euler_characteristic(c) << "\n";
    j["euler"] = euler_characteristic(c);
  }
  if (a.homology) {
    const auto h = reduced_homology(c);
    out << "reduced homology:";
    for (const auto &grp : h) {
      out << " H" << grp.dim << "=" << (grp.trivial() ? "0" : "Z^" + std::to_string(grp.rank));
      for (auto t : grp.torsion)
        out << "+Z/" << t;
    }
    out << "\n";
    j["reduced_homology"] = homology_json(h);
  }
  emit(g, a.format == "json" ? j.dump(2) + "\n" : out.str());
  return 0;
}

// selftest ---------------------------------------------------------------

int run_selftest(const Globals &g)
{
  int failures = 0;
  auto check = [&](const std::string &name, bool ok, const std::string &detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    failures += ok ? 0 : 1;
  };

  const auto tri = sigma_triangle(5);
  const std::vector<std::vector<int>> rows{{1}, {1, 1}, {1, 2, 2}, {1, 3, 5, 4}, {1, 4, 9, 12, 8}};
  bool rows_ok = true;
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < n; ++i)
      rows_ok = rows_ok && tri.at(n, i) == rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
  check("sigma triangle rows 1..5", rows_ok, "recurrences agree");

  const std::vector<std::array<long long, 5>> table{
    {1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {0, 6, 6, 5, 6}, {2, 21, 18, 13, 20}, {6, 85, 70, 34, 72}, {46, 410, 300, 89, 272}};
  for (int n = 1; n <= 6; ++n) {
    const auto r = census(n, census_cap, g.jobs);
    std::ostringstream d;
    for (std::size_t k = 0; k < 5; ++k)
      d << (k ? "," : "(") << r.counts[k];
    d << ")";
    check("census n=" + std::to_string(n), r.counts == table[static_cast<std::size_t>(n - 1)], d.str());
  }

  const auto gc = build_gamma(5, SimpleClass::c);
  const auto comps = components(gc);
  std::set<std::string> singletons;
  for (const auto &c : comps)
    if (c.size() == 1)
      singletons.insert(format_cycles(gc.vertex(c.front())));
  check("Gamma(cS5) components", comps.size() == 3 && singletons == std::set<std::string>{"(5 2 4 1 3)", "(5 3 1 4 2)"},
        std::to_string(comps.size()) + " components");

  const auto r6 = census(6, census_cap, g.jobs);
  const std::pair<const char *, std::pair<long long, long long>> remark[] = {
    {"b and c", {r6.b_and_c, 58}}, {"b and g", {r6.b_and_g, 39}}, {"b and s", {r6.b_and_s, 4}}, {"b and t", {r6.b_and_t, 44}}};
  for (const auto &[name, v] : remark)
    check(std::string("n=6 ") + name, v.first == v.second,
          "computed " + std::to_string(v.first) + ", expected " + std::to_string(v.second));
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Simple permutations: classification, census, Cayley subgraphs, polygons, complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char *env = std::getenv("PERMSIMPLE_JOBS")) {
    try {
      g.jobs = std::stoi(env);
    } catch (const std::exception &) {
      std::cerr << "error: PERMSIMPLE_JOBS must be an integer\n";
      return 2;
    }
  }
  app.add_option("--jobs,-j", g.jobs, "worker threads (default: $PERMSIMPLE_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_flag("--unsafe-bounds", g.unsafe_bounds, "lift the safety caps (census 10, graph 9, complex 6)");
  app.add_option("--input-format", g.input_format, "permutation syntax")
    ->check(CLI::IsMember({"auto", "one-line", "cycles", "coxeter"}));
  app.add_option("--output,-o", g.output, "write the main output here instead of stdout");

  ClassifyArgs ca;
  auto *classify_cmd = app.add_subcommand("classify", "membership in the five classes");
  classify_cmd->add_option("permutation", ca.permutation, "one-line word, cycles, or D-word")->required();
  classify_cmd->add_option("--degree", ca.degree, "degree for cycle and D-word input");
  classify_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));

  CountArgs co;
  auto *count_cmd = app.add_subcommand("count", "class sizes by census and closed forms");
  count_cmd->add_option("--n", co.n)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--from", co.from, "first degree of a range ending at --n");
  count_cmd->add_option("--class", co.cls)->check(CLI::IsMember({"all", "s", "c", "g", "b", "t"}));
  count_cmd->add_option("--method", co.method)->check(CLI::IsMember({"census", "formula", "both"}));
  count_cmd->add_option("--format", co.format)->check(CLI::IsMember({"csv", "json"}));
  count_cmd->add_flag("--intersections", co.intersections, "add b-and-* and five-way counts");
  count_cmd->add_flag("--asymptotic", co.asymptotic, "add the s-simple density check");

  GraphArgs ga;
  auto *graph_cmd = app.add_subcommand("graph", "the Cayley subgraph on a class");
  graph_cmd->add_option("--n", ga.n)->required()->check(CLI::PositiveNumber);
  graph_cmd->add_option("--class", ga.cls)->check(CLI::IsMember({"s", "c", "g", "b", "t"}));
  graph_cmd->add_flag("--components", ga.components);
  graph_cmd->add_flag("--planarity", ga.planarity);
  graph_cmd->add_flag("--decorate", ga.decorate, "mark c/g/s/t membership in DOT output");
  graph_cmd->add_option("--dot", ga.dot, "DOT file ('-' for stdout)");
  graph_cmd->add_option("--json", ga.json_path, "JSON file ('-' for stdout)");

  PolygonArgs pa;
  auto *polygon_cmd = app.add_subcommand("polygon", "reduction moves of a cycle's polygon");
  polygon_cmd->add_option("cycle", pa.cycle, "a single cycle, e.g. \"(6 1 4 2 5)\"")->required();
  polygon_cmd->add_option("--degree", pa.degree);
  polygon_cmd->add_option("--format", pa.format)->check(CLI::IsMember({"text", "json"}));

  ComplexArgs xa;
  auto *complex_cmd = app.add_subcommand("complex", "permutahedron subcomplexes and order complexes");
  complex_cmd->add_option("--n", xa.n)->required()->check(CLI::PositiveNumber);
  complex_cmd->add_option("--space", xa.space)->check(CLI::IsMember({"P", "B", "W"}));
  complex_cmd->add_option("--class", xa.cls)->check(CLI::IsMember({"all", "s", "c", "g", "b", "t"}));
  complex_cmd->add_flag("--homology", xa.homology);
  complex_cmd->add_flag("--euler", xa.euler);
  complex_cmd->add_flag("--filtration", xa.filtration, "stages F_{n+1} .. F_1 with collapse evidence");
  complex_cmd->add_option("--format", xa.format)->check(CLI::IsMember({"text", "json"}));

  auto *selftest_cmd = app.add_subcommand("selftest", "golden tables; nonzero exit on any mismatch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd)
      return run_classify(g, ca);
    if (*count_cmd)
      return run_count(g, co);
    if (*graph_cmd)
      return run_graph(g, ga);
    if (*polygon_cmd)
      return run_polygon(g, pa);
    if (*complex_cmd)
      return run_complex(g, xa);
    if (*selftest_cmd)
      return run_selftest(g);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool internal = e.code() == Errc::invariant_violation || e.code() == Errc::overflow;
    return internal ? 1 : 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
