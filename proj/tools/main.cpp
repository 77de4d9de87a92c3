#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigidlines/connectivity.hpp"
#include "rigidlines/errors.hpp"
#include "rigidlines/henneberg.hpp"
#include "rigidlines/io.hpp"
#include "rigidlines/sampler.hpp"
#include "rigidlines/sparsity.hpp"
#include "rigidlines/verify.hpp"

using namespace rigidlines;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

struct Globals {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int trials = 5;
  bool trials_set = false;
  bool exact = false;
  std::string format = "json";
};

// Input errors that should map to the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Globals& gl, const Json& doc, const std::string& text) {
  if (gl.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string flag(const Json& v) { return v.is_null() ? "n/a" : v.dump(); }

Json analyze(const Graph& g, const Globals& gl) {
  const int n = g.n();
  Json rep;
  rep["graph"] = {{"n", n}, {"m", g.m()}};
  const bool laman = n >= 2 && is_laman(g);
  const int srank = n >= 2 ? sparsity_rank(g).rank : 0;
  const int rrank = n >= 2 ? rigidity_rank(g, gl.trials, gl.seed, gl.exact) : 0;
  const bool rigid = n <= 1 || rrank == 2 * n - 3;
  rep["laman"] = laman;
  rep["rigid"] = rigid;
  rep["redundant"] = n >= 2 ? Json(is_redundant(g)) : Json();
  rep["three_connected"] = n >= 4 ? Json(is_k_connected(g, 3)) : Json();
  rep["hendrickson"] = n >= 4 ? Json(is_hendrickson(g)) : Json();
  rep["sparsity_rank"] = srank;
  rep["rigidity_rank"] = rrank;
  if (n < 4) {
    rep["globally_rigid"] = rigid;
    rep["oracle"] = "skipped: n < 4";
  } else if (!rigid) {
    rep["globally_rigid"] = false;
    rep["oracle"] = "skipped: flexible";
  } else {
    rep["globally_rigid"] = global_rigidity_oracle(g, gl.trials, gl.seed);
    rep["oracle"] = "stress matrix, " + std::to_string(gl.trials) + " trials";
  }
  rep["seed"] = gl.seed;
  rep["tol"] = gl.tol;
  rep["trials"] = gl.trials;
  rep["exact"] = gl.exact;
  return rep;
}

std::string analysis_text(const Json& r) {
  std::ostringstream os;
  os << "n=" << r["graph"]["n"] << " m=" << r["graph"]["m"] << "\n";
  for (const char* k : {"laman", "rigid", "redundant", "three_connected", "hendrickson", "sparsity_rank",
                        "rigidity_rank", "globally_rigid"})
    os << k << ": " << flag(r[k]) << "\n";
  os << "oracle: " << r["oracle"].get<std::string>() << "\n";
  return os.str();
}

std::string lines_text(std::span<const Line> lines) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& l : lines) os << l.a << " " << l.b << " " << l.c << " " << l.d << "\n";
  return os.str();
}

std::string report_text(const DimensionReport& r) {
  std::ostringstream os;
  os << "ambient_dim: " << r.ambient_dim << "\nconstraint_count: " << r.constraint_count
     << "\njacobian_rank: " << r.jacobian_rank << "\nlocal_dim_estimate: " << r.local_dim
     << "\ncertified: " << (r.certified ? "true" : "false") << "\n";
  return os.str();
}

Json sequence_json(const ConstructionSequence& seq) {
  return Json{{"steps", steps_to_json(seq.steps)}, {"relabel", seq.relabel}};
}

std::string sequence_text(const ConstructionSequence& seq) {
  std::ostringstream os;
  for (const auto& s : seq.steps) {
    os << move_kind_name(s.kind) << " " << s.u << " " << s.v;
    if (s.kind == Move::Kind::ext1) os << " " << s.w;
    os << "\n";
  }
  os << "relabel:";
  for (int x : seq.relabel) os << " " << x;
  os << "\n";
  return os.str();
}

// Replays a step file; when it carries the relabeling of an extraction the
// result is returned in the original labels.
Json apply_steps(const std::string& text, bool jj) {
  const std::vector<Move> steps = parse_steps(text);
  Graph g = jj ? apply_jj(steps) : apply_henneberg(steps);
  const Json doc = Json::parse(text);
  if (doc.is_object() && doc.contains("relabel")) {
    const auto relabel = doc["relabel"].get<std::vector<int>>();
    if (static_cast<int>(relabel.size()) != g.n()) throw ParseError("relabel", "length differs from the vertex count");
    g = g.relabeled(relabel);
  }
  return graph_to_json(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-incidence rigidity toolkit"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--seed", gl.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", gl.tol, "Relative tolerance")->capture_default_str();
  app.add_option("--trials", gl.trials, "Random trials (rank, oracle) or suite instances")->capture_default_str();
  app.add_flag("--exact", gl.exact, "Exact arithmetic where available");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::function<int()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string path, path2, suite, name, kind = "concurrent";
  std::vector<long long> params;
  int n = 0, orientation = 1, n_max = -1, seeds = -1;
  bool collinear = false;

  CLI::App* c_analyze = sub(&app, "analyze", "Combinatorial and numeric rigidity report for a graph");
  c_analyze->add_option("graph", path, "Graph file (JSON or edge list, - for stdin)")->required();
  c_analyze->callback([&] {
    action = [&] {
      const Json r = analyze(parse_graph(read_input(path)), gl);
      emit(gl, r, analysis_text(r));
      return kOk;
    };
  });

  CLI::App* c_verify = sub(&app, "verify", "Run a verification suite");
  c_verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  c_verify->add_option("--n-max", n_max, "Largest vertex count");
  c_verify->add_option("--seeds", seeds, "Number of instances");
  c_verify->callback([&] {
    action = [&] {
      SuiteOptions o;
      o.seed = gl.seed;
      o.tol = gl.tol;
      o.n_max = n_max;
      o.count = seeds;
      if (suite == "hendrickson-oracle")
        o.oracle_trials = gl.trials;
      else if (gl.trials_set)
        o.count = gl.trials;
      const SuiteReport r = run_suite(suite, o);
      emit(gl, suite_to_json(r), suite_to_text(r));
      return r.ok() ? kOk : kFailure;
    };
  });

  CLI::App* c_lines = sub(&app, "lines", "Line-configuration predicates");
  c_lines->require_subcommand(1);
  CLI::App* l_graph = sub(c_lines, "graph", "Intersection graph of a line configuration");
  l_graph->add_option("config", path, "Line-config JSON")->required();
  l_graph->callback([&] {
    action = [&] {
      const Graph g = intersection_graph(parse_lines(read_input(path)), gl.tol);
      emit(gl, graph_to_json(g), serialize_graph(g, GraphFormat::edge_list));
      return kOk;
    };
  });
  CLI::App* l_point = sub(c_lines, "point", "Common point of all lines");
  l_point->add_option("config", path, "Line-config JSON")->required();
  l_point->callback([&] {
    action = [&] {
      const PointFit fit = common_point(parse_lines(read_input(path)), gl.tol);
      Json r{{"found", fit.found()}, {"residual", fit.residual}};
      r["status"] = fit.status == PointFit::Status::point             ? "point"
                    : fit.status == PointFit::Status::parallel_family ? "parallel_family"
                                                                      : "none";
      if (fit.status == PointFit::Status::point) r["point"] = {fit.point.x(), fit.point.y(), fit.point.z()};
      emit(gl, r, r["status"].get<std::string>() + (r.contains("point") ? " " + r["point"].dump() : "") + "\n");
      return kOk;
    };
  });
  CLI::App* l_plane = sub(c_lines, "plane", "Common plane of all lines");
  l_plane->add_option("config", path, "Line-config JSON")->required();
  l_plane->callback([&] {
    action = [&] {
      const PlaneFit fit = common_plane(parse_lines(read_input(path)), gl.tol);
      Json r{{"found", fit.found()}, {"residual", fit.residual}};
      if (fit.plane) {
        const Point3& nv = fit.plane->normal;
        r["normal"] = {nv.x(), nv.y(), nv.z()};
        r["offset"] = fit.plane->offset;
        if (auto sl = fit.plane->slope_form(gl.tol)) r["slope_form"] = {{"lambda", sl->x()}, {"mu", sl->y()}, {"nu", sl->z()}};
      }
      emit(gl, r, std::string(fit.found() ? "plane " + r["normal"].dump() + " offset " + r["offset"].dump() : "none") + "\n");
      return kOk;
    };
  });
  CLI::App* l_classify = sub(c_lines, "classify", "Classify a triple of lines");
  l_classify->add_option("config", path, "Line-config JSON with three lines")->required();
  l_classify->callback([&] {
    action = [&] {
      const LineConfig L = parse_lines(read_input(path));
      if (L.size() != 3) throw InputError("classify expects exactly three lines");
      const TripleClass c = classify_triple(L[0], L[1], L[2], gl.tol);
      Json r{{"kind", triple_kind_name(c.kind)}, {"family_dim", c.family_dim}, {"parallel", c.parallel}};
      if (c.point) r["point"] = {c.point->x(), c.point->y(), c.point->z()};
      emit(gl, r, triple_kind_name(c.kind) + " (family dimension " + std::to_string(c.family_dim) + ")\n");
      return kOk;
    };
  });
  CLI::App* l_dim = sub(c_lines, "dimension", "Local dimension of the incidence system at a configuration");
  l_dim->add_option("graph", path, "Graph file")->required();
  l_dim->add_option("config", path2, "Line-config JSON")->required();
  l_dim->callback([&] {
    action = [&] {
      const Graph g = parse_graph(read_input(path));
      const DimensionReport r = line_system_dimension(g, parse_lines(read_input(path2)), gl.tol);
      emit(gl, report_to_json(r), report_text(r));
      return kOk;
    };
  });

  CLI::App* c_sample = sub(&app, "sample", "Sample configurations");
  c_sample->require_subcommand(1);
  CLI::App* s_laman = sub(c_sample, "laman", "Certified line realization of a Laman graph");
  s_laman->add_option("graph", path, "Graph file")->required();
  s_laman->callback([&] {
    action = [&] {
      const Graph g = parse_graph(read_input(path));
      Json r;
      LineConfig lines;
      if (gl.exact) {
        const ExactLineConfig ex = sample_laman_lines_exact(g, gl.seed);
        Json exact = Json::array();
        for (const auto& l : ex) {
          lines.push_back(l.to_double());
          exact.push_back({l.a.get_str(), l.b.get_str(), l.c.get_str(), l.d.get_str()});
        }
        r = lines_to_json(lines);
        r["exact_lines"] = exact;
        r["report"] = report_to_json(line_system_dimension_exact(g, ex));
      } else {
        const LamanSample s = sample_laman_lines_report(g, gl.seed);
        lines = s.lines;
        r = lines_to_json(lines);
        r["report"] = report_to_json(s.report);
        r["attempts"] = s.attempts;
      }
      emit(gl, r, lines_text(lines));
      return kOk;
    };
  });
  CLI::App* s_knn = sub(c_sample, "knn", "n pairwise-meeting lines");
  s_knn->add_option("--n", n, "Number of lines")->required();
  s_knn->add_option("--kind", kind, "concurrent, parallel or coplanar")
      ->check(CLI::IsMember({"concurrent", "parallel", "coplanar"}))
      ->capture_default_str();
  s_knn->callback([&] {
    action = [&] {
      const LineConfig L = sample_knn(n, parse_family_kind(kind), gl.seed);
      emit(gl, lines_to_json(L), lines_text(L));
      return kOk;
    };
  });
  CLI::App* s_pair = sub(c_sample, "pair", "Congruent pair of integer point sets");
  s_pair->add_option("--n", n, "Number of points")->required();
  s_pair->add_option("--orientation", orientation, "+1 rotation, -1 reflection")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  s_pair->add_flag("--collinear", collinear, "Draw collinear points");
  s_pair->callback([&] {
    action = [&] {
      const CongruentPair p = sample_congruent_pair(n, orientation, gl.seed, collinear);
      const Json r = pair_to_json(p.p, p.p_prime);
      emit(gl, r, r.dump() + "\n");
      return kOk;
    };
  });

  for (const bool jj : {false, true}) {
    CLI::App* c = sub(&app, jj ? "jj" : "henneberg",
                      jj ? "Edge-addition / 1-extension sequences from K4" : "0/1-extension sequences from K2");
    c->require_subcommand(1);
    CLI::App* ex = sub(c, "extract", "Construction sequence with relabeling");
    ex->add_option("graph", path, "Graph file")->required();
    ex->callback([&, jj] {
      action = [&, jj] {
        const Graph g = parse_graph(read_input(path));
        const ConstructionSequence seq = jj ? extract_jj(g) : extract_henneberg(g);
        emit(gl, sequence_json(seq), sequence_text(seq));
        return kOk;
      };
    });
    CLI::App* ap = sub(c, "apply", "Replay a step list");
    ap->add_option("steps", path, "Step-list JSON")->required();
    ap->callback([&, jj] {
      action = [&, jj] {
        const Json g = apply_steps(read_input(path), jj);
        emit(gl, g, serialize_graph(parse_graph(g.dump()), GraphFormat::edge_list));
        return kOk;
      };
    });
  }

  CLI::App* c_es = sub(&app, "es", "Point-pair / line transform");
  c_es->require_subcommand(1);
  CLI::App* e_map = sub(c_es, "map", "Pair file to line configuration");
  e_map->add_option("pairs", path, "Pair JSON")->required();
  e_map->callback([&] {
    action = [&] {
      auto [p, q] = parse_pair(read_input(path));
      const LineConfig L = phi(p, q);
      emit(gl, lines_to_json(L), lines_text(L));
      return kOk;
    };
  });
  CLI::App* e_unmap = sub(c_es, "unmap", "Line configuration to pair file");
  e_unmap->add_option("config", path, "Line-config JSON")->required();
  e_unmap->callback([&] {
    action = [&] {
      Embedding p, q;
      for (const auto& l : parse_lines(read_input(path))) {
        const PointPair pp = from_line(l);
        p.push_back(pp.a);
        q.push_back(pp.b);
      }
      const Json r = pair_to_json(p, q);
      emit(gl, r, r.dump() + "\n");
      return kOk;
    };
  });
  CLI::App* e_motion = sub(c_es, "motion", "Rigid motion taking p to p_prime");
  e_motion->add_option("pairs", path, "Pair JSON")->required();
  e_motion->add_option("--orientation", orientation, "+1 or -1")->check(CLI::IsMember({1, -1}))->capture_default_str();
  e_motion->callback([&] {
    action = [&] {
      auto [p, q] = parse_pair(read_input(path));
      const PlanarMotion m = recover_motion(p, q, orientation, gl.tol);
      Json r{{"linear", {{m.linear(0, 0), m.linear(0, 1)}, {m.linear(1, 0), m.linear(1, 1)}}},
             {"translation", {m.translation.x(), m.translation.y()}},
             {"orientation", m.orientation},
             {"residual", m.residual}};
      emit(gl, r, r.dump() + "\n");
      return kOk;
    };
  });

  CLI::App* c_gen = sub(&app, "generate", "Catalog graph generators");
  c_gen->add_option("name", name, "complete, cycle, path, wheel, laman_random or hendrickson_random")->required();
  c_gen->add_option("params", params, "Generator parameters");
  c_gen->callback([&] {
    action = [&] {
      const Graph g = generate(name, params);
      emit(gl, graph_to_json(g), serialize_graph(g, GraphFormat::edge_list));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  gl.trials_set = app.count("--trials") > 0;
  if (gl.trials < 1) {
    std::cerr << "error: --trials must be at least 1\n";
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SamplingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& line : e.log()) std::cerr << "  " << line << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
