// harmcov: build, verify and export harmonic G-covers of graphs.
//
// Exit codes: 0 pass, 2 semantic failure, 3 input error. Errors are
// reported on stderr as {"error":code,"message":…,"witness":…}.

#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "harmcov/covers.hpp"
#include "harmcov/dot.hpp"
#include "harmcov/galois.hpp"
#include "harmcov/io.hpp"

namespace fs = std::filesystem;
using namespace harmcov;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 2;
constexpr int kInputError = 3;

// Problems with files or arguments. Anything the library raises after the
// inputs have loaded counts as a semantic failure instead.
struct InputError : std::runtime_error {
  std::string code;
  std::string witness;
  InputError(std::string c, const std::string& m, std::string w)
      : std::runtime_error(m), code(std::move(c)), witness(std::move(w)) {}
};

void report_error(std::string_view code, const std::string& message, const std::string& witness) {
  Json j = Json::object();
  j["error"] = code;
  j["message"] = message;
  j["witness"] = witness.empty() ? Json(nullptr) : Json(witness);
  std::cerr << j.dump() << "\n";
}

template <class F>
auto loading(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(std::string(error_code_name(e.code())), e.what(), e.witness());
  } catch (const nlohmann::json::exception& e) {
    throw InputError("InvalidInput", e.what(), "");
  }
}

struct Options {
  std::string workspace;
  std::string out;
  std::string dot;
  bool pointed = true;
  std::string policy;
};

// An object reference is a path, or a name inside the workspace with or
// without the .json suffix.
Json load_ref(const Options& opt, const std::string& ref) {
  std::vector<fs::path> candidates{ref};
  if (!opt.workspace.empty()) {
    candidates.push_back(fs::path(opt.workspace) / ref);
    candidates.push_back(fs::path(opt.workspace) / (ref + ".json"));
  }
  for (const fs::path& p : candidates) {
    if (fs::is_regular_file(p)) return loading([&] { return io::read_json_file(p.string()); });
  }
  throw InputError("InvalidInput", "object not found", ref);
}

std::string kind_of(const Json& j) {
  if (j.is_string()) return "group";
  if (j.is_object() && j.contains("kind") && j.at("kind").is_string()) return j.at("kind").get<std::string>();
  if (j.is_object() && j.contains("vertices")) return "graph";
  if (j.is_object() && j.contains("table")) return "group";
  throw InputError("InvalidInput", "cannot tell the object kind", "");
}

void expect_kind(const Json& j, std::initializer_list<std::string_view> kinds) {
  const std::string k = kind_of(j);
  for (std::string_view want : kinds) {
    if (k == want) return;
  }
  throw InputError("InvalidInput", "unexpected object kind", k);
}

void write_outputs(const Options& opt, const Json& j, const std::string& dot_text) {
  const std::string text = io::dump(j);
  if (opt.out.empty()) std::cout << text;
  else loading([&] { io::write_text_file(opt.out, text); });
  if (!opt.dot.empty()) loading([&] { io::write_text_file(opt.dot, dot_text); });
}

// -- verify ----------------------------------------------------------------------

struct Verdict {
  bool pass = true;
  Json witness = nullptr;
};

Verdict check_harmonic_morphism(const GraphMorphism& phi) {
  const Graph& y = phi.source();
  const Graph& x = phi.target();
  for (Vertex w = 0; w < y.num_vertices(); ++w) {
    std::vector<int> count(x.num_edges(), 0);
    for (EdgeId e : y.incident(w)) {
      if (const auto* t = std::get_if<ToEdge>(&phi.edge_image(e))) ++count[t->edge];
    }
    const std::vector<EdgeId>& at = x.incident(phi(w));
    for (EdgeId e : at) {
      if (count[e] != count[at.front()]) {
        return {false, Json{{"vertex", y.vertex_label(w)}, {"edge", x.edge_label(e)}}};
      }
    }
  }
  return {};
}

Verdict check_faithful(const GraphAction& a) {
  const Graph& y = a.carrier();
  for (const std::vector<Vertex>& block : connected_components(y)) {
    std::vector<char> inside(y.num_vertices(), 0);
    for (Vertex v : block) inside[v] = 1;
    for (Element g = 1; g < a.group().order(); ++g) {
      bool fixes = std::all_of(block.begin(), block.end(), [&](Vertex v) { return a.act(g, v) == v; });
      for (EdgeId e = 0; fixes && e < y.num_edges(); ++e) {
        if (inside[y.ends(e).u] && a.act_edge(g, e) != e) fixes = false;
      }
      if (fixes) return {false, Json{{"element", a.group().name(g)}, {"component", y.vertex_label(block.front())}}};
    }
  }
  return {};
}

Verdict check_harmonic_action(const GraphAction& a) {
  if (Verdict f = check_faithful(a); !f.pass) {
    throw Error(ErrorCode::kNotFaithful, "harmonicity is defined for faithful actions", f.witness.dump());
  }
  const Graph& y = a.carrier();
  for (Vertex v = 0; v < y.num_vertices(); ++v) {
    const Subgroup stab = a.vertex_stabilizer(v);
    for (Element g : stab.elements()) {
      if (g == FiniteGroup::kIdentity) continue;
      for (EdgeId e : y.incident(v)) {
        if (a.act_edge(g, e) == e) {
          return {false, Json{{"vertex", y.vertex_label(v)}, {"element", a.group().name(g)},
                              {"edge", y.edge_label(e)}}};
        }
      }
    }
  }
  return {};
}

Verdict check_unflipped(const GraphAction& a) {
  const Graph& y = a.carrier();
  for (EdgeId e = 0; e < y.num_edges(); ++e) {
    const Subgroup stab = a.edge_stabilizer(e);
    for (Element g : stab.elements()) {
      if (g != FiniteGroup::kIdentity) return {false, Json{{"edge", y.edge_label(e)}, {"element", a.group().name(g)}}};
    }
  }
  return {};
}

Verdict check_etale(const PointedCover& c) {
  for (Vertex w = 0; w < c.carrier().num_vertices(); ++w) {
    Subgroup i = inertia_group(c, w);
    if (!i.is_trivial()) {
      return {false, Json{{"vertex", c.carrier().vertex_label(w)}, {"inertia_order", i.order()}}};
    }
  }
  return {};
}

int cmd_verify(const Options& opt, const std::string& ref, std::string check) {
  if (check == "étale") check = "etale";
  const Json j = load_ref(opt, ref);
  const std::string kind = kind_of(j);

  std::optional<GraphMorphism> morphism;
  std::optional<GraphAction> action;
  std::optional<PointedCover> cover;
  loading([&] {
    if (kind == "morphism") morphism = io::morphism_from_json(j);
    else if (kind == "action") action = io::action_from_json(j);
    else if (kind == "cover") cover = io::cover_from_json(j);
    else throw InputError("InvalidInput", "verify needs a morphism, action or cover", kind);
    return 0;
  });
  if (cover) action = cover->action();

  Verdict v;
  if (check == "harmonic-morphism") {
    if (cover) morphism = cover->projection();
    else if (action) morphism = quotient(*action).morphism;
    v = check_harmonic_morphism(*morphism);
  } else if (check == "faithful" || check == "harmonic-action" || check == "unflipped" || check == "etale") {
    if (!action) throw InputError("InvalidInput", check + " needs an action or a cover", kind);
    if (check == "faithful") v = check_faithful(*action);
    if (check == "harmonic-action") v = check_harmonic_action(*action);
    if (check == "unflipped") v = check_unflipped(*action);
    if (check == "etale") {
      if (!cover) cover = PointedCover::from_quotient(*action, 0);
      v = check_etale(*cover);
    }
  } else {
    throw InputError("InvalidInput", "unknown check", check);
  }

  Json r = Json::object();
  r["check"] = check;
  r["result"] = v.pass ? "pass" : "fail";
  r["witness"] = v.witness;
  std::cout << r.dump() << "\n";
  return v.pass ? kPass : kFail;
}

// -- build -----------------------------------------------------------------------

struct BuildArgs {
  std::string kind;
  std::string input;
  std::string group;
  std::string units;
  std::string inertia;
  std::string point;
};

Json solution_json(const std::string& kind, const PointedCover& c, const CoverDescriptor& d,
                   const InertiaStructure& inertia) {
  Json j = Json::object();
  j["kind"] = kind;
  j["cover"] = io::to_json(c);
  j["descriptor"] = io::to_json(d);
  j["inertia"] = io::to_json(inertia, c.base());
  return j;
}

Vertex carrier_point(const Graph& g, const std::string& point) {
  if (point.empty()) return 0;
  if (auto v = g.find_vertex(point)) return *v;
  throw InputError("UnknownVertex", "no such vertex", point);
}

int cmd_build(const Options& opt, const BuildArgs& b) {
  const std::string& k = b.kind;
  auto need_input = [&](std::initializer_list<std::string_view> kinds) {
    if (b.input.empty()) throw InputError("InvalidInput", "build " + k + " needs --input", "");
    Json j = load_ref(opt, b.input);
    expect_kind(j, kinds);
    return j;
  };

  if (k == "cayley") {
    if (b.group.empty()) throw InputError("InvalidInput", "build cayley needs --group", "");
    auto [g, s] = loading([&] {
      FiniteGroup g = io::group_from_json(b.group.front() == '{' ? Json::parse(b.group) : Json(b.group));
      SymmetricMultiset s = io::units_from_string(g, b.units);
      return std::pair{g, s};
    });
    GraphAction a = cayley_graph(g, s);
    write_outputs(opt, io::to_json(a), to_dot(a));
  } else if (k == "quotient") {
    Json j = need_input({"action"});
    GraphAction a = loading([&] { return io::action_from_json(j); });
    Quotient q = quotient(a);
    write_outputs(opt, io::to_json(q.morphism), to_dot(q.graph));
  } else if (k == "unflipped" || k == "unflipped-model") {
    Json j = need_input({"action"});
    GraphAction a = loading([&] { return io::action_from_json(j); });
    GraphAction m = unflipped_model(a);
    write_outputs(opt, io::to_json(m), to_dot(m));
  } else if (k == "synthesize") {
    Json j = need_input({"descriptor"});
    CoverDescriptor d = loading([&] { return io::descriptor_from_json(j); });
    PointedCover c = synthesize_etale(d);
    write_outputs(opt, io::to_json(c), to_dot(c));
  } else if (k == "classify") {
    Json j = need_input({"cover"});
    PointedCover c = loading([&] { return io::cover_from_json(j); });
    CoverDescriptor d = classify_etale(c, spanning_tree(c.base(), c.basepoint()));
    write_outputs(opt, io::to_json(d), to_dot(d.base));
  } else if (k == "collapse") {
    Json j = need_input({"cover"});
    if (b.inertia.empty()) throw InputError("InvalidInput", "build collapse needs --inertia", "");
    Json ij = load_ref(opt, b.inertia);
    expect_kind(ij, {"inertia"});
    PointedCover c = loading([&] { return io::cover_from_json(j); });
    InertiaStructure in = loading([&] { return io::inertia_from_json(ij, c.base()); });
    PointedCover out = collapse(c, in);
    write_outputs(opt, io::to_json(out), to_dot(out));
  } else if (k == "etalize") {
    Json j = need_input({"cover", "action"});
    PointedCover c = loading([&] {
      if (kind_of(j) == "cover") return io::cover_from_json(j);
      GraphAction a = io::action_from_json(j);
      return PointedCover::from_quotient(a, carrier_point(a.carrier(), b.point));
    });
    Etalization et = etalize(c, spanning_tree(c.base(), c.basepoint()));
    write_outputs(opt, solution_json("etalization", et.cover, et.descriptor, et.inertia), to_dot(et.cover));
  } else if (k == "embed") {
    Json j = need_input({"embedding-problem"});
    EmbeddingProblem p = loading([&] {
      EmbeddingProblem p = io::embedding_problem_from_json(j);
      if (!opt.policy.empty()) p.policy = io::policy_from_string(opt.policy);
      return p;
    });
    EmbeddingSolution s = solve_embedding(p);
    write_outputs(opt, solution_json("embedding-solution", s.cover, s.descriptor, s.inertia), to_dot(s.cover));
  } else if (k == "gw") {
    Json j = need_input({"gw-problem"});
    GrunwaldWangProblem p = loading([&] { return io::gw_problem_from_json(j); });
    GrunwaldWangSolution s = grunwald_wang(p);
    write_outputs(opt, solution_json("gw-solution", s.cover, s.descriptor, s.inertia), to_dot(s.cover));
  } else {
    throw InputError("InvalidInput", "unknown build kind", k);
  }
  return kPass;
}

// -- roundtrip / export-dot ------------------------------------------------------

int cmd_roundtrip(const Options& opt, const std::string& ref, const std::string& inertia_ref) {
  Json j = load_ref(opt, ref);
  expect_kind(j, {"descriptor"});
  CoverDescriptor d = loading([&] { return io::descriptor_from_json(j); });
  std::optional<InertiaStructure> inertia;
  if (!inertia_ref.empty()) {
    Json ij = load_ref(opt, inertia_ref);
    expect_kind(ij, {"inertia"});
    inertia = loading([&] { return io::inertia_from_json(ij, d.base); });
  }

  PointedCover c = synthesize_etale(d);
  if (!inertia) {
    CoverDescriptor back = classify_etale(c, d.tree);
    const bool ok = descriptor_equivalent(back, d, opt.pointed);
    std::cout << (ok ? "roundtrip: exact\n" : "roundtrip: mismatch\n");
    return ok ? kPass : kFail;
  }
  PointedCover collapsed = collapse(c, *inertia, d.tree);
  Etalization et = etalize(collapsed, d.tree);
  const bool ok = equivariant_isomorphic(collapse(et.cover, et.inertia, d.tree), collapsed, opt.pointed).has_value();
  std::cout << (ok ? "roundtrip: isomorphic\n" : "roundtrip: mismatch\n");
  return ok ? kPass : kFail;
}

int cmd_export_dot(const Options& opt, const std::string& ref) {
  Json j = load_ref(opt, ref);
  const std::string kind = kind_of(j);
  std::string text = loading([&] {
    if (kind == "graph") return to_dot(io::graph_from_json(j));
    if (kind == "loopgraph") return to_dot(io::loop_graph_from_json(j));
    if (kind == "action") return to_dot(io::action_from_json(j));
    if (kind == "cover") return to_dot(io::cover_from_json(j));
    if (kind == "morphism") return to_dot(io::morphism_from_json(j).source());
    if (kind == "descriptor") return to_dot(io::descriptor_from_json(j).base);
    if (j.is_object() && j.contains("cover")) return to_dot(io::cover_from_json(j.at("cover")));
    throw InputError("InvalidInput", "no DOT rendering for this kind", kind);
  });
  if (opt.out.empty()) std::cout << text;
  else loading([&] { io::write_text_file(opt.out, text); });
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, classify and verify harmonic G-covers of finite graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--workspace", opt.workspace, "Directory of named JSON objects");
  app.add_option("--out", opt.out, "Write the result here instead of stdout");
  app.add_option("--dot", opt.dot, "Also write a DOT rendering");
  app.add_flag("--pointed,!--unpointed", opt.pointed, "Compare covers with or without base points");
  app.add_option("--policy", opt.policy, "Inertia lift policy for embed")
      ->check(CLI::IsMember({"preimage", "section", "explicit", "trivial-where-trivial"}));

  std::string ref, check, inertia_ref;
  BuildArgs b;

  CLI::App* verify = app.add_subcommand("verify", "Run a predicate on an object");
  verify->add_option("object", ref, "Object file or workspace name")->required();
  verify->add_option("check", check, "harmonic-morphism | harmonic-action | etale | unflipped | faithful")->required();

  CLI::App* build = app.add_subcommand("build", "Build an object");
  build->add_option("kind", b.kind,
                    "cayley | quotient | unflipped | synthesize | classify | collapse | etalize | embed | gw")
      ->required();
  build->add_option("--input", b.input, "Input object");
  build->add_option("--group", b.group, "Group keyword (cyclic:n, dihedral:n, sym:n) or JSON");
  build->add_option("--units", b.units, "Cayley units, e.g. \"pair:σ;inv:τ\"");
  build->add_option("--inertia", b.inertia, "Inertia structure for collapse");
  build->add_option("--point", b.point, "Cover point when etalizing a bare action");

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "Check the synthesize/classify round trips");
  roundtrip->add_option("descriptor", ref, "Descriptor file or workspace name")->required();
  roundtrip->add_option("--inertia", inertia_ref, "Also run the collapse/etalize round trip");

  CLI::App* export_dot = app.add_subcommand("export-dot", "Render an object as DOT");
  export_dot->add_option("object", ref, "Object file or workspace name")->required();

  // Global flags are accepted after the subcommand too.
  for (CLI::App* sub : {verify, build, roundtrip, export_dot}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*verify) return cmd_verify(opt, ref, check);
    if (*build) return cmd_build(opt, b);
    if (*roundtrip) return cmd_roundtrip(opt, ref, inertia_ref);
    if (*export_dot) return cmd_export_dot(opt, ref);
  } catch (const InputError& e) {
    report_error(e.code, e.what(), e.witness);
    return kInputError;
  } catch (const Error& e) {
    report_error(error_code_name(e.code()), e.what(), e.witness());
    return kFail;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what(), "");
    return kFail;
  }
  return kPass;
}
