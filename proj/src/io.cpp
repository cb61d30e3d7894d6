#include "harmcov/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace harmcov::io {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& witness = {}) {
  throw Error(ErrorCode::kInvalidInput, what, witness);
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
         (s.size() == 1 || s[0] != '0');
}

Json id_json(const std::string& label) {
  if (all_digits(label)) return std::stoi(label);
  return label;
}

std::string id_string(const Json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  fail("identifier must be a string or an integer", j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

// Labels are written as identifiers only when they are unique; otherwise
// positions are used, which always are.
template <bool L>
std::vector<std::string> vertex_ids(const BasicGraph<L>& g) {
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ids.push_back(g.vertex_label(v));
    seen.insert(ids.back());
  }
  if (static_cast<int>(seen.size()) != g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) ids[v] = std::to_string(v);
  }
  return ids;
}

template <bool L>
std::vector<std::string> edge_ids(const BasicGraph<L>& g) {
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    ids.push_back(g.edge_label(e));
    seen.insert(ids.back());
  }
  if (static_cast<int>(seen.size()) != g.num_edges()) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) ids[e] = std::to_string(e);
  }
  return ids;
}

template <bool L>
Json graph_json(const BasicGraph<L>& g) {
  Json j = Json::object();
  if (L) j["kind"] = "loopgraph";
  std::vector<std::string> vids = vertex_ids(g);
  std::vector<std::string> eids = edge_ids(g);
  Json vs = Json::array();
  for (const std::string& s : vids) vs.push_back(id_json(s));
  j["vertices"] = vs;
  Json es = Json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Json ej = Json::object();
    ej["id"] = id_json(eids[e]);
    ej["ends"] = Json::array({id_json(vids[g.ends(e).u]), id_json(vids[g.ends(e).v])});
    es.push_back(ej);
  }
  j["edges"] = es;
  return j;
}

template <bool L>
BasicGraph<L> parse_graph(const Json& j) {
  if (j.contains("kind") && j.at("kind") == "loopgraph" && !L) fail("loop-graph given where a graph is expected");
  BasicGraph<L> g;
  std::map<std::string, Vertex> index;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) fail("\"vertices\" must be an array");
  for (const Json& v : vs) {
    std::string id = id_string(v);
    if (index.count(id)) fail("duplicate vertex identifier", id);
    index[id] = g.add_vertex(id);
  }
  const Json& es = field(j, "edges");
  if (!es.is_array()) fail("\"edges\" must be an array");
  std::set<std::string> seen;
  for (const Json& e : es) {
    std::string id = e.contains("id") ? id_string(e.at("id")) : std::to_string(g.num_edges());
    if (!seen.insert(id).second) fail("duplicate edge identifier", id);
    const Json& ends = field(e, "ends");
    if (!ends.is_array() || ends.size() != 2) fail("edge needs two ends", id);
    auto lookup = [&](const Json& x) {
      auto it = index.find(id_string(x));
      if (it == index.end()) fail("edge end is not a vertex", id_string(x));
      return it->second;
    };
    const Vertex u = lookup(ends[0]), v = lookup(ends[1]);
    if (!L && u == v) fail("loop edge in a graph; use \"kind\":\"loopgraph\"", id);
    g.add_edge(u, v, id);
  }
  return g;
}

Vertex vertex_ref(const Graph& g, const Json& j) {
  const std::string id = id_string(j);
  if (auto v = g.find_vertex(id)) return *v;
  fail("unknown vertex", id);
}

EdgeId edge_ref(const Graph& g, const Json& j) {
  const std::string id = id_string(j);
  if (auto e = g.find_edge(id)) return *e;
  fail("unknown edge", id);
}

Json element_json(const FiniteGroup& g, Element a) { return g.name(a); }

Json subgroup_json(const Subgroup& h) {
  Json arr = Json::array();
  for (Element a : h.elements()) arr.push_back(element_json(h.group(), a));
  return arr;
}

Json multiset_json(const SymmetricMultiset& s) {
  Json arr = Json::array();
  for (Element u : s.units()) arr.push_back(element_json(s.group(), u));
  return arr;
}

}  // namespace

Json to_json(const Graph& g) { return graph_json(g); }
Json to_json(const LoopGraph& g) { return graph_json(g); }

Json to_json(const FiniteGroup& g) {
  Json j = Json::object();
  j["order"] = g.order();
  j["table"] = g.table();
  j["names"] = g.names();
  return j;
}

Json to_json(const GraphAction& a) {
  const Graph& y = a.carrier();
  std::vector<std::string> vids = vertex_ids(y);
  std::vector<std::string> eids = edge_ids(y);
  Json j = Json::object();
  j["kind"] = "action";
  j["group"] = to_json(a.group());
  j["carrier"] = to_json(y);
  Json vp = Json::array(), ep = Json::array();
  for (Element g = 0; g < a.group().order(); ++g) {
    Json row = Json::array();
    for (Vertex v = 0; v < y.num_vertices(); ++v) row.push_back(id_json(vids[a.act(g, v)]));
    vp.push_back(row);
    Json erow = Json::array();
    for (EdgeId e = 0; e < y.num_edges(); ++e) erow.push_back(id_json(eids[a.act_edge(g, e)]));
    ep.push_back(erow);
  }
  j["vertex_perms"] = vp;
  j["edge_perms"] = ep;
  return j;
}

namespace {

Json maps_json(const GraphMorphism& phi) {
  std::vector<std::string> bv = vertex_ids(phi.target());
  std::vector<std::string> be = edge_ids(phi.target());
  Json vm = Json::array(), em = Json::array();
  for (Vertex v : phi.vertex_map()) vm.push_back(id_json(bv[v]));
  for (const EdgeImage& im : phi.edge_map()) {
    Json e = Json::object();
    if (const auto* t = std::get_if<ToEdge>(&im)) e["edge"] = id_json(be[t->edge]);
    else e["vertex"] = id_json(bv[std::get<ToVertex>(im).vertex]);
    em.push_back(e);
  }
  return Json{{"vertex_map", vm}, {"edge_map", em}};
}

GraphMorphism parse_maps(const Graph& y, const Graph& x, const Json& proj) {
  const Json& vm = field(proj, "vertex_map");
  const Json& em = field(proj, "edge_map");
  if (!vm.is_array() || !em.is_array() || static_cast<int>(vm.size()) != y.num_vertices() ||
      static_cast<int>(em.size()) != y.num_edges()) {
    fail("map must list every source vertex and edge");
  }
  std::vector<Vertex> vmap;
  for (const Json& v : vm) vmap.push_back(vertex_ref(x, v));
  std::vector<EdgeImage> emap;
  for (const Json& e : em) {
    if (e.contains("edge")) emap.push_back(ToEdge{edge_ref(x, e.at("edge"))});
    else if (e.contains("vertex")) emap.push_back(ToVertex{vertex_ref(x, e.at("vertex"))});
    else fail("edge image needs \"edge\" or \"vertex\"");
  }
  return GraphMorphism(y, x, std::move(vmap), std::move(emap));
}

}  // namespace

Json to_json(const GraphMorphism& phi) {
  Json j = Json::object();
  j["kind"] = "morphism";
  j["source"] = to_json(phi.source());
  j["target"] = to_json(phi.target());
  Json m = maps_json(phi);
  j["vertex_map"] = m["vertex_map"];
  j["edge_map"] = m["edge_map"];
  return j;
}

Json to_json(const PointedCover& c) {
  Json j = Json::object();
  j["kind"] = "cover";
  j["action"] = to_json(c.action());
  j["base"] = to_json(c.base());
  j["basepoint"] = id_json(vertex_ids(c.base())[c.basepoint()]);
  j["cover_point"] = id_json(vertex_ids(c.carrier())[c.cover_point()]);
  j["projection"] = maps_json(c.projection());
  return j;
}

Json to_json(const CoverDescriptor& d) {
  std::vector<std::string> bv = vertex_ids(d.base);
  std::vector<std::string> be = edge_ids(d.base);
  Json j = Json::object();
  j["kind"] = "descriptor";
  j["base"] = to_json(d.base);
  j["group"] = to_json(d.group);
  Json nontree = Json::array();
  for (std::size_t i = 0; i < d.tree.nontree.size(); ++i) {
    const OrientedEdge& oe = d.tree.nontree[i];
    Json e = Json::object();
    e["edge"] = id_json(be[oe.edge]);
    e["orient"] = Json::array({id_json(bv[oe.from]), id_json(bv[oe.to])});
    e["monodromy"] = element_json(d.group, d.monodromy[i]);
    nontree.push_back(e);
  }
  j["tree"] = Json{{"root", id_json(bv[d.tree.root])}, {"nontree", nontree}};
  Json ms = Json::object();
  for (Vertex z = 0; z < d.base.num_vertices(); ++z) ms[bv[z]] = multiset_json(d.multisets[z]);
  j["multisets"] = ms;
  return j;
}

Json to_json(const InertiaStructure& inertia, const Graph& base) {
  std::vector<std::string> bv = vertex_ids(base);
  Json j = Json::object();
  j["kind"] = "inertia";
  j["group"] = to_json(inertia.group);
  Json subs = Json::object();
  for (Vertex z = 0; z < base.num_vertices(); ++z) subs[bv[z]] = subgroup_json(inertia.subgroups.at(z));
  j["subgroups"] = subs;
  return j;
}

// -- Parsing ---------------------------------------------------------------------

Graph graph_from_json(const Json& j) { return parse_graph<false>(j); }
LoopGraph loop_graph_from_json(const Json& j) { return parse_graph<true>(j); }

FiniteGroup group_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "trivial") return FiniteGroup();
    const auto colon = s.find(':');
    if (colon == std::string::npos) fail("unknown group keyword", s);
    const std::string kind = s.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
      fail("group keyword needs an integer parameter", s);
    }
    if (n < 1 || n > 1000) fail("group parameter out of range", s);
    if (kind == "cyclic") return FiniteGroup::cyclic(n);
    if (kind == "dihedral") return FiniteGroup::dihedral(n);
    if (kind == "sym") {
      if (n > 7) fail("symmetric groups are limited to degree 7", s);
      return FiniteGroup::symmetric(n);
    }
    fail("unknown group keyword", s);
  }
  const Json& table = field(j, "table");
  std::vector<std::vector<int>> t;
  try {
    t = table.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    fail("group table must be a matrix of integers");
  }
  if (j.contains("order") && j.at("order") != static_cast<int>(t.size())) fail("group order disagrees with table");
  std::vector<std::string> names;
  if (j.contains("names")) {
    try {
      names = j.at("names").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      fail("group names must be strings");
    }
  }
  return FiniteGroup::from_table(t, names);
}

Element element_from_json(const FiniteGroup& g, const Json& j) {
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v < 0 || v >= g.order()) fail("element index out of range", std::to_string(v));
    return static_cast<Element>(v);
  }
  if (j.is_string()) {
    if (auto a = g.find(j.get<std::string>())) return *a;
    fail("unknown group element", j.get<std::string>());
  }
  fail("group element must be a name or an index", j.dump());
}

GraphAction action_from_json(const Json& j) {
  FiniteGroup g = group_from_json(field(j, "group"));
  Graph y = graph_from_json(field(j, "carrier"));
  const Json& vp = field(j, "vertex_perms");
  const Json& ep = field(j, "edge_perms");
  if (!vp.is_array() || !ep.is_array() || static_cast<int>(vp.size()) != g.order() ||
      static_cast<int>(ep.size()) != g.order()) {
    fail("need one vertex and one edge permutation per group element");
  }
  std::vector<std::vector<Vertex>> vperm;
  std::vector<std::vector<EdgeId>> eperm;
  for (Element a = 0; a < g.order(); ++a) {
    std::vector<Vertex> row;
    for (const Json& v : vp[a]) row.push_back(vertex_ref(y, v));
    vperm.push_back(std::move(row));
    std::vector<EdgeId> erow;
    for (const Json& e : ep[a]) erow.push_back(edge_ref(y, e));
    eperm.push_back(std::move(erow));
  }
  return GraphAction(g, y, std::move(vperm), std::move(eperm));
}

PointedCover cover_from_json(const Json& j) {
  GraphAction a = action_from_json(field(j, "action"));
  Graph x = graph_from_json(field(j, "base"));
  GraphMorphism phi = parse_maps(a.carrier(), x, field(j, "projection"));
  const Vertex basepoint = vertex_ref(x, field(j, "basepoint"));
  const Vertex cover_point = vertex_ref(a.carrier(), field(j, "cover_point"));
  return PointedCover(a, x, basepoint, std::move(phi), cover_point);
}

GraphMorphism morphism_from_json(const Json& j) {
  Graph y = graph_from_json(field(j, "source"));
  Graph x = graph_from_json(field(j, "target"));
  return parse_maps(y, x, j);
}

CoverDescriptor descriptor_from_json(const Json& j) {
  Graph x = graph_from_json(field(j, "base"));
  FiniteGroup g = group_from_json(field(j, "group"));
  const Json& tj = field(j, "tree");
  const Vertex root = vertex_ref(x, field(tj, "root"));
  std::vector<OrientedEdge> nontree;
  std::map<EdgeId, Element> mono_of;
  for (const Json& e : field(tj, "nontree")) {
    const EdgeId id = edge_ref(x, field(e, "edge"));
    const Json& o = field(e, "orient");
    if (!o.is_array() || o.size() != 2) fail("orientation needs two vertices");
    nontree.push_back({id, vertex_ref(x, o[0]), vertex_ref(x, o[1])});
    mono_of[id] = element_from_json(g, field(e, "monodromy"));
  }
  SpanningTree t = SpanningTree::from_nontree(x, root, nontree);
  std::vector<Element> mono;
  for (const OrientedEdge& oe : t.nontree) mono.push_back(mono_of.at(oe.edge));
  std::vector<SymmetricMultiset> ms(x.num_vertices(), SymmetricMultiset(g));
  if (j.contains("multisets")) {
    for (const auto& [key, units] : j.at("multisets").items()) {
      const Vertex z = vertex_ref(x, Json(key));
      for (const Json& u : units) ms[z].add_unit(element_from_json(g, u));
    }
  }
  CoverDescriptor d{x, std::move(t), g, std::move(mono), std::move(ms)};
  d.validate();
  return d;
}

InertiaStructure inertia_from_json(const Json& j, const Graph& base) {
  FiniteGroup g = group_from_json(field(j, "group"));
  InertiaStructure out = InertiaStructure::trivial(g, base.num_vertices());
  if (j.contains("subgroups")) {
    for (const auto& [key, elems] : j.at("subgroups").items()) {
      const Vertex z = vertex_ref(base, Json(key));
      std::vector<Element> members;
      for (const Json& e : elems) members.push_back(element_from_json(g, e));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      out.subgroups[z] = Subgroup(g, members);
    }
  }
  return out;
}

GroupHom hom_from_json(const FiniteGroup& source, const FiniteGroup& target, const Json& images) {
  if (!images.is_array() || static_cast<int>(images.size()) != source.order()) {
    fail("homomorphism needs one image per source element");
  }
  std::vector<Element> im;
  for (const Json& x : images) im.push_back(element_from_json(target, x));
  return GroupHom(source, target, std::move(im));
}

InertiaPolicy policy_from_string(const std::string& s) {
  if (s == "preimage") return InertiaPolicy::kPreimage;
  if (s == "section") return InertiaPolicy::kSection;
  if (s == "explicit") return InertiaPolicy::kExplicit;
  if (s == "trivial-where-trivial") return InertiaPolicy::kTrivialWhereTrivial;
  fail("unknown inertia policy", s);
}

std::string policy_name(InertiaPolicy p) {
  switch (p) {
    case InertiaPolicy::kPreimage: return "preimage";
    case InertiaPolicy::kSection: return "section";
    case InertiaPolicy::kExplicit: return "explicit";
    case InertiaPolicy::kTrivialWhereTrivial: return "trivial-where-trivial";
  }
  return "preimage";
}

EmbeddingProblem embedding_problem_from_json(const Json& j) {
  PointedCover f = cover_from_json(field(j, "cover"));
  FiniteGroup gp = group_from_json(field(j, "group"));
  GroupHom rho = hom_from_json(gp, f.group(), field(j, "rho"));
  std::optional<GroupHom> section;
  if (j.contains("section")) {
    try {
      section = hom_from_json(f.group(), gp, j.at("section"));
    } catch (const Error& e) {
      throw Error(ErrorCode::kSectionInvalid, e.what(), e.witness());
    }
  }
  InertiaPolicy policy = j.contains("policy") ? policy_from_string(j.at("policy").get<std::string>())
                                              : InertiaPolicy::kPreimage;
  std::optional<InertiaStructure> inertia;
  if (j.contains("inertia")) inertia = inertia_from_json(j.at("inertia"), f.base());
  return EmbeddingProblem{std::move(f), std::move(rho), std::move(section), policy, std::move(inertia)};
}

GrunwaldWangProblem gw_problem_from_json(const Json& j) {
  GrunwaldWangProblem p{graph_from_json(field(j, "base")), 0, group_from_json(field(j, "group")), {}, {}, {}};
  p.basepoint = vertex_ref(p.base, field(j, "basepoint"));
  if (j.contains("branch")) {
    for (const Json& b : j.at("branch")) p.branch.push_back(vertex_ref(p.base, b));
  }
  if (j.contains("locals")) {
    for (const Json& l : j.at("locals")) {
      GraphAction a = action_from_json(field(l, "action"));
      GroupHom emb = hom_from_json(a.group(), p.group, field(l, "embedding"));
      p.locals.push_back(LocalDatum{vertex_ref(p.base, field(l, "vertex")), a, emb,
                                    vertex_ref(a.carrier(), field(l, "point"))});
    }
  }
  if (j.contains("gammas")) {
    for (const Json& g : j.at("gammas")) p.gammas.push_back(element_from_json(p.group, g));
  }
  return p;
}

SymmetricMultiset units_from_string(const FiniteGroup& g, const std::string& text) {
  SymmetricMultiset s(g);
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ';')) {
    if (token.empty()) continue;
    std::string kind, name = token;
    if (const auto colon = token.find(':'); colon != std::string::npos) {
      kind = token.substr(0, colon);
      name = token.substr(colon + 1);
    }
    auto a = g.find(name);
    if (!a) fail("unknown group element", name);
    if (kind == "inv" && !g.is_involution(*a)) fail("inv unit is not an involution", name);
    if (kind == "pair" && g.is_involution(*a)) fail("pair unit is an involution", name);
    if (!kind.empty() && kind != "inv" && kind != "pair") fail("unit kind must be pair or inv", token);
    s.add_unit(*a);
  }
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file", path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what(), path);
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail("cannot write file", path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace harmcov::io
