#include "harmcov/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace harmcov {

namespace {

// Compress a word such as "σσt" into "σ^2t".
std::string compress_word(const std::vector<std::string>& letters) {
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out += letters[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Permutation compose_perm(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->n = 1;
  d->table = {0};
  d->inverse = {0};
  d->names = {"e"};
  d_ = std::move(d);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "empty multiplication table");
  if (n > kGroupOrderLimit) throw Error(ErrorCode::kSizeLimitExceeded, "group order above limit");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw Error(ErrorCode::kInvalidInput, "table is not square");
    for (int b = 0; b < n; ++b) {
      int c = table[a][b];
      if (c < 0 || c >= n) throw Error(ErrorCode::kInvalidInput, "table entry out of range");
      d->table[a * n + b] = c;
    }
  }
  auto at = [&](int a, int b) { return d->table[a * n + b]; };
  for (int a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      throw Error(ErrorCode::kInvalidInput, "element 0 is not the identity", std::to_string(a));
    }
  }
  d->inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (at(a, b) == 0 && at(b, a) == 0) d->inverse[a] = b;
    }
    if (d->inverse[a] < 0) throw Error(ErrorCode::kInvalidInput, "element has no inverse", std::to_string(a));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw Error(ErrorCode::kInvalidInput, "table is not associative",
                      std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
        }
      }
    }
  }
  if (names.empty()) {
    names.resize(n);
    names[0] = "e";
    for (int a = 1; a < n; ++a) names[a] = "g" + std::to_string(a);
  }
  if (static_cast<int>(names.size()) != n) throw Error(ErrorCode::kInvalidInput, "wrong number of element names");
  d->names = std::move(names);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                           const std::vector<std::string>& generator_names) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const Permutation& p : generators) {
    std::vector<char> hit(degree, 0);
    if (p.size() != degree) throw Error(ErrorCode::kInvalidInput, "generators act on different sets");
    for (int x : p) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || hit[x]) {
        throw Error(ErrorCode::kInvalidInput, "generator is not a permutation");
      }
      hit[x] = 1;
    }
  }
  std::vector<std::string> gen_names = generator_names;
  for (std::size_t i = gen_names.size(); i < generators.size(); ++i) gen_names.push_back("x" + std::to_string(i + 1));

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Permutation> elements{identity};
  std::vector<std::vector<std::string>> words{{}};
  std::map<Permutation, int> index{{identity, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Permutation next = compose_perm(elements[k], generators[s]);
      if (index.count(next)) continue;
      if (static_cast<int>(elements.size()) >= kGroupOrderLimit) {
        throw Error(ErrorCode::kSizeLimitExceeded, "generated group exceeds order limit");
      }
      index.emplace(next, static_cast<int>(elements.size()));
      elements.push_back(next);
      std::vector<std::string> w = words[k];
      w.push_back(gen_names[s]);
      words.push_back(std::move(w));
    }
  }
  const int n = static_cast<int>(elements.size());
  auto d = std::make_shared<Data>();
  d->n = n;
  d->table.resize(static_cast<std::size_t>(n) * n);
  d->inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int c = index.at(compose_perm(elements[a], elements[b]));
      d->table[a * n + b] = c;
      if (c == 0) d->inverse[a] = b;
    }
  }
  d->names.resize(n);
  d->names[0] = "e";
  for (int a = 1; a < n; ++a) d->names[a] = compress_word(words[a]);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "cyclic group order must be positive");
  if (n == 1) return FiniteGroup();
  Permutation rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return from_permutations({rot}, {"α"});
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "dihedral parameter must be positive");
  if (n == 1) return cyclic(2);
  if (n == 2) {
    // Klein four-group acting on {0,1,2,3}.
    return from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}, {"ρ", "τ"});
  }
  Permutation rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return from_permutations({rot, refl}, {"ρ", "τ"});
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "symmetric group degree must be positive");
  if (n == 1) return FiniteGroup();
  if (n == 2) return from_permutations({{1, 0}}, {"τ"});
  Permutation cycle(n), swap(n);
  for (int i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  return from_permutations({cycle, swap}, {"σ", "τ"});
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order();
  const int n = g.order() * m;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = "(" + g.name(a / m) + "," + h.name(a % m) + ")";
    for (int b = 0; b < n; ++b) table[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  }
  names[0] = "e";
  return from_table(table, names);
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != kIdentity; x = mul(x, a)) ++k;
  return k;
}

std::optional<Element> FiniteGroup::find(const std::string& token) const {
  for (Element a = 0; a < order(); ++a) {
    if (d_->names[a] == token) return a;
  }
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    long v = std::stol(token);
    if (v >= 0 && v < order()) return static_cast<Element>(v);
  }
  return std::nullopt;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order(), std::vector<int>(order()));
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  }
  return t;
}

// -- Subgroups ---------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup group, std::vector<Element> elements)
    : group_(std::move(group)), member_(group_.order(), 0) {
  for (Element a : elements) {
    if (!group_.valid(a)) throw Error(ErrorCode::kNotSubgroup, "element out of range", std::to_string(a));
    member_[a] = 1;
  }
  if (!member_[FiniteGroup::kIdentity]) throw Error(ErrorCode::kNotSubgroup, "identity missing");
  for (Element a = 0; a < group_.order(); ++a) {
    if (!member_[a]) continue;
    elements_.push_back(a);
    for (Element b = 0; b < group_.order(); ++b) {
      if (member_[b] && !member_[group_.mul(a, b)]) {
        throw Error(ErrorCode::kNotSubgroup, "not closed under products", group_.name(group_.mul(a, b)));
      }
    }
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {FiniteGroup::kIdentity}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Element a) { return other.contains(a); });
}

std::pair<FiniteGroup, GroupHom> Subgroup::as_group() const {
  const int n = order();
  std::vector<int> local(group_.order(), -1);
  for (int i = 0; i < n; ++i) local[elements_[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = group_.name(elements_[i]);
    for (int j = 0; j < n; ++j) table[i][j] = local[group_.mul(elements_[i], elements_[j])];
  }
  FiniteGroup h = FiniteGroup::from_table(table, names);
  return {h, GroupHom(h, group_, elements_)};
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{FiniteGroup::kIdentity};
  in[0] = 1;
  std::vector<Element> gens;
  for (Element s : seeds) {
    if (!g.valid(s)) throw Error(ErrorCode::kInvalidInput, "seed out of range", std::to_string(s));
    gens.push_back(s);
  }
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (Element s : gens) {
      Element x = g.mul(members[k], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  return Subgroup(g, members);
}

Subgroup conjugate_subgroup(Element g, const Subgroup& h) {
  std::vector<Element> out;
  for (Element a : h.elements()) out.push_back(h.group().conj(g, a));
  return Subgroup(h.group(), out);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_limit) {
  if (g.order() > order_limit) {
    throw Error(ErrorCode::kSizeLimitExceeded, "subgroup enumeration limited to order " + std::to_string(order_limit));
  }
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  seen.insert(found.front().elements());
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (Element a = 1; a < g.order(); ++a) {
      if (found[k].contains(a)) continue;
      std::vector<Element> seeds = found[k].elements();
      seeds.push_back(a);
      Subgroup next = subgroup_generated(g, seeds);
      if (seen.insert(next.elements()).second) found.push_back(next);
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

std::vector<std::vector<Element>> left_cosets(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Element>> cosets;
  for (Element a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<Element> c;
    for (Element x : h.elements()) c.push_back(g.mul(a, x));
    std::sort(c.begin(), c.end());
    for (Element x : c) done[x] = 1;
    cosets.push_back(std::move(c));
  }
  return cosets;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& i) {
  const FiniteGroup& g = i.group();
  std::vector<int> block_of(g.order(), -1);
  std::vector<DoubleCoset> blocks;
  for (Element a = 0; a < g.order(); ++a) {
    if (block_of[a] >= 0) continue;
    DoubleCoset dc;
    std::set<Element> members;
    for (Element x : i.elements()) {
      for (Element y : i.elements()) members.insert(g.mul(g.mul(x, a), y));
    }
    dc.elements.assign(members.begin(), members.end());
    dc.representative = a;
    for (Element m : dc.elements) block_of[m] = static_cast<int>(blocks.size());
    blocks.push_back(std::move(dc));
  }
  for (DoubleCoset& dc : blocks) {
    dc.inverse_block = block_of[g.inv(dc.representative)];
    dc.self_inverse = &blocks[dc.inverse_block] == &dc;
    if (!dc.self_inverse) continue;
    for (Element d : dc.elements) {
      // dI == d^-1 I  iff  d * d  lies in I
      if (i.contains(g.mul(d, d))) {
        dc.symmetric_representative = d;
        break;
      }
    }
  }
  return blocks;
}

// -- Homomorphisms -----------------------------------------------------------

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.order()) {
    throw Error(ErrorCode::kInvalidInput, "homomorphism needs one image per source element");
  }
  for (Element x : images_) {
    if (!target_.valid(x)) throw Error(ErrorCode::kInvalidInput, "homomorphism image out of range");
  }
  for (Element a = 0; a < source_.order(); ++a) {
    for (Element b = 0; b < source_.order(); ++b) {
      if (images_[source_.mul(a, b)] != target_.mul(images_[a], images_[b])) {
        throw Error(ErrorCode::kInvalidInput, "map is not a homomorphism",
                    source_.name(a) + "*" + source_.name(b));
      }
    }
  }
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Element> im(g.order());
  std::iota(im.begin(), im.end(), 0);
  return GroupHom(g, g, std::move(im));
}

bool GroupHom::is_injective() const { return kernel().is_trivial(); }

bool GroupHom::is_surjective() const { return image().is_whole(); }

Subgroup GroupHom::kernel() const {
  std::vector<Element> k;
  for (Element a = 0; a < source_.order(); ++a) {
    if (images_[a] == FiniteGroup::kIdentity) k.push_back(a);
  }
  return Subgroup(source_, k);
}

Subgroup GroupHom::image() const { return Subgroup(target_, images_); }

Subgroup GroupHom::image(const Subgroup& h) const {
  std::vector<Element> im;
  for (Element a : h.elements()) im.push_back(images_.at(a));
  return Subgroup(target_, im);
}

Subgroup GroupHom::preimage(const Subgroup& h) const {
  std::vector<Element> pre;
  for (Element a = 0; a < source_.order(); ++a) {
    if (h.contains(images_[a])) pre.push_back(a);
  }
  return Subgroup(source_, pre);
}

std::optional<Element> GroupHom::smallest_preimage(Element target_element) const {
  for (Element a = 0; a < source_.order(); ++a) {
    if (images_[a] == target_element) return a;
  }
  return std::nullopt;
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.target() == outer.source())) throw Error(ErrorCode::kGroupMismatch, "cannot compose homomorphisms");
  std::vector<Element> im;
  for (Element a = 0; a < inner.source().order(); ++a) im.push_back(outer(inner(a)));
  return GroupHom(inner.source(), outer.target(), im);
}

// -- Symmetric multisets -----------------------------------------------------

SymmetricMultiset::SymmetricMultiset(FiniteGroup group) : group_(std::move(group)), mult_(group_.order(), 0) {}

SymmetricMultiset SymmetricMultiset::from_elements(FiniteGroup group, const std::vector<Element>& elements) {
  SymmetricMultiset s(std::move(group));
  for (Element a : elements) {
    if (!s.group_.valid(a)) throw Error(ErrorCode::kNotSymmetric, "element out of range", std::to_string(a));
    ++s.mult_[a];
  }
  if (s.mult_[FiniteGroup::kIdentity] != 0) {
    throw Error(ErrorCode::kNotSymmetric, "multiset contains the identity", "e");
  }
  for (Element a = 0; a < s.group_.order(); ++a) {
    if (s.mult_[a] != s.mult_[s.group_.inv(a)]) {
      throw Error(ErrorCode::kNotSymmetric, "multiplicity of an element differs from that of its inverse",
                  s.group_.name(a));
    }
  }
  return s;
}

SymmetricMultiset SymmetricMultiset::from_units(FiniteGroup group, const std::vector<Element>& units) {
  SymmetricMultiset s(std::move(group));
  for (Element d : units) s.add_unit(d);
  return s;
}

void SymmetricMultiset::add_unit(Element d) {
  if (!group_.valid(d) || d == FiniteGroup::kIdentity) {
    throw Error(ErrorCode::kNotSymmetric, "unit must be a non-identity element", std::to_string(d));
  }
  ++mult_[d];
  if (!group_.is_involution(d)) ++mult_[group_.inv(d)];
}

int SymmetricMultiset::size() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

std::vector<Element> SymmetricMultiset::units() const {
  std::vector<Element> out;
  for (Element a = 1; a < group_.order(); ++a) {
    if (unit_representative(group_, a) != a) continue;
    for (int k = 0; k < mult_[a]; ++k) out.push_back(a);
  }
  return out;
}

std::vector<Element> SymmetricMultiset::elements() const {
  std::vector<Element> out;
  for (Element a = 1; a < group_.order(); ++a) {
    for (int k = 0; k < mult_[a]; ++k) out.push_back(a);
  }
  return out;
}

SymmetricMultiset SymmetricMultiset::conjugated(Element g) const {
  SymmetricMultiset s(group_);
  for (Element a = 0; a < group_.order(); ++a) s.mult_[group_.conj(g, a)] += mult_[a];
  return s;
}

SymmetricMultiset SymmetricMultiset::mapped(const GroupHom& phi) const {
  if (!(phi.source() == group_)) throw Error(ErrorCode::kGroupMismatch, "multiset group differs from hom source");
  if (!phi.is_injective()) throw Error(ErrorCode::kInvalidInput, "multisets can only be pushed along injections");
  SymmetricMultiset s(phi.target());
  for (Element a = 0; a < group_.order(); ++a) s.mult_[phi(a)] += mult_[a];
  return s;
}

}  // namespace harmcov
