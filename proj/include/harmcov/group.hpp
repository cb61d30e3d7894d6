#ifndef HARMCOV_GROUP_HPP_
#define HARMCOV_GROUP_HPP_

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harmcov/error.hpp"

namespace harmcov {

using Element = int;
using Permutation = std::vector<int>;

inline constexpr int kGroupOrderLimit = 5000;

// A finite group given by its multiplication table. Element 0 is the
// identity. Copies share the immutable table.
class FiniteGroup {
 public:
  static constexpr Element kIdentity = 0;

  // The trivial group.
  FiniteGroup();

  // Validates the group axioms exhaustively; throws kInvalidInput.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> names = {});
  // Closure of the generators under composition, elements in breadth-first
  // order of words in the generators. (p*q)(i) = p(q(i)).
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                       const std::vector<std::string>& generator_names = {});
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);   // order 2n
  static FiniteGroup symmetric(int n);
  // Direct product, element (a, b) has index a * |h| + b.
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return d_->n; }
  Element mul(Element a, Element b) const { return d_->table[a * d_->n + b]; }
  Element inv(Element a) const { return d_->inverse[a]; }
  Element conj(Element g, Element a) const { return mul(mul(g, a), inv(g)); }
  bool is_involution(Element a) const { return a != kIdentity && mul(a, a) == kIdentity; }
  int element_order(Element a) const;
  bool valid(Element a) const { return a >= 0 && a < order(); }

  const std::string& name(Element a) const { return d_->names.at(a); }
  // Looks an element up by display name or by decimal index.
  std::optional<Element> find(const std::string& token) const;

  std::vector<std::vector<int>> table() const;
  const std::vector<std::string>& names() const { return d_->names; }

  // Same multiplication table (names ignored).
  bool operator==(const FiniteGroup& other) const {
    return d_ == other.d_ || (d_->n == other.d_->n && d_->table == other.d_->table);
  }

 private:
  struct Data {
    int n = 1;
    std::vector<int> table;
    std::vector<int> inverse;
    std::vector<std::string> names;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class GroupHom;

class Subgroup {
 public:
  // Throws kNotSubgroup unless `elements` is closed and contains the identity.
  Subgroup(FiniteGroup group, std::vector<Element> elements);

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& elements() const { return elements_; }
  bool contains(Element a) const { return member_.at(a) != 0; }
  int order() const { return static_cast<int>(elements_.size()); }
  int index() const { return group_.order() / order(); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == group_.order(); }
  bool is_subset_of(const Subgroup& other) const;

  // The subgroup as an abstract group, elements ordered as in `elements()`,
  // together with its inclusion into the parent.
  std::pair<FiniteGroup, GroupHom> as_group() const;

  bool operator==(const Subgroup& other) const {
    return group_ == other.group_ && elements_ == other.elements_;
  }

 private:
  FiniteGroup group_;
  std::vector<Element> elements_;  // sorted
  std::vector<char> member_;
};

class GroupHom {
 public:
  // Throws kInvalidInput unless images define a homomorphism.
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Element> images);
  static GroupHom identity(const FiniteGroup& g);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  Element operator()(Element a) const { return images_.at(a); }
  const std::vector<Element>& images() const { return images_; }

  bool is_injective() const;
  bool is_surjective() const;
  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image(const Subgroup& h) const;
  Subgroup preimage(const Subgroup& h) const;
  // Smallest-index preimage of a target element, if any.
  std::optional<Element> smallest_preimage(Element target_element) const;

  bool operator==(const GroupHom&) const = default;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> images_;
};

GroupHom compose(const GroupHom& outer, const GroupHom& inner);

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& seeds);
Subgroup conjugate_subgroup(Element g, const Subgroup& h);
// Every subgroup, ordered by (order, elements). Throws kSizeLimitExceeded
// above `order_limit`.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_limit = 64);

// Left cosets gH, each sorted, listed by smallest element.
std::vector<std::vector<Element>> left_cosets(const Subgroup& h);

struct DoubleCoset {
  std::vector<Element> elements;  // sorted
  Element representative;         // smallest element
  bool self_inverse;              // I d I == I d^-1 I
  int inverse_block;              // index of I d^-1 I in the partition
  // For self-inverse blocks: smallest d in the block with dI == d^-1 I.
  std::optional<Element> symmetric_representative;
};

// The partition I\G/I, blocks ordered by representative.
std::vector<DoubleCoset> double_cosets(const Subgroup& i);

// A finite multiset of non-identity elements, stable under inversion.
//
// A "unit" is either an inverse pair {d, d^-1} with d^2 != e or a single
// involution. Units are named by their canonical representative
// min(d, d^-1); the sorted unit list is the normal form.
class SymmetricMultiset {
 public:
  explicit SymmetricMultiset(FiniteGroup group);

  // Throws kNotSymmetric unless the multiset is inversion-stable and
  // identity-free.
  static SymmetricMultiset from_elements(FiniteGroup group, const std::vector<Element>& elements);
  static SymmetricMultiset from_units(FiniteGroup group, const std::vector<Element>& units);

  const FiniteGroup& group() const { return group_; }
  int multiplicity(Element a) const { return mult_.at(a); }
  int size() const;
  bool empty() const { return size() == 0; }

  void add_unit(Element d);
  std::vector<Element> units() const;
  std::vector<Element> elements() const;
  SymmetricMultiset conjugated(Element g) const;
  SymmetricMultiset mapped(const GroupHom& phi) const;

  bool operator==(const SymmetricMultiset& other) const {
    return group_ == other.group_ && mult_ == other.mult_;
  }

 private:
  FiniteGroup group_;
  std::vector<int> mult_;
};

inline Element unit_representative(const FiniteGroup& g, Element d) { return std::min(d, g.inv(d)); }

}  // namespace harmcov

#endif  // HARMCOV_GROUP_HPP_
