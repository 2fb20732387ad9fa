#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace braidhom {

// One-line notation, 0-based images: p[x] is the image of x.
using Perm = std::vector<std::uint16_t>;

// Right action, as in GAP: x^(ab) = (x^a)^b, so (a*b)[x] = b[a[x]].
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);
Perm identity_perm(std::size_t m);
// Parses "(1,2)(3,4,5)", "(1 2 3)" or "()" on points 1..m.
Perm parse_cycles(std::string_view text, std::size_t m);
std::string cycle_string(const Perm& p);
// Cycle lengths including fixed points, sorted descending.
std::vector<int> cycle_type(const Perm& p);
std::size_t perm_order(const Perm& p);

// Finite permutation group with explicitly enumerated elements. Element ids
// follow the lexicographic order of one-line images, so the identity is 0.
class PermGroup {
 public:
  using Id = std::uint32_t;
  static constexpr std::size_t kDefaultCap = 10000;

  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name = "",
            std::size_t cap = kDefaultCap);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Id>& generator_ids() const { return generator_ids_; }
  const Perm& element(Id i) const { return elements_.at(i); }
  Id id_of(const Perm& p) const;  // throws if p is not in the group
  bool contains(const Perm& p) const;

  Id mul(Id a, Id b) const;
  Id inv(Id a) const { return inverse_.at(a); }
  // a^b = b^-1 a b.
  Id conj(Id a, Id b) const { return mul(mul(inv(b), a), b); }
  Id identity() const { return 0; }
  std::size_t element_order(Id a) const { return perm_order(elements_.at(a)); }
  Id power(Id a, long long e) const;

  // Conjugacy class of a, sorted ids.
  std::vector<Id> conjugacy_class(Id a) const;
  // All conjugacy classes, ordered by smallest member.
  std::vector<std::vector<Id>> conjugacy_classes() const;
  // Subgroup generated by the given elements, as sorted ids.
  std::vector<Id> generated_subgroup(const std::vector<Id>& gens) const;
  std::vector<Id> center() const;

 private:
  std::string name_;
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Id> generator_ids_;
  std::vector<Perm> elements_;
  std::map<Perm, Id> index_;
  std::vector<Id> inverse_;
  std::vector<Id> table_;  // multiplication table when small, else empty
};

// Builtins: S2..S6, A3..A5, Z/n (n <= 12, regular action), D4 (on 4 points).
std::shared_ptr<const PermGroup> builtin_group(std::string_view name);
// File format: first line "degree m", then one generator per line in cycle
// notation. Blank lines and lines starting with '#' are ignored.
std::shared_ptr<const PermGroup> read_group_file(const std::string& path);
std::shared_ptr<const PermGroup> parse_group_text(std::string_view text, std::string name);

// A conjugation-closed subset c of G, split into conjugacy classes.
class ConjClassSet {
 public:
  ConjClassSet(std::shared_ptr<const PermGroup> group, std::vector<PermGroup::Id> elements);

  const PermGroup& group() const { return *group_; }
  std::shared_ptr<const PermGroup> group_ptr() const { return group_; }
  const std::vector<PermGroup::Id>& elements() const { return elements_; }
  const std::vector<std::vector<PermGroup::Id>>& classes() const { return classes_; }
  std::size_t size() const { return elements_.size(); }
  // Index in classes() of element e (which must lie in c).
  std::size_t class_of(PermGroup::Id e) const;
  // Closed under g -> g^a for all a prime to ord(g).
  bool rational() const { return rational_; }
  bool generates_group() const;

 private:
  std::shared_ptr<const PermGroup> group_;
  std::vector<PermGroup::Id> elements_;
  std::vector<std::vector<PermGroup::Id>> classes_;
  std::map<PermGroup::Id, std::size_t> class_index_;
  bool rational_ = true;
};

// Selectors: "all" / "nontrivial", "transpositions", "<k>-cycles",
// "type:<l1>,<l2>,..." (nontrivial cycle lengths), "class:<cycles>", and
// unions joined by '+'. Throws InvalidInput for unknown selectors or empty sets.
ConjClassSet select_classes(std::shared_ptr<const PermGroup> group, std::string_view selector);

}  // namespace braidhom
