#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidhom/braided_space.hpp"
#include "braidhom/fnf.hpp"
#include "braidhom/perm_group.hpp"
#include "braidhom/rack.hpp"

namespace braidhom {

using Subgroup = std::vector<PermGroup::Id>;  // sorted element ids

// Letters of a Hurwitz word are indices into c.elements(); words of length n
// are encoded base #c as in WordCodec.
struct HurwitzOrbit {
  Word representative = 0;  // lexicographic minimum
  std::size_t size = 0;
  std::size_t monodromy = 0;        // index into OrbitTable::subgroups()
  std::vector<int> multigrade;      // letters per conjugacy class of c
  PermGroup::Id product = 0;        // w_1 w_2 ... w_n
};

class OrbitTable {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  std::size_t n() const { return n_; }
  const ConjClassSet& classes() const { return *c_; }
  std::shared_ptr<const ConjClassSet> classes_ptr() const { return c_; }
  const std::vector<HurwitzOrbit>& orbits() const { return orbits_; }
  std::size_t orbit_of(Word w) const { return orbit_of_.at(w); }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t size() const { return orbits_.size(); }

 private:
  friend OrbitTable hurwitz_orbits(std::shared_ptr<const ConjClassSet>, std::size_t, std::size_t);
  std::size_t n_ = 0;
  std::shared_ptr<const ConjClassSet> c_;
  std::vector<HurwitzOrbit> orbits_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<Subgroup> subgroups_;
};

// sigma_i(..., a, b, ...) = (..., b, a^b, ...). Throws CapExceeded when
// (#c)^n exceeds cap.
OrbitTable hurwitz_orbits(std::shared_ptr<const ConjClassSet> c, std::size_t n,
                          std::size_t cap = OrbitTable::kDefaultCap);

// The Hurwitz action of sigma_i (1-based, negative for the inverse) on a word.
Word hurwitz_move(const Rack& R, std::size_t n, int gen, Word w);

// Subgroup generated by the letters of a word given as group elements.
Subgroup monodromy_group(const PermGroup& G, const std::vector<PermGroup::Id>& letters);

// Nontrivial subgroups generated by subsets of c, ordered by size and then
// by elements.
class SubgroupLattice {
 public:
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t size() const { return subgroups_.size(); }
  std::optional<std::size_t> index_of(const Subgroup& H) const;
  // True when subgroup a is contained in subgroup b.
  bool contains(std::size_t b, std::size_t a) const;

 private:
  friend SubgroupLattice subgroup_lattice(const ConjClassSet&);
  std::vector<Subgroup> subgroups_;
};

SubgroupLattice subgroup_lattice(const ConjClassSet& c);

// Graded module data over the ring of components. Basis elements of degree q
// are Hurwitz orbits; each letter v of c acts by left (prepend) and right
// (append) multiplication, as 0/1 matrices from degree q to q + 1.
struct GradedOrbitModule {
  std::shared_ptr<const ConjClassSet> c;
  std::size_t qmax = 0;
  std::vector<std::vector<std::size_t>> basis;  // orbit indices per degree
  std::vector<std::vector<std::vector<int>>> multigrade;
  // left[v][q], right[v][q]: degree q -> q + 1, for q < qmax
  std::vector<std::vector<SparseMatrix>> left, right;
  std::size_t dim(std::size_t q) const { return basis.at(q).size(); }
};

// The ring R itself as a module over itself, degrees 0..qmax.
GradedOrbitModule ring_module(std::shared_ptr<const ConjClassSet> c, std::size_t qmax,
                              const Field& F, std::size_t cap = OrbitTable::kDefaultCap);

// R^{(H)}: orbits with monodromy exactly H. A letter acts by zero when the
// product leaves the stratum (its monodromy grows). Throws InvalidInput if H
// is not in the lattice (the trivial group is allowed in degree 0 only).
GradedOrbitModule filtered_module(std::shared_ptr<const ConjClassSet> c, const Subgroup& H,
                                  std::size_t qmax, const Field& F,
                                  std::size_t cap = OrbitTable::kDefaultCap);

// c ∩ H as a class set of H (a group in its own right).
std::shared_ptr<const ConjClassSet> restrict_classes(const ConjClassSet& c, const Subgroup& H);

struct NielsenResult {
  std::size_t classes = 0;     // surjective Nielsen classes
  std::size_t components = 0;  // braid orbits on them
  std::vector<std::size_t> betti;  // H_j(B_n; k[Ni]) for j = 0..n
};

// Tuples in c^n generating G, modulo simultaneous conjugation, with the
// braid action. Betti numbers come from the cellular complex with the
// permutation module as coefficients.
NielsenResult nielsen_components(std::shared_ptr<const ConjClassSet> c, std::size_t n,
                                 const Field& F, std::size_t cap = OrbitTable::kDefaultCap);

// The permutation module itself (n >= 1 strands).
PermutationModule nielsen_module(std::shared_ptr<const ConjClassSet> c, std::size_t n,
                                 const Field& F, std::size_t cap = OrbitTable::kDefaultCap);

struct StabilizationReport {
  std::size_t class_index = 0;
  PermGroup::Id g = 0;
  std::size_t nmax = 0;
  // Per multigrade q in the window: dims of source and target and the rank.
  struct Step {
    std::vector<int> source;
    std::size_t dim_source = 0, dim_target = 0, rank = 0;
    bool bijective() const { return dim_source == dim_target && rank == dim_source; }
  };
  std::vector<Step> steps;
  // Right multiplication is bijective for every step with q_i > threshold.
  std::optional<int> threshold;
  bool well_defined = true;  // independent of the orbit representative
};

// Right multiplication by g (the first element of class i) on R^{(G)}
// multigraded pieces of total degree < nmax.
StabilizationReport stabilization_thresholds(std::shared_ptr<const ConjClassSet> c,
                                             std::size_t class_index, std::size_t nmax,
                                             const Field& F,
                                             std::size_t cap = OrbitTable::kDefaultCap);

}  // namespace braidhom
