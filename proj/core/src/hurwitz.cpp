#include "braidhom/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "braidhom/error.hpp"
#include "braidhom/linalg.hpp"

namespace braidhom {

namespace {

void check_cap(std::size_t r, std::size_t n, std::size_t cap) {
  Word total = checked_power(r, n);
  if (total > cap) {
    throw CapExceeded("Hurwitz state space (#c)^n = " + std::to_string(total) +
                      " exceeds the cap " + std::to_string(cap) +
                      "; lower n or raise the cap");
  }
}

}  // namespace

Word hurwitz_move(const Rack& R, std::size_t n, int gen, Word w) {
  std::size_t i = static_cast<std::size_t>(gen > 0 ? gen : -gen);
  if (gen == 0 || i >= n) throw InvalidInput("braid generator out of range");
  WordCodec codec(R.size(), n);
  std::size_t a = codec.letter(w, i - 1), b = codec.letter(w, i);
  std::size_t x, y;
  if (gen > 0) {
    x = b;
    y = R.act(a, b);
  } else {
    // inverse of (a, b) -> (b, a^b)
    x = R.act_inv(b, a);
    y = a;
  }
  Word base = w - a * codec.weight(i - 1) - b * codec.weight(i);
  return base + x * codec.weight(i - 1) + y * codec.weight(i);
}

Subgroup monodromy_group(const PermGroup& G, const std::vector<PermGroup::Id>& letters) {
  return G.generated_subgroup(letters);
}

OrbitTable hurwitz_orbits(std::shared_ptr<const ConjClassSet> c, std::size_t n, std::size_t cap) {
  std::size_t r = c->size();
  check_cap(r, n, cap);
  Rack R = conjugation_rack(c);
  const PermGroup& G = c->group();
  const auto& elems = c->elements();
  WordCodec codec(r, n);
  Word total = codec.count();

  OrbitTable T;
  T.n_ = n;
  T.c_ = c;
  const std::uint32_t unseen = UINT32_MAX;
  T.orbit_of_.assign(total, unseen);
  std::map<std::vector<char>, std::size_t> monodromy_by_letters;
  std::map<Subgroup, std::size_t> subgroup_index;

  std::vector<Word> queue;
  for (Word start = 0; start < total; ++start) {
    if (T.orbit_of_[start] != unseen) continue;
    auto idx = static_cast<std::uint32_t>(T.orbits_.size());
    HurwitzOrbit orb;
    orb.representative = start;
    auto letters = codec.letters(start);
    orb.multigrade.assign(c->classes().size(), 0);
    std::vector<char> present(r, 0);
    orb.product = G.identity();
    for (auto a : letters) {
      ++orb.multigrade[c->class_of(elems[a])];
      present[a] = 1;
      orb.product = G.mul(orb.product, elems[a]);
    }
    auto mit = monodromy_by_letters.find(present);
    if (mit == monodromy_by_letters.end()) {
      std::vector<PermGroup::Id> gens;
      for (std::size_t a = 0; a < r; ++a) {
        if (present[a]) gens.push_back(elems[a]);
      }
      Subgroup H = monodromy_group(G, gens);
      auto sit = subgroup_index.find(H);
      if (sit == subgroup_index.end()) {
        sit = subgroup_index.emplace(H, T.subgroups_.size()).first;
        T.subgroups_.push_back(H);
      }
      mit = monodromy_by_letters.emplace(present, sit->second).first;
    }
    orb.monodromy = mit->second;

    queue.assign(1, start);
    T.orbit_of_[start] = idx;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Word w = queue[k];
      for (int i = 1; i < static_cast<int>(n); ++i) {
        for (int gen : {i, -i}) {
          Word w2 = hurwitz_move(R, n, gen, w);
          if (T.orbit_of_[w2] == unseen) {
            T.orbit_of_[w2] = idx;
            queue.push_back(w2);
          }
        }
      }
    }
    // The product and the multigrade are braid invariants.
    for (Word w : queue) {
      PermGroup::Id prod = G.identity();
      std::vector<int> grade(c->classes().size(), 0);
      for (auto a : codec.letters(w)) {
        prod = G.mul(prod, elems[a]);
        ++grade[c->class_of(elems[a])];
      }
      if (prod != orb.product || grade != orb.multigrade) {
        throw Error("Hurwitz invariant violated in orbit of word " + std::to_string(start));
      }
    }
    orb.size = queue.size();
    T.orbits_.push_back(std::move(orb));
  }
  return T;
}

std::optional<std::size_t> SubgroupLattice::index_of(const Subgroup& H) const {
  auto it = std::find(subgroups_.begin(), subgroups_.end(), H);
  if (it == subgroups_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - subgroups_.begin());
}

bool SubgroupLattice::contains(std::size_t b, std::size_t a) const {
  const auto& B = subgroups_.at(b);
  const auto& A = subgroups_.at(a);
  return std::includes(B.begin(), B.end(), A.begin(), A.end());
}

SubgroupLattice subgroup_lattice(const ConjClassSet& c) {
  const PermGroup& G = c.group();
  std::set<Subgroup> found;
  std::vector<Subgroup> frontier;
  for (auto g : c.elements()) {
    Subgroup H = G.generated_subgroup({g});
    if (found.insert(H).second) frontier.push_back(H);
  }
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& H : frontier) {
      for (auto g : c.elements()) {
        if (std::binary_search(H.begin(), H.end(), g)) continue;
        std::vector<PermGroup::Id> gens;
        for (auto x : c.elements()) {
          if (std::binary_search(H.begin(), H.end(), x)) gens.push_back(x);
        }
        gens.push_back(g);
        Subgroup K = G.generated_subgroup(gens);
        if (found.insert(K).second) next.push_back(K);
      }
    }
    frontier = std::move(next);
  }
  SubgroupLattice L;
  L.subgroups_.assign(found.begin(), found.end());
  std::stable_sort(L.subgroups_.begin(), L.subgroups_.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return L;
}

namespace {

// Degrees 0..qmax of the orbit tables, and a module keeping the orbits
// accepted by keep(orbit table, orbit).
template <class Keep>
GradedOrbitModule build_module(std::shared_ptr<const ConjClassSet> c, std::size_t qmax,
                               const Field& F, std::size_t cap, Keep keep) {
  std::size_t r = c->size();
  std::vector<OrbitTable> tables;
  for (std::size_t q = 0; q <= qmax; ++q) tables.push_back(hurwitz_orbits(c, q, cap));
  GradedOrbitModule M;
  M.c = c;
  M.qmax = qmax;
  std::vector<std::vector<std::size_t>> position(qmax + 1);
  for (std::size_t q = 0; q <= qmax; ++q) {
    position[q].assign(tables[q].size(), SIZE_MAX);
    M.basis.emplace_back();
    M.multigrade.emplace_back();
    for (std::size_t o = 0; o < tables[q].size(); ++o) {
      if (!keep(tables[q], o)) continue;
      position[q][o] = M.basis[q].size();
      M.basis[q].push_back(o);
      M.multigrade[q].push_back(tables[q].orbits()[o].multigrade);
    }
  }
  M.left.assign(r, {});
  M.right.assign(r, {});
  for (std::size_t v = 0; v < r; ++v) {
    for (std::size_t q = 0; q < qmax; ++q) {
      SparseMatrix L(M.dim(q + 1), M.dim(q), F), Rm(M.dim(q + 1), M.dim(q), F);
      for (std::size_t k = 0; k < M.dim(q); ++k) {
        Word w = tables[q].orbits()[M.basis[q][k]].representative;
        std::size_t lo = tables[q + 1].orbit_of(concat_words(v, w, r, q));
        std::size_t ro = tables[q + 1].orbit_of(concat_words(w, v, r, 1));
        if (position[q + 1][lo] != SIZE_MAX) L.set_column(k, {{static_cast<std::uint32_t>(position[q + 1][lo]), F.from_int(1)}});
        if (position[q + 1][ro] != SIZE_MAX) Rm.set_column(k, {{static_cast<std::uint32_t>(position[q + 1][ro]), F.from_int(1)}});
      }
      M.left[v].push_back(std::move(L));
      M.right[v].push_back(std::move(Rm));
    }
  }
  return M;
}

}  // namespace

GradedOrbitModule ring_module(std::shared_ptr<const ConjClassSet> c, std::size_t qmax,
                              const Field& F, std::size_t cap) {
  return build_module(c, qmax, F, cap, [](const OrbitTable&, std::size_t) { return true; });
}

GradedOrbitModule filtered_module(std::shared_ptr<const ConjClassSet> c, const Subgroup& H,
                                  std::size_t qmax, const Field& F, std::size_t cap) {
  bool trivial = H.size() == 1;
  if (!trivial && !subgroup_lattice(*c).index_of(H)) {
    throw InvalidInput("subgroup is not generated by its intersection with c");
  }
  return build_module(c, qmax, F, cap, [&](const OrbitTable& T, std::size_t o) {
    return T.subgroups()[T.orbits()[o].monodromy] == H;
  });
}

std::shared_ptr<const ConjClassSet> restrict_classes(const ConjClassSet& c, const Subgroup& H) {
  const PermGroup& G = c.group();
  std::vector<Perm> gens;
  for (auto e : c.elements()) {
    if (std::binary_search(H.begin(), H.end(), e)) gens.push_back(G.element(e));
  }
  if (gens.empty()) throw InvalidInput("c does not meet the subgroup");
  auto sub = std::make_shared<const PermGroup>(G.degree(), gens, G.name() + "|H");
  std::vector<PermGroup::Id> ids;
  for (const auto& g : gens) ids.push_back(sub->id_of(g));
  return std::make_shared<const ConjClassSet>(sub, ids);
}

namespace {

struct NielsenData {
  std::vector<std::vector<std::size_t>> images;  // images[i-1][class]
  std::size_t classes = 0;
};

NielsenData nielsen_data(std::shared_ptr<const ConjClassSet> c, std::size_t n, std::size_t cap) {
  std::size_t r = c->size();
  check_cap(r, n, cap);
  const PermGroup& G = c->group();
  const auto& elems = c->elements();
  Rack R = conjugation_rack(c);
  WordCodec codec(r, n);
  std::vector<std::vector<std::size_t>> conj_letter(G.order(), std::vector<std::size_t>(r));
  for (PermGroup::Id g = 0; g < G.order(); ++g) {
    for (std::size_t a = 0; a < r; ++a) conj_letter[g][a] = *R.label_of(G.conj(elems[a], g));
  }
  auto canonical = [&](Word w) {
    auto letters = codec.letters(w);
    Word best = w;
    std::vector<std::size_t> moved(n);
    for (PermGroup::Id g = 0; g < G.order(); ++g) {
      for (std::size_t k = 0; k < n; ++k) moved[k] = conj_letter[g][letters[k]];
      best = std::min(best, codec.encode(moved));
    }
    return best;
  };
  std::map<Word, std::size_t> index;
  std::vector<Word> reps;
  for (Word w = 0; w < codec.count(); ++w) {
    std::vector<PermGroup::Id> gens;
    for (auto a : codec.letters(w)) gens.push_back(elems[a]);
    if (G.generated_subgroup(gens).size() != G.order()) continue;
    Word cw = canonical(w);
    if (cw == w) {
      index[w] = reps.size();
      reps.push_back(w);
    }
  }
  NielsenData D;
  D.classes = reps.size();
  for (int i = 1; i < static_cast<int>(n); ++i) {
    std::vector<std::size_t> img(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
      img[k] = index.at(canonical(hurwitz_move(R, n, i, reps[k])));
    }
    D.images.push_back(std::move(img));
  }
  return D;
}

}  // namespace

PermutationModule nielsen_module(std::shared_ptr<const ConjClassSet> c, std::size_t n,
                                 const Field& F, std::size_t cap) {
  NielsenData D = nielsen_data(c, n, cap);
  return PermutationModule(n, D.classes, std::move(D.images), F);
}

NielsenResult nielsen_components(std::shared_ptr<const ConjClassSet> c, std::size_t n,
                                 const Field& F, std::size_t cap) {
  if (n == 0) throw InvalidInput("Nielsen classes need n >= 1");
  NielsenData D = nielsen_data(c, n, cap);
  NielsenResult out;
  out.classes = D.classes;
  // Components: orbits of the generator tables.
  std::vector<std::size_t> parent(D.classes);
  for (std::size_t k = 0; k < D.classes; ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& img : D.images) {
    for (std::size_t k = 0; k < img.size(); ++k) parent[find(k)] = find(img[k]);
  }
  for (std::size_t k = 0; k < D.classes; ++k) out.components += find(k) == k;
  if (D.classes == 0) {
    out.betti.assign(n + 1, 0);
    return out;
  }
  PermutationModule L(n, D.classes, std::move(D.images), F);
  out.betti = braid_homology(L);
  return out;
}

StabilizationReport stabilization_thresholds(std::shared_ptr<const ConjClassSet> c,
                                             std::size_t class_index, std::size_t nmax,
                                             const Field& F, std::size_t cap) {
  if (class_index >= c->classes().size()) throw InvalidInput("class index out of range");
  std::size_t r = c->size();
  StabilizationReport rep;
  rep.class_index = class_index;
  rep.g = c->classes()[class_index].front();
  rep.nmax = nmax;
  std::size_t g = *conjugation_rack(c).label_of(rep.g);
  const PermGroup& G = c->group();
  std::vector<OrbitTable> tables;
  for (std::size_t q = 0; q <= nmax; ++q) tables.push_back(hurwitz_orbits(c, q, cap));
  auto full = [&](const OrbitTable& T, std::size_t o) {
    return T.subgroups()[T.orbits()[o].monodromy].size() == G.order();
  };
  for (std::size_t q = 0; q < nmax; ++q) {
    const OrbitTable& S = tables[q];
    const OrbitTable& T = tables[q + 1];
    // Group source and target orbits by multigrade.
    std::map<std::vector<int>, std::vector<std::size_t>> src, dst;
    for (std::size_t o = 0; o < S.size(); ++o) {
      if (full(S, o)) src[S.orbits()[o].multigrade].push_back(o);
    }
    for (std::size_t o = 0; o < T.size(); ++o) {
      if (full(T, o)) dst[T.orbits()[o].multigrade].push_back(o);
    }
    // Every multigrade of total q is a potential source, even if empty.
    std::vector<std::vector<int>> grades;
    std::vector<int> cur(c->classes().size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == cur.size()) {
        cur[i] = left;
        grades.push_back(cur);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        cur[i] = k;
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, static_cast<int>(q));
    for (const auto& grade : grades) {
      std::vector<int> target = grade;
      ++target[class_index];
      const auto& s = src[grade];
      const auto& t = dst[target];
      std::map<std::size_t, std::size_t> tpos;
      for (std::size_t k = 0; k < t.size(); ++k) tpos[t[k]] = k;
      SparseMatrix M(t.size(), s.size(), F);
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::size_t image = T.orbit_of(concat_words(S.orbits()[s[k]].representative, g, r, 1));
        M.set_column(k, {{static_cast<std::uint32_t>(tpos.at(image)), F.from_int(1)}});
      }
      StabilizationReport::Step step;
      step.source = grade;
      step.dim_source = s.size();
      step.dim_target = t.size();
      step.rank = rank(M, F);
      rep.steps.push_back(std::move(step));
    }
    // Independence of the representative.
    for (Word w = 0; w < checked_power(r, q); ++w) {
      std::size_t o = S.orbit_of(w);
      std::size_t a = T.orbit_of(concat_words(w, g, r, 1));
      std::size_t b = T.orbit_of(concat_words(S.orbits()[o].representative, g, r, 1));
      if (a != b) rep.well_defined = false;
    }
  }
  // Least B such that every step with q_i > B is bijective.
  int top = -1;
  for (const auto& s : rep.steps) {
    if (!s.bijective()) top = std::max(top, s.source[class_index]);
  }
  int max_qi = -1;
  for (const auto& s : rep.steps) max_qi = std::max(max_qi, s.source[class_index]);
  if (top < max_qi) rep.threshold = std::max(top, 0);
  return rep;
}

}  // namespace braidhom
