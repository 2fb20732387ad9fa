#include "braidhom/perm_group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "braidhom/error.hpp"

namespace braidhom {

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint16_t>(x);
  return out;
}

Perm identity_perm(std::size_t m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm parse_cycles(std::string_view text, std::size_t m) {
  Perm p = identity_perm(m);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InvalidInput("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw InvalidInput("bad point in permutation '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      if (v < 1 || v > m) {
        throw InvalidInput("point " + std::to_string(v) + " out of range 1.." + std::to_string(m));
      }
      cycle.push_back(v - 1);
    }
    std::set<std::size_t> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) throw InvalidInput("repeated point in cycle");
    // Cycles are composed left to right under the right action.
    Perm c = identity_perm(m);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      c[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    }
    p = compose(p, c);
    skip_ws();
  }
  return p;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out += ',';
      out += std::to_string(y + 1);
      first = false;
      y = p[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> lens;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::size_t perm_order(const Perm& p) {
  std::size_t l = 1;
  for (int len : cycle_type(p)) l = std::lcm(l, static_cast<std::size_t>(len));
  return l;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name,
                     std::size_t cap)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw InvalidInput("group degree must be positive");
  for (const auto& g : generators_) {
    if (g.size() != degree) throw InvalidInput("generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw InvalidInput("generator is not a permutation");
      hit[x] = 1;
    }
  }
  std::set<Perm> found{identity_perm(degree)};
  std::deque<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Perm next = compose(cur, g);
      if (found.insert(next).second) {
        if (found.size() > cap) {
          throw CapExceeded("group order exceeds enumeration cap " + std::to_string(cap));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  elements_.assign(found.begin(), found.end());
  for (Id i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
  inverse_.resize(elements_.size());
  for (Id i = 0; i < elements_.size(); ++i) inverse_[i] = index_.at(invert(elements_[i]));
  for (const auto& g : generators_) generator_ids_.push_back(index_.at(g));
  std::size_t n = elements_.size();
  if (n <= 1024) {
    table_.resize(n * n);
    for (Id a = 0; a < n; ++a) {
      for (Id b = 0; b < n; ++b) table_[a * n + b] = index_.at(compose(elements_[a], elements_[b]));
    }
  }
}

PermGroup::Id PermGroup::id_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InvalidInput("permutation " + cycle_string(p) + " is not in the group");
  return it->second;
}

bool PermGroup::contains(const Perm& p) const { return index_.count(p) != 0; }

PermGroup::Id PermGroup::mul(Id a, Id b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(compose(elements_.at(a), elements_.at(b)));
}

PermGroup::Id PermGroup::power(Id a, long long e) const {
  Id base = e < 0 ? inv(a) : a;
  unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
  Id result = identity();
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<PermGroup::Id> PermGroup::conjugacy_class(Id a) const {
  std::set<Id> cls{a};
  std::deque<Id> queue{a};
  while (!queue.empty()) {
    Id x = queue.front();
    queue.pop_front();
    for (Id g : generator_ids_) {
      Id y = conj(x, g);
      if (cls.insert(y).second) queue.push_back(y);
    }
  }
  return {cls.begin(), cls.end()};
}

std::vector<std::vector<PermGroup::Id>> PermGroup::conjugacy_classes() const {
  std::vector<std::vector<Id>> out;
  std::vector<char> seen(order(), 0);
  for (Id a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    auto cls = conjugacy_class(a);
    for (Id x : cls) seen[x] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<PermGroup::Id> PermGroup::generated_subgroup(const std::vector<Id>& gens) const {
  std::set<Id> found{identity()};
  std::deque<Id> queue{identity()};
  while (!queue.empty()) {
    Id x = queue.front();
    queue.pop_front();
    for (Id g : gens) {
      Id y = mul(x, g);
      if (found.insert(y).second) queue.push_back(y);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<PermGroup::Id> PermGroup::center() const {
  std::vector<Id> out;
  for (Id a = 0; a < order(); ++a) {
    bool central = std::all_of(generator_ids_.begin(), generator_ids_.end(),
                               [&](Id g) { return mul(a, g) == mul(g, a); });
    if (central) out.push_back(a);
  }
  return out;
}

namespace {

std::string cycle_text(std::size_t from, std::size_t to) {
  std::string s = "(";
  for (std::size_t k = from; k <= to; ++k) {
    if (k > from) s += ',';
    s += std::to_string(k);
  }
  return s + ")";
}

bool parse_uint(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::shared_ptr<const PermGroup> builtin_group(std::string_view name) {
  std::string n(name);
  std::size_t k = 0;
  std::vector<std::string> gens;
  std::size_t degree = 0;
  if (n.size() >= 2 && (n[0] == 'S' || n[0] == 's') && parse_uint(n.substr(1), k) && k >= 2 &&
      k <= 6) {
    degree = k;
    gens = {"(1,2)", cycle_text(1, k)};
  } else if (n.size() >= 2 && (n[0] == 'A' || n[0] == 'a') && parse_uint(n.substr(1), k) &&
             k >= 3 && k <= 5) {
    degree = k;
    for (std::size_t j = 3; j <= k; ++j) gens.push_back("(1,2," + std::to_string(j) + ")");
  } else if ((n.starts_with("Z/") && parse_uint(n.substr(2), k)) ||
             ((n.starts_with("Z") || n.starts_with("C")) && parse_uint(n.substr(1), k))) {
    if (k < 2 || k > 12) throw InvalidInput("cyclic builtins are Z/2 .. Z/12");
    degree = k;
    gens = {cycle_text(1, k)};
    n = "Z/" + std::to_string(k);
  } else if (n == "D4" || n == "d4") {
    degree = 4;
    gens = {"(1,2,3,4)", "(1,3)"};
    n = "D4";
  } else {
    throw InvalidInput("unknown group '" + n +
                       "' (builtins: S2..S6, A3..A5, Z/2..Z/12, D4, or a group file)");
  }
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
  if (n[0] == 's') n[0] = 'S';
  if (n[0] == 'a') n[0] = 'A';
  return std::make_shared<const PermGroup>(degree, std::move(perms), n);
}

std::shared_ptr<const PermGroup> parse_group_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t degree = 0;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    line = line.substr(b);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (degree == 0) {
      std::istringstream h(line);
      std::string kw;
      if (!(h >> kw >> degree) || kw != "degree" || degree == 0) {
        throw InvalidInput("group file must start with 'degree m'");
      }
      continue;
    }
    gens.push_back(parse_cycles(line, degree));
  }
  if (degree == 0) throw InvalidInput("group file has no 'degree m' header");
  return std::make_shared<const PermGroup>(degree, std::move(gens), std::move(name));
}

std::shared_ptr<const PermGroup> read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str(), path);
}

ConjClassSet::ConjClassSet(std::shared_ptr<const PermGroup> group,
                           std::vector<PermGroup::Id> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw InvalidInput("class set is empty");
  std::set<PermGroup::Id> members(elements_.begin(), elements_.end());
  for (auto e : elements_) {
    for (auto g : group_->generator_ids()) {
      if (!members.count(group_->conj(e, g))) {
        throw InvalidInput("element set is not closed under conjugation: " +
                           cycle_string(group_->element(e)) + " conjugated by " +
                           cycle_string(group_->element(g)));
      }
    }
  }
  std::set<PermGroup::Id> placed;
  for (auto e : elements_) {
    if (placed.count(e)) continue;
    auto cls = group_->conjugacy_class(e);
    for (auto x : cls) {
      placed.insert(x);
      class_index_[x] = classes_.size();
    }
    classes_.push_back(std::move(cls));
  }
  for (auto e : elements_) {
    std::size_t ord = group_->element_order(e);
    for (std::size_t a = 1; a < ord; ++a) {
      if (std::gcd(a, ord) == 1 && !members.count(group_->power(e, static_cast<long long>(a)))) {
        rational_ = false;
      }
    }
  }
}

std::size_t ConjClassSet::class_of(PermGroup::Id e) const {
  auto it = class_index_.find(e);
  if (it == class_index_.end()) throw InvalidInput("element is not in the class set");
  return it->second;
}

bool ConjClassSet::generates_group() const {
  return group_->generated_subgroup(elements_).size() == group_->order();
}

ConjClassSet select_classes(std::shared_ptr<const PermGroup> group, std::string_view selector) {
  const PermGroup& G = *group;
  std::set<PermGroup::Id> chosen;
  std::string sel(selector);
  std::size_t start = 0;
  while (start <= sel.size()) {
    std::size_t plus = sel.find('+', start);
    std::string part = sel.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    start = plus == std::string::npos ? sel.size() + 1 : plus + 1;
    auto nontrivial_type = [&](PermGroup::Id a) {
      std::vector<int> t;
      for (int l : cycle_type(G.element(a))) {
        if (l > 1) t.push_back(l);
      }
      return t;
    };
    std::size_t before = chosen.size();
    if (part == "all" || part == "nontrivial") {
      for (PermGroup::Id a = 1; a < G.order(); ++a) chosen.insert(a);
    } else if (part == "transpositions") {
      for (PermGroup::Id a = 0; a < G.order(); ++a) {
        if (nontrivial_type(a) == std::vector<int>{2}) chosen.insert(a);
      }
    } else if (part.ends_with("-cycles")) {
      std::size_t k = 0;
      if (!parse_uint(part.substr(0, part.size() - 7), k) || k < 2) {
        throw InvalidInput("bad class selector '" + part + "'");
      }
      for (PermGroup::Id a = 0; a < G.order(); ++a) {
        if (nontrivial_type(a) == std::vector<int>{static_cast<int>(k)}) chosen.insert(a);
      }
    } else if (part.starts_with("type:")) {
      std::vector<int> want;
      std::stringstream ss(part.substr(5));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        std::size_t v = 0;
        if (!parse_uint(tok, v) || v < 2) throw InvalidInput("bad cycle type in '" + part + "'");
        want.push_back(static_cast<int>(v));
      }
      std::sort(want.rbegin(), want.rend());
      for (PermGroup::Id a = 0; a < G.order(); ++a) {
        if (nontrivial_type(a) == want) chosen.insert(a);
      }
    } else if (part.starts_with("class:")) {
      Perm p = parse_cycles(part.substr(6), G.degree());
      for (auto x : G.conjugacy_class(G.id_of(p))) chosen.insert(x);
    } else {
      throw InvalidInput("unknown class selector '" + part +
                         "' (use all, transpositions, k-cycles, type:..., class:...)");
    }
    if (chosen.size() == before && part != "all" && part != "nontrivial") {
      throw InvalidInput("class selector '" + part + "' matches no element of " + G.name());
    }
  }
  chosen.erase(G.identity());
  if (chosen.empty()) throw InvalidInput("class selector selects no nontrivial element");
  return ConjClassSet(std::move(group), {chosen.begin(), chosen.end()});
}

}  // namespace braidhom
