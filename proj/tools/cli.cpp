#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "braidhom/braided_space.hpp"
#include "braidhom/error.hpp"
#include "braidhom/fnf.hpp"
#include "braidhom/hurwitz.hpp"
#include "braidhom/koszul.hpp"
#include "braidhom/malle.hpp"
#include "braidhom/nichols.hpp"
#include "braidhom/perm_group.hpp"
#include "braidhom/qsa.hpp"
#include "braidhom/rack.hpp"

namespace braidhom::cli {

using nlohmann::ordered_json;

nlohmann::ordered_json JobSpec::to_json() const {
  ordered_json j;
  j["subcommand"] = subcommand;
  if (rank1) {
    j["rank1"] = true;
    j["sigma"] = sigma;
  } else if (subcommand != "bound") {
    j["group"] = group;
    j["classes"] = classes;
    j["cocycle"] = cocycle;
  }
  if (subcommand != "bound") {
    j["epsilon"] = epsilon;
    j["field"] = field;
  }
  if (subcommand == "koszul") {
    j["pmax"] = pmax;
    j["qmax"] = qmax;
  } else if (subcommand != "bound") {
    j["nmax"] = nmax;
  }
  if (subcommand != "bound") j["cap"] = cap;
  if (!stratum.empty()) j["stratum"] = stratum;
  if (multigraded) j["multigraded"] = true;
  if (nielsen) j["nielsen"] = true;
  if (check) j["check"] = true;
  if (!betti_file.empty()) j["betti"] = betti_file;
  if (!q.empty()) j["q"] = q;
  if (subcommand == "bound") j["d"] = d;
  j["format"] = format;
  return j;
}

namespace {

// Raised for problems the user fixes by changing flags.
struct UsageError : Error {
  using Error::Error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<ordered_json>> rows;
  ordered_json meta = ordered_json::object();
  std::vector<std::string> notes;  // extra '#' lines in CSV
  bool verified = true;
};

std::string cell_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::string render(const JobSpec& job, const Table& t) {
  std::ostringstream out;
  if (job.format == "json") {
    ordered_json doc;
    doc["meta"]["job"] = job.to_json();
    doc["meta"]["columns"] = t.columns;
    for (auto& [k, v] : t.meta.items()) doc["meta"][k] = v;
    doc["rows"] = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json r;
      for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
      doc["rows"].push_back(r);
    }
    out << doc.dump(2) << "\n";
    return out.str();
  }
  out << "# braidhom " << job.subcommand << "\n";
  out << "# job: " << job.to_json().dump() << "\n";
  for (auto& [k, v] : t.meta.items()) out << "# " << k << ": " << v.dump() << "\n";
  for (const auto& note : t.notes) out << "# " << note << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::shared_ptr<const PermGroup> load_group(const std::string& name) {
  if (name.empty()) throw UsageError("--group is required (or --rank1 where supported)");
  try {
    return builtin_group(name);
  } catch (const InvalidInput& e) {
    if (std::filesystem::is_regular_file(name)) return read_group_file(name);
    throw UsageError(e.what());
  }
}

std::shared_ptr<const ConjClassSet> load_classes(const JobSpec& job) {
  auto G = load_group(job.group);
  try {
    return std::make_shared<const ConjClassSet>(select_classes(G, job.classes));
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

mpq_class parse_rational(const std::string& text, const char* flag) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw UsageError(std::string("bad rational for ") + flag + ": " + text);
  v.canonicalize();
  return v;
}

BraidedVectorSpace make_space(const JobSpec& job, const Field& F) {
  if (job.rank1) {
    Scalar s = F.from_rational(parse_rational(job.sigma, "--sigma"));
    if (job.epsilon) s = F.neg(s);
    if (Field::is_zero(s)) throw UsageError("--sigma must be nonzero in " + F.name());
    return rank_one_space(s, F);
  }
  auto c = load_classes(job);
  Rack R = conjugation_rack(c);
  Cocycle x = Cocycle::constant(R.size(), parse_rational(job.cocycle, "--cocycle"));
  try {
    return braided_space(R, x, job.epsilon, F);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::size_t space_rank(const JobSpec& job) {
  return job.rank1 ? 1 : load_classes(job).get()->size();
}

Table run_betti(const JobSpec& job, const Field& F) {
  Table t;
  t.columns = {"n", "j", "rank"};
  if (job.nielsen) {
    auto c = load_classes(job);
    for (std::size_t n = 1; n <= job.nmax; ++n) {
      NielsenResult res = nielsen_components(c, n, F, job.cap);
      t.notes.push_back("n=" + std::to_string(n) + " nielsen_classes=" +
                        std::to_string(res.classes) + " components=" +
                        std::to_string(res.components));
      for (std::size_t j = 0; j < res.betti.size(); ++j) t.rows.push_back({n, j, res.betti[j]});
    }
    return t;
  }
  BraidedVectorSpace V = make_space(job, F);
  for (std::size_t n = 1; n <= job.nmax; ++n) {
    auto h = braid_homology(V, n, F);
    for (std::size_t j = 0; j < h.size(); ++j) t.rows.push_back({n, j, h[j]});
  }
  return t;
}

Table run_ext(const JobSpec& job, const Field& F) {
  Table t;
  t.columns = {"s", "n", "rank"};
  RankTable ext = ext_table(make_space(job, F), job.nmax, F);
  for (int n = 0; n <= static_cast<int>(job.nmax); ++n) {
    for (int s = 0; s <= n; ++s) t.rows.push_back({s, n, ext.get({s, n})});
  }
  return t;
}

Table run_verify(const JobSpec& job, const Field& F, std::ostream& err) {
  Table t;
  t.columns = {"n", "j", "braid", "ext", "match"};
  BraidedVectorSpace V = make_space(job, F);
  bool all = true;
  ordered_json per_n = ordered_json::array();
  for (std::size_t n = 1; n <= job.nmax; ++n) {
    MainCorReport rep = verify_main_cor(V, n, F);
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t b = j < rep.braid.size() ? rep.braid[j] : 0;
      std::size_t e = j < rep.ext.size() ? rep.ext[j] : 0;
      t.rows.push_back({n, j, b, e, b == e});
    }
    per_n.push_back({{"n", n}, {"ok", rep.ok}, {"matrices_match", rep.matrices_match}});
    if (!rep.ok) {
      all = false;
      err << "verify: n=" << n << ": " << rep.message << "\n";
    }
  }
  t.meta["ok"] = all;
  t.meta["checks"] = per_n;
  t.verified = all;
  return t;
}

Table run_nichols(const JobSpec& job, const Field& F) {
  Table t;
  t.columns = {"p", "dim"};
  NicholsDims nd = nichols_dims(make_space(job, F), job.nmax, F);
  std::size_t total = 0;
  for (std::size_t p = 0; p < nd.dims.size(); ++p) {
    t.rows.push_back({p, nd.dims[p]});
    total += nd.dims[p];
  }
  t.meta["total"] = total;
  t.meta["stably_zero"] = nd.stably_zero;
  return t;
}

std::string subgroup_label(const SubgroupLattice& L, const Subgroup& H) {
  if (H.size() == 1) return "1";
  auto i = L.index_of(H);
  return i ? "H" + std::to_string(*i) : "?";
}

void lattice_meta(const ConjClassSet& c, const SubgroupLattice& L, Table& t) {
  ordered_json lat = ordered_json::array();
  for (std::size_t i = 0; i < L.size(); ++i) {
    ordered_json elems = ordered_json::array();
    for (auto e : L.subgroups()[i]) elems.push_back(cycle_string(c.group().element(e)));
    lat.push_back({{"label", "H" + std::to_string(i)}, {"elements", elems}});
  }
  t.meta["lattice"] = lat;
}

Table run_orbits(const JobSpec& job) {
  Table t;
  t.columns = {"n", "orbit_count", "subgroup", "count"};
  auto c = load_classes(job);
  SubgroupLattice L = subgroup_lattice(*c);
  lattice_meta(*c, L, t);
  for (std::size_t n = 0; n <= job.nmax; ++n) {
    OrbitTable T = hurwitz_orbits(c, n, job.cap);
    std::vector<std::size_t> per(T.subgroups().size(), 0);
    for (const auto& o : T.orbits()) ++per[o.monodromy];
    std::vector<std::pair<std::string, std::size_t>> cells;
    for (std::size_t s = 0; s < per.size(); ++s) {
      if (per[s] > 0) cells.emplace_back(subgroup_label(L, T.subgroups()[s]), per[s]);
    }
    std::sort(cells.begin(), cells.end());
    for (auto& [label, count] : cells) t.rows.push_back({n, T.size(), label, count});
  }
  return t;
}

Table run_koszul(const JobSpec& job, const Field& F, std::ostream& err) {
  Table t;
  auto c = load_classes(job);
  std::optional<KoszulComplex> K;
  if (job.stratum.empty()) {
    K.emplace(koszul_complex_ring(c, job.pmax, job.qmax, F));
  } else {
    SubgroupLattice L = subgroup_lattice(*c);
    std::string s = job.stratum;
    if (!s.empty() && s[0] == 'H') s = s.substr(1);
    std::size_t idx = 0;
    try {
      idx = std::stoul(s);
    } catch (const std::exception&) {
      throw UsageError("bad --stratum '" + job.stratum + "' (use a lattice label such as H3)");
    }
    if (idx >= L.size()) {
      throw UsageError("--stratum out of range: the lattice has " + std::to_string(L.size()) +
                       " subgroups");
    }
    GradedOrbitModule M = filtered_module(c, L.subgroups()[idx], job.qmax + 1, F, job.cap);
    K.emplace(koszul_complex(c, M, job.pmax, job.qmax, F));
    t.meta["stratum_order"] = L.subgroups()[idx].size();
  }
  if (job.multigraded) {
    RankTable H = koszul_homology_multigraded(*K);
    t.columns = {"p", "q"};
    for (std::size_t i = 0; i < K->class_count(); ++i) t.columns.push_back("q" + std::to_string(i + 1));
    t.columns.push_back("rank");
    for (const auto& [g, r] : H.entries()) {
      std::vector<ordered_json> row(g.begin(), g.end());
      row.push_back(r);
      t.rows.push_back(std::move(row));
    }
  } else {
    RankTable H = koszul_homology(*K);
    t.columns = {"p", "q", "rank"};
    for (int p = 0; p <= static_cast<int>(job.pmax); ++p) {
      for (int q = 0; q <= static_cast<int>(job.qmax); ++q) t.rows.push_back({p, q, H.get({p, q})});
    }
  }
  if (job.check) {
    KoszulReport rep = verify_koszul_identities(*K);
    t.meta["d_squared"] = rep.d_squared;
    t.meta["anticommute"] = rep.anticommute;
    t.meta["trivial_action"] = rep.trivial_action;
    t.meta["homotopy"] = rep.homotopy;
    t.verified = rep.ok();
    if (!rep.ok()) err << "koszul: identity check failed: " << rep.witness << "\n";
  }
  return t;
}

Table run_malle(const JobSpec& job) {
  Table t;
  t.columns = {"quantity", "value"};
  auto c = load_classes(job);
  MalleConstants mc;
  try {
    mc = malle_constants(*c);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  for (std::size_t i = 0; i < c->classes().size(); ++i) {
    std::string rep = cycle_string(c->group().element(c->classes()[i].front()));
    t.rows.push_back({"ind" + rep, mc.class_index[i]});
  }
  t.rows.push_back({"a", mc.a.get_str()});
  t.rows.push_back({"center_order", mc.center_order});
  if (job.nmax > 0) {
    std::vector<long long> r;
    for (std::size_t n = 0; n <= job.nmax; ++n) {
      r.push_back(static_cast<long long>(hurwitz_orbits(c, n, job.cap).size()));
    }
    auto d = empirical_degree(r, 0);
    std::string window = "[0," + std::to_string(job.nmax) + "]";
    t.rows.push_back({"empirical_d" + window, d ? ordered_json(d->d) : ordered_json("undetermined")});
    t.notes.push_back("empirical_d is a finite-difference estimate on the window, not a proof");
  }
  return t;
}

std::map<std::size_t, std::vector<long long>> read_betti_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open --betti file '" + path + "'");
  std::map<std::size_t, std::vector<long long>> out;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line.rfind("n,j,rank", 0) != 0) throw UsageError("--betti file must have columns n,j,rank");
      header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string a, b, r;
    std::getline(ls, a, ',');
    std::getline(ls, b, ',');
    std::getline(ls, r, ',');
    try {
      std::size_t n = std::stoul(a), j = std::stoul(b);
      long long rank = std::stoll(r);
      auto& v = out[n];
      if (v.size() <= j) v.resize(j + 1, 0);
      v[j] = rank;
    } catch (const std::exception&) {
      throw UsageError("malformed row in --betti file: " + line);
    }
  }
  if (!header) throw UsageError("--betti file has no header row");
  return out;
}

Table run_bound(const JobSpec& job) {
  Table t;
  t.columns = {"n", "A", "B", "bound", "ratio_A", "ratio_B", "ratio"};
  if (job.betti_file.empty()) throw UsageError("bound needs --betti <csv>");
  if (job.q.empty()) throw UsageError("bound needs --q <prime power>");
  std::uint64_t q = 0;
  try {
    q = std::stoull(job.q);
  } catch (const std::exception&) {
    throw UsageError("bad --q '" + job.q + "'");
  }
  for (const auto& [n, betti] : read_betti_csv(job.betti_file)) {
    PointCountBound b;
    try {
      b = point_count_bound(q, n, betti, job.d);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
    t.rows.push_back({n, b.bound.A.get_str(), b.bound.B.get_str(), decimal(b.bound.approx()),
                      b.ratio.A.get_str(), b.ratio.B.get_str(), decimal(b.ratio.approx())});
  }
  t.notes.push_back("bound = A + B*sqrt(q); ratio = bound / (n^d q^n)");
  return t;
}

void resolve_defaults(JobSpec& job) {
  const std::string& s = job.subcommand;
  if (s == "betti" || s == "ext" || s == "verify" || s == "nichols") {
    if (!job.rank1 && job.group.empty()) throw UsageError(s + " needs --group or --rank1");
  } else if (job.rank1) {
    throw UsageError(s + " does not accept --rank1");
  }
  if (s == "betti" && job.nielsen && job.rank1) throw UsageError("--nielsen needs --group");
  if (job.format != "csv" && job.format != "json") throw UsageError("--format must be csv or json");
  if (job.nmax == 0) {
    if (s == "betti" || s == "ext" || s == "nichols") {
      job.nmax = job.nielsen ? 4 : default_ext_nmax(space_rank(job));
    } else if (s == "verify") {
      job.nmax = std::min<std::size_t>(4, default_ext_nmax(space_rank(job)));
    } else if (s == "orbits") {
      job.nmax = 6;
    }
  }
  if (s == "koszul") {
    if (job.pmax == 0) job.pmax = 4;
    if (job.qmax == 0) job.qmax = 6;
  }
  try {
    job.field = Field::parse(job.field).name();
  } catch (const Error& e) {
    throw UsageError(std::string("bad --field: ") + e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobSpec job;
  CLI::App app{"Braid group homology, quantum shuffle Ext, Nichols algebras and Hurwitz orbits",
               "braidhom"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto space_opts = [&](CLI::App* sub, bool allow_rank1) {
    sub->add_option("--group", job.group, "Builtin group (S2..S6, A3..A5, Z/2..Z/12, D4) or file");
    sub->add_option("--classes", job.classes, "Class selector: all, transpositions, 3-cycles, ...")
        ->capture_default_str();
    sub->add_option("--field", job.field, "Q or a prime")->capture_default_str();
    sub->add_option("--cap", job.cap, "State-space cap for orbit enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("-o,--output", job.output, "Output file (default stdout)");
    sub->add_option("--format", job.format, "csv or json")->capture_default_str();
    if (allow_rank1) {
      sub->add_flag("--rank1", job.rank1, "Rank-one space instead of a rack space");
      sub->add_option("--sigma", job.sigma, "Braiding scalar of the rank-one space")
          ->capture_default_str();
      sub->add_option("--cocycle", job.cocycle, "Constant rack cocycle value")->capture_default_str();
      sub->add_flag("--epsilon", job.epsilon, "Negate the braiding");
    }
  };
  auto nmax_opt = [&](CLI::App* sub) {
    sub->add_option("--nmax", job.nmax, "Largest degree")->check(CLI::PositiveNumber);
  };

  auto* betti = app.add_subcommand("betti", "Homology of B_n with coefficients in V^n");
  space_opts(betti, true);
  nmax_opt(betti);
  betti->add_flag("--nielsen", job.nielsen, "Use the Nielsen-class permutation module");
  auto* ext = app.add_subcommand("ext", "Ext of the quantum shuffle algebra");
  space_opts(ext, true);
  nmax_opt(ext);
  auto* verify = app.add_subcommand("verify", "Compare braid homology with Ext of the twisted space");
  space_opts(verify, true);
  nmax_opt(verify);
  auto* nichols = app.add_subcommand("nichols", "Nichols algebra dimensions");
  space_opts(nichols, true);
  nmax_opt(nichols);
  auto* orbits = app.add_subcommand("orbits", "Hurwitz orbit counts by monodromy");
  space_opts(orbits, false);
  nmax_opt(orbits);
  auto* koszul = app.add_subcommand("koszul", "Koszul complex homology over the ring of components");
  space_opts(koszul, false);
  koszul->add_option("--pmax", job.pmax, "Largest Nichols degree")->check(CLI::PositiveNumber);
  koszul->add_option("--qmax", job.qmax, "Largest module degree")->check(CLI::PositiveNumber);
  koszul->add_option("--stratum", job.stratum, "Lattice subgroup label (H0, H1, ...) for R^(H)");
  koszul->add_flag("--multigraded", job.multigraded, "Split ranks by class multigrade");
  koszul->add_flag("--check", job.check, "Verify the complex identities");
  auto* malle = app.add_subcommand("malle", "Malle constants of (G, c)");
  space_opts(malle, false);
  malle->add_option("--nmax", job.nmax, "Window for the empirical degree estimate (0 skips it)");
  auto* bound = app.add_subcommand("bound", "Point-count bounds from a Betti CSV");
  bound->add_option("--betti", job.betti_file, "CSV with columns n,j,rank")->required();
  bound->add_option("--q", job.q, "Prime power")->required();
  bound->add_option("--d", job.d, "Exponent d in n^d q^n")->capture_default_str();
  bound->add_option("-o,--output", job.output, "Output file (default stdout)");
  bound->add_option("--format", job.format, "csv or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  job.subcommand = app.get_subcommands().front()->get_name();

  try {
    resolve_defaults(job);
    Field F = Field::parse(job.field);
    Table t;
    const std::string& s = job.subcommand;
    if (s == "betti") t = run_betti(job, F);
    else if (s == "ext") t = run_ext(job, F);
    else if (s == "verify") t = run_verify(job, F, err);
    else if (s == "nichols") t = run_nichols(job, F);
    else if (s == "orbits") t = run_orbits(job);
    else if (s == "koszul") t = run_koszul(job, F, err);
    else if (s == "malle") t = run_malle(job);
    else t = run_bound(job);

    std::string text = render(job, t);
    if (job.output.empty()) {
      out << text;
    } else {
      std::ofstream f(job.output, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + job.output + "'");
      f << text;
    }
    return t.verified ? 0 : 1;
  } catch (const UsageError& e) {
    err << "braidhom: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "braidhom: " << e.what() << " (raise --cap or lower the degree caps)\n";
    return 2;
  } catch (const FieldMismatch& e) {
    err << "braidhom: " << e.what() << " (choose another --field)\n";
    return 2;
  } catch (const std::exception& e) {
    err << "braidhom: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("braidhom");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace braidhom::cli
