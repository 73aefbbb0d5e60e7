#include "ordalg/cli/dispatch.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordalg/cantor/counterexample.hpp"
#include "ordalg/cantor/trirel.hpp"
#include "ordalg/cli/acceptance.hpp"
#include "ordalg/order/domain_report.hpp"
#include "ordalg/order/io.hpp"
#include "ordalg/ortho/boolsub.hpp"
#include "ordalg/ortho/caf.hpp"
#include "ordalg/ortho/omp.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "ordalg/scatter/fintop.hpp"
#include "ordalg/scatter/ordinal.hpp"
#include "ordalg/staralg/algebra.hpp"
#include "ordalg/staralg/spectral.hpp"
#include "ordalg/version.hpp"

namespace ordalg::cli {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

/// Usage or input problems; mapped to exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json results;
  bool passed = true;
  std::string text;
};

/// Everything the subcommand callbacks share.
struct Context {
  std::string command;
  std::string digest_input;  // args and file contents
  bool json_mode = false;
  std::function<Outcome()> action;

  // option storage, fresh for each dispatch
  struct {
    std::string input, dot, path, a, b, ordinal;
    std::string orientation = "subalgebra", policy = "strict", selector = "fast";
    std::optional<std::size_t> fin_bound;
    bool generic = false;
    std::size_t n = 0, max_size = ortho::kDefaultBoolsubLimit;
    unsigned depth = 3, chain_n = 4;
  } o;

  json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    digest_input += '\0';
    digest_input += bytes;
    try {
      return json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

std::string labels_of(const order::FinPoset& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + p.label(i);
  return s;
}

CLI::App* leaf(CLI::App* parent, Context& ctx, const std::string& name, const std::string& help,
               std::function<Outcome()> body) {
  auto* sub = parent->add_subcommand(name, help);
  sub->add_flag("--json", ctx.json_mode, "Print the run report as JSON");
  const std::string full = parent->get_name() + " " + name;
  sub->callback([&ctx, full, body = std::move(body)] {
    ctx.command = full;
    ctx.action = body;
  });
  return sub;
}

void add_poset(CLI::App& app, Context& ctx) {
  auto* grp = app.add_subcommand("poset", "Finite posets and their domain-theoretic properties");
  grp->require_subcommand(1);
  auto& input = ctx.o.input;
  auto& dot = ctx.o.dot;
  auto& path = ctx.o.path;
  auto& fin_bound = ctx.o.fin_bound;
  auto& generic = ctx.o.generic;

  auto* check = leaf(grp, ctx, "check", "Validate a poset file", [&] {
    const auto p = order::poset_from_json(ctx.read_json(input));
    Outcome o;
    o.results = {{"valid", true},
                 {"elements", p.size()},
                 {"meet_semilattice", p.is_meet_semilattice()},
                 {"bottom", p.bottom() ? json(p.label(*p.bottom())) : json(nullptr)},
                 {"top", p.top() ? json(p.label(*p.top())) : json(nullptr)}};
    o.text = "valid poset with " + std::to_string(p.size()) + " elements";
    return o;
  });
  check->add_option("input,--input,-i", input, "Poset JSON")->required();

  auto* report = leaf(grp, ctx, "report", "Domain report: the seven property flags with witnesses", [&] {
    const auto p = order::poset_from_json(ctx.read_json(input));
    order::ReportOptions opt;
    if (path == "definitional") opt.path = order::WayBelowPath::Definitional;
    if (path == "fast") opt.path = order::WayBelowPath::FiniteFastPath;
    opt.fin_size_bound = fin_bound;
    opt.generic_chain_search = generic;
    const auto r = order::domain_report(p, opt);
    Outcome o;
    o.results = order::report_to_json(p, r);
    std::ostringstream ss;
    for (auto prop : order::kAllProperties) {
      const auto f = r.flag(prop);
      ss << order::to_string(prop) << ": " << (f ? (*f ? "true" : "false") : "n/a") << "\n";
    }
    o.text = ss.str();
    o.text.pop_back();
    return o;
  });
  report->add_option("input,--input,-i", input, "Poset JSON")->required();
  report->add_option("--path", path, "Way-below route")->check(CLI::IsMember({"definitional", "fast"}));
  report->add_option("--fin-bound", fin_bound, "Largest finite subset size enumerated for fin(C)");
  report->add_flag("--generic-chains", generic, "Enumerate chains for order-scatteredness");

  auto* hasse = leaf(grp, ctx, "hasse", "Cover relation, optionally as DOT", [&] {
    const auto p = order::poset_from_json(ctx.read_json(input));
    Outcome o;
    json covers = json::array();
    for (const auto& [a, b] : order::hasse(p)) covers.push_back({p.label(a), p.label(b)});
    o.results = {{"elements", p.size()}, {"covers", covers}};
    if (!dot.empty()) write_file(dot, order::to_dot(p));
    o.text = std::to_string(covers.size()) + " covers";
    return o;
  });
  hasse->add_option("input,--input,-i", input, "Poset JSON")->required();
  hasse->add_option("--dot", dot, "Write the Hasse diagram here");
}

void add_eqrel(CLI::App& app, Context& ctx) {
  auto* grp = app.add_subcommand("eqrel", "Equivalence relations on finite sets");
  grp->require_subcommand(1);
  auto& a = ctx.o.a;
  auto& b = ctx.o.b;
  auto& dot = ctx.o.dot;
  auto& orientation = ctx.o.orientation;
  auto& n = ctx.o.n;

  for (const char* op : {"join", "meet"}) {
    const bool is_join = std::string(op) == "join";
    auto* sub = leaf(grp, ctx, op, is_join ? "Smallest equivalence containing both" : "Intersection",
                     [&, is_join] {
                       const auto r = partitions::eqrel_from_json(ctx.read_json(a));
                       const auto s = partitions::eqrel_from_json(ctx.read_json(b));
                       const auto x = is_join ? partitions::join(r, s) : partitions::meet(r, s);
                       return Outcome{partitions::eqrel_to_json(x), true, x.to_string()};
                     });
    sub->add_option("a", a, "Relation JSON")->required();
    sub->add_option("b", b, "Relation JSON")->required();
  }

  auto* lattice = leaf(grp, ctx, "lattice", "The partition lattice of an n-set", [&] {
    const auto l = partitions::partition_lattice(n, partitions::orientation_from_string(orientation));
    if (!dot.empty()) write_file(dot, order::to_dot(l.poset, "Pi"));
    Outcome o;
    o.results = order::poset_to_json(l.poset);
    o.results["orientation"] = orientation;
    o.text = std::to_string(l.poset.size()) + " partitions: " + labels_of(l.poset);
    return o;
  });
  lattice->add_option("--n", n, "Ground set size")->required();
  lattice->add_option("--orientation", orientation, "refinement or subalgebra")
      ->check(CLI::IsMember({"refinement", "subalgebra"}));
  lattice->add_option("--dot", dot, "Write the Hasse diagram here");
}

void add_cantor(CLI::App& app, Context& ctx) {
  auto* grp = app.add_subcommand("cantor", "Closed equivalence relations on [0,1]");
  grp->require_subcommand(1);
  auto& depth = ctx.o.depth;
  auto& n = ctx.o.chain_n;

  auto* verify = leaf(grp, ctx, "verify", "Check the R_d / S_n construction exactly", [&] {
    const auto r = cantor::verify_counterexample(depth);
    Outcome o{cantor::report_to_json(r), r.passed(), ""};
    std::size_t joins = 0;
    for (const auto& c : r.checks)
      if (c.name.rfind("join_full", 0) == 0) ++joins;
    o.text = std::to_string(r.checks.size()) + " checks (" + std::to_string(joins) + " joins) " +
             (r.passed() ? "passed" : "FAILED");
    return o;
  });
  verify->add_option("--depth", depth, "d")->check(CLI::Range(1u, cantor::kDefaultMaxDepth));

  auto* chain = leaf(grp, ctx, "chain", "Strictly decreasing chain with midpoint refinement", [&] {
    const auto w = cantor::dense_chain_witness(n);
    json rels = json::array();
    bool ok = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      rels.push_back(cantor::trirel_to_json(w[i]));
      if (i + 1 < w.size()) {
        const auto mid = cantor::midpoint_witness(w[i], w[i + 1]);
        ok = ok && w[i + 1].subset_of(w[i]) && !(w[i] == w[i + 1]) && mid.subset_of(w[i]) &&
             w[i + 1].subset_of(mid) && !(mid == w[i]) && !(mid == w[i + 1]);
      }
    }
    Outcome o{{{"chain", rels}, {"strict_with_midpoints", ok}}, ok, ""};
    for (const auto& x : w) o.text += cantor::to_string(x) + "\n";
    o.text += ok ? "strict with midpoints" : "NOT strict";
    return o;
  });
  chain->add_option("--n", n, "Chain length")->check(CLI::Range(2u, 64u));
}

void add_calg(CLI::App& app, Context& ctx) {
  auto* grp = app.add_subcommand("calg", "Finite-dimensional *-algebras over Q(i)");
  grp->require_subcommand(1);
  auto& input = ctx.o.input;
  auto& dot = ctx.o.dot;

  auto algebra = [&] { return staralg::algebra_from_json(ctx.read_json(input)); };

  auto* gen = leaf(grp, ctx, "generate", "C*(S) for the listed generators", [&, algebra] {
    const auto a = algebra();
    auto j = staralg::algebra_to_json(a);
    j["commutative"] = staralg::is_commutative(a);
    return Outcome{j, true, "dimension " + std::to_string(a.dim())};
  });
  gen->add_option("input,--input,-i", input, "Algebra JSON")->required();

  auto* lattice = leaf(grp, ctx, "lattice", "Commutative subalgebras ordered by inclusion", [&, algebra] {
    const auto c = staralg::c_lattice(algebra());
    if (!dot.empty()) write_file(dot, order::to_dot(c.poset, "C"));
    Outcome o;
    o.results = order::poset_to_json(c.poset);
    o.results["containment_verified"] = c.containment_verified;
    o.text = std::to_string(c.poset.size()) + " subalgebras: " + labels_of(c.poset);
    return o;
  });
  lattice->add_option("input,--input,-i", input, "Algebra JSON")->required();
  lattice->add_option("--dot", dot, "Write the Hasse diagram here");

  auto* atoms = leaf(grp, ctx, "atoms", "Minimal nontrivial commutative subalgebras", [&, algebra] {
    const auto list = staralg::atoms(algebra());
    json arr = json::array();
    std::string text;
    for (const auto& a : list) {
      arr.push_back(staralg::algebra_to_json(a));
      text += "C*(" + staralg::to_string(a.generators().front()) + ")\n";
    }
    text += std::to_string(list.size()) + " atoms";
    return Outcome{{{"count", list.size()}, {"atoms", arr}}, true, text};
  });
  atoms->add_option("input,--input,-i", input, "Algebra JSON")->required();

  auto* spectrum = leaf(grp, ctx, "spectrum", "Minimal projections and character table", [&, algebra] {
    const auto s = staralg::spectrum(algebra());
    json points = json::array(), table = json::array();
    std::string text;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      points.push_back(staralg::matrix_to_json(s.points[i]));
      json row = json::array();
      for (const auto& v : s.table[i]) row.push_back(staralg::to_string(v));
      table.push_back(row);
      text += staralg::to_string(s.points[i]) + ": " + row.dump() + "\n";
    }
    text += std::to_string(s.points.size()) + " points";
    return Outcome{{{"points", points}, {"table", table}}, true, text};
  });
  spectrum->add_option("input,--input,-i", input, "Algebra JSON")->required();

  auto* caf = leaf(grp, ctx, "caf-iso", "C(A) against B(Proj(A))", [&, algebra] {
    const auto r = ortho::verify_caf_iso(algebra());
    return Outcome{ortho::caf_report_to_json(r), true,
                   "isomorphic: " + std::to_string(r.c_nodes) + " commutative subalgebras, " +
                       std::to_string(r.b_nodes) + " Boolean subalgebras"};
  });
  caf->add_option("input,--input,-i", input, "Algebra JSON")->required();
}

void add_omp(CLI::App& app, Context& ctx) {
  auto* grp = app.add_subcommand("omp", "Finite orthomodular posets");
  grp->require_subcommand(1);
  auto& input = ctx.o.input;
  auto& dot = ctx.o.dot;
  auto& policy = ctx.o.policy;
  auto& max_size = ctx.o.max_size;

  auto* validate = leaf(grp, ctx, "validate", "Check the five axioms", [&] {
    const auto t = ortho::omp_tables_from_json(ctx.read_json(input));
    try {
      const auto p = ortho::validate_omp(t);
      return Outcome{{{"valid", true}, {"elements", p.size()}}, true,
                     "valid orthomodular poset with " + std::to_string(p.size()) + " elements"};
    } catch (const ortho::AxiomError& e) {
      json w = json::array();
      for (auto x : e.witness()) w.push_back(x < t.labels.size() ? t.labels[x] : std::to_string(x));
      return Outcome{{{"valid", false}, {"axiom", e.axiom()}, {"witness", w}, {"message", e.what()}}, false,
                     std::string("axiom ") + std::to_string(e.axiom()) + " fails: " + e.what()};
    }
  });
  validate->add_option("input,--input,-i", input, "OMP JSON")->required();

  auto* boolsub = leaf(grp, ctx, "boolsub", "Boolean subalgebras ordered by inclusion", [&] {
    const auto p = ortho::validate_omp(ortho::omp_tables_from_json(ctx.read_json(input)));
    ortho::BoolSubOptions opt;
    opt.policy = policy == "lenient" ? ortho::PartialPolicy::Lenient : ortho::PartialPolicy::Strict;
    opt.max_size = max_size;
    const auto b = ortho::boolean_subalgebras(p, opt);
    if (!dot.empty()) write_file(dot, order::to_dot(b.poset, "B"));
    json subs = json::array(), blocks = json::array();
    for (auto m : b.subalgebras) subs.push_back(ortho::describe(p, m));
    for (auto m : ortho::blocks(p, opt)) blocks.push_back(ortho::describe(p, m));
    std::string text;
    for (const auto& s : subs) text += s.get<std::string>() + "\n";
    text += std::to_string(subs.size()) + " Boolean subalgebras, " + std::to_string(blocks.size()) + " blocks";
    return Outcome{{{"count", subs.size()}, {"policy", policy}, {"subalgebras", subs}, {"blocks", blocks},
                    {"poset", order::poset_to_json(b.poset)}},
                   true, text};
  });
  boolsub->add_option("input,--input,-i", input, "OMP JSON")->required();
  boolsub->add_option("--policy", policy, "strict or lenient handling of missing meets and joins")
      ->check(CLI::IsMember({"strict", "lenient"}));
  boolsub->add_option("--max-size", max_size, "Refuse larger inputs");
  boolsub->add_option("--dot", dot, "Write the Hasse diagram here");
}

void add_scatter(CLI::App& app, Context& ctx) {
  auto* cb = app.add_subcommand("cb", "Cantor-Bendixson ranks");
  cb->require_subcommand(1);
  auto& ordinal = ctx.o.ordinal;
  auto& input = ctx.o.input;
  auto* rank = leaf(cb, ctx, "rank", "Rank of [0, alpha] for alpha in Cantor normal form", [&] {
    const auto a = scatter::parse_ordinal(ordinal);
    const auto d = scatter::cb_derivative_ord(a);
    const auto r = scatter::cb_rank_ord(a);
    return Outcome{{{"ordinal", a.to_string()},
                    {"rank", r},
                    {"derivative", d ? json(d->to_string()) : json(nullptr)}},
                   true,
                   "rank " + std::to_string(r) + ", derivative " + (d ? "[1, " + d->to_string() + "]" : "empty")};
  });
  rank->add_option("--ordinal", ordinal, "e.g. \"w^2*2+w*3+5\"")->required();

  auto* topo = app.add_subcommand("topo", "Finite topological spaces");
  topo->require_subcommand(1);
  auto* check = leaf(topo, ctx, "check", "Scatteredness, Stonean and separation properties", [&] {
    const auto t = scatter::fintop_from_json(ctx.read_json(input));
    const auto r = scatter::cb_rank_fin(t);
    const auto s = scatter::stone_scattered_check(t);
    json stages = json::object();
    for (std::size_t x = 0; x < t.size(); ++x)
      stages[t.labels()[x]] = r.stage[x] ? json(*r.stage[x]) : json(nullptr);
    const bool td = scatter::is_totally_disconnected_fin(t);
    Outcome o;
    o.results = {{"points", t.size()},
                 {"scattered", r.scattered},
                 {"cb_rank", r.rank},
                 {"residue", r.residue},
                 {"stages", stages},
                 {"stonean", s.stonean},
                 {"hausdorff", s.hausdorff},
                 {"totally_disconnected", td},
                 {"stone_scattered", s.holds}};
    // the only failure is a Hausdorff, Stonean, scattered space with a point
    // that is not clopen at its stage
    o.passed = !(s.stonean && s.scattered && s.hausdorff) || s.holds;
    o.text = std::string("scattered: ") + (r.scattered ? "yes" : "no") + ", rank " + std::to_string(r.rank) +
             ", stonean: " + (s.stonean ? "yes" : "no") + ", hausdorff: " + (s.hausdorff ? "yes" : "no") +
             ", totally disconnected: " + (td ? "yes" : "no");
    return o;
  });
  check->add_option("input,--input,-i", input, "Topology JSON")->required();
}

void add_accept(CLI::App& app, Context& ctx) {
  auto& selector = ctx.o.selector;
  auto* acc = leaf(&app, ctx, "accept", "Run the acceptance criteria", [&] {
    Selector sel;
    try {
      sel = selector_from_string(selector);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    const auto results = run_acceptance(sel);
    Outcome o;
    o.results = acceptance_to_json(results);
    o.passed = o.results["passed"].get<bool>();
    for (const auto& r : results) o.text += format_line(r) + "\n";
    o.text.pop_back();
    return o;
  });
  acc->add_option("selector", selector, "all or fast");
}

bool is_check_failure(const std::exception& e) {
  if (auto* c = dynamic_cast<const cantor::CantorError*>(&e)) return c->kind() == cantor::CantorErrc::AssertionFailed;
  if (auto* o = dynamic_cast<const ortho::OrthoError*>(&e)) {
    return o->kind() == ortho::OrthoErrc::IsoFailure || o->kind() == ortho::OrthoErrc::AxiomViolated;
  }
  return false;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Finite order-theoretic and operator-algebraic checks", "ordalg"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Context ctx;
  add_poset(app, ctx);
  add_eqrel(app, ctx);
  add_cantor(app, ctx);
  add_calg(app, ctx);
  add_omp(app, ctx);
  add_scatter(app, ctx);
  add_accept(app, ctx);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto& a : args) ctx.digest_input += a + '\0';
  Outcome outcome;
  int code = kExitOk;
  try {
    outcome = ctx.action();
    code = outcome.passed ? kExitOk : kExitCheckFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    if (!is_check_failure(e)) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    outcome.passed = false;
    outcome.results = {{"error", e.what()}};
    outcome.text = std::string("check failed: ") + e.what();
    code = kExitCheckFailed;
  }

  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ctx.json_mode) {
    json report = {{"command", ctx.command},
                   {"inputs_digest", "fnv1a64:" + fnv1a_hex(ctx.digest_input)},
                   {"results", outcome.results},
                   {"passed", outcome.passed},
                   {"version", kVersion},
                   {"wall_time_ms", ms}};
    out << report.dump(2) << "\n";
  } else {
    out << outcome.text << "\n";
  }
  return code;
}

}  // namespace ordalg::cli
