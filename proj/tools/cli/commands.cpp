#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "orbk/cochain.hpp"
#include "orbk/fusion.hpp"
#include "orbk/parallel.hpp"
#include "orbk/poly2.hpp"
#include "orbk/twisted_rep.hpp"

namespace orbk::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup load_group(const GroupSource& src) {
  if (src.spec.empty() == src.file.empty()) throw InputError("give exactly one of --group or --group-file");
  try {
    return parse_group_spec(src.file.empty() ? src.spec : read_file(src.file), src.order_cap);
  } catch (const ValidationError& e) {
    throw InputError(std::string("group: ") + e.what());
  }
}

std::string group_echo(const GroupSource& src) {
  return src.file.empty() ? "--group " + src.spec : "--group-file " + src.file;
}

std::string twist_echo(const TwistSource& t) {
  if (!t.cocycle_file.empty()) return " --cocycle " + t.cocycle_file;
  if (!t.poly.empty()) return " --poly " + t.poly + (t.bockstein ? " --bockstein" : "");
  return "";
}

Cochain load_twist(const FiniteGroup& g, const TwistSource& t, bool required) {
  const FiniteGroupoid pg = point_groupoid(g);
  if (!t.poly.empty() && !t.cocycle_file.empty()) throw InputError("give at most one of --poly and --cocycle");
  Cochain phi(pg, 3);
  try {
    if (!t.poly.empty()) {
      const Poly2Class p = parse_poly2(t.poly);
      phi = t.bockstein ? bockstein_lift(p, g) : poly_to_cocycle(p, g);
    } else if (!t.cocycle_file.empty()) {
      std::istringstream in(read_file(t.cocycle_file));
      phi = read_cochain(in, pg);
    } else if (required) {
      throw InputError("give --poly or --cocycle");
    }
  } catch (const ValidationError& e) {
    throw InputError(std::string("cocycle: ") + e.what());
  } catch (const UsageError& e) {
    throw InputError(std::string("cocycle: ") + e.what());
  }
  if (auto bad = cocycle_failure(phi)) throw InputError("input is not a cocycle: delta nonzero at (" + join(*bad) + ")");
  return phi;
}

std::optional<std::vector<int>> first_difference(const Cochain& a, const Cochain& b) {
  const auto e = (a - b).entries();
  if (e.empty()) return std::nullopt;
  return e.front().first;
}

nlohmann::ordered_json check_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["detail"] = c.detail;
  if (!c.pass) {
    j["witness"] = c.witness;
    if (!c.replay.empty()) j["replay"] = c.replay;
  }
  return j;
}

// ---------------------------------------------------------------- verify

enum VerifyCheck { kDeltaSquared, kChainMap, kHomotopy, kUnitCoboundary, kCheckCount };
const char* const kCheckNames[] = {"delta_squared", "chain_map", "homotopy", "unit_coboundary"};

struct Sides {
  Cochain lhs, rhs;
};

struct VerifyContext {
  FiniteGroup group;
  FiniteGroupoid pg;
  SectorGroupoid in, two;
};

std::mt19937_64 trial_rng(std::uint64_t seed, int trial, int check) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(check)};
  return std::mt19937_64(seq);
}

Sides compute_sides(const VerifyContext& v, const VerifyOptions& o, int check, int trial) {
  auto rng = trial_rng(o.seed, trial, check);
  const int den = 12;
  switch (check) {
    case kDeltaSquared: {
      const Cochain phi = random_cochain(v.pg, o.degree, den, rng);
      return {delta(delta(phi)), Cochain(v.pg, o.degree + 2)};
    }
    case kChainMap: {
      const Cochain phi = random_cochain(v.pg, o.degree, den, rng);
      return {delta(theta(phi, v.in)), theta(delta(phi), v.in)};
    }
    case kHomotopy: {
      const Cochain phi = random_cochain(v.pg, o.degree, den, rng);
      const Cochain t = o.theta_sign * theta(phi, v.in);
      const auto e1 = evaluation_hom(Evaluation::First, v.two, v.in);
      const auto e2 = evaluation_hom(Evaluation::Second, v.two, v.in);
      const auto e12 = evaluation_hom(Evaluation::Product, v.two, v.in);
      return {delta(chain_homotopy(phi, v.two)) + chain_homotopy(delta(phi), v.two),
              pullback(e1, t) + pullback(e2, t) - pullback(e12, t)};
    }
    default: {
      const Cochain phi = random_three_cocycle(v.group, rng);
      return {pullback(unit_embedding(v.in), theta(phi, v.in)),
              delta(pullback(identity_section(v.two), chain_homotopy(phi, v.two)))};
    }
  }
}

bool check_applies(int check, int degree) {
  if (check == kChainMap) return degree >= 1;
  if (check == kHomotopy) return degree >= 2;
  return true;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string render_text(const Report& r, bool with_timing) {
  std::ostringstream os;
  os << "$ orbk " << r.command << '\n';
  for (const auto& line : r.table_lines) os << line << '\n';
  int passed = 0;
  for (const auto& c : r.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail;
    if (!c.pass && !c.witness.empty()) os << " witness (" << join(c.witness) << ")";
    if (!c.replay.empty() && !c.pass) os << " replay: " << c.replay;
    os << '\n';
    passed += c.pass;
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size() << " checks)\n";
  if (with_timing)
    for (const auto& [name, s] : r.timings) os << "timing " << name << ": " << std::fixed << std::setprecision(3) << s << " s\n";
  return os.str();
}

std::string render_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["command"] = "orbk " + r.command;
  j["result"] = r.passed() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  j["tables"] = r.tables;
  if (with_timing) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [name, s] : r.timings) t[name] = s;
    j["timing"] = t;
  }
  return j.dump(2) + "\n";
}

Report cmd_verify(const VerifyOptions& o) {
  const auto t0 = Clock::now();
  if (o.degree < 0) throw InputError("degree must be nonnegative");
  if (o.trials < 1) throw InputError("trials must be positive");
  const FiniteGroup g = load_group(o.group);
  const FiniteGroupoid pg = point_groupoid(g);
  const VerifyContext v{g, pg, inertia(pg), k_sectors(pg, 2)};

  Report r;
  r.command = "verify " + group_echo(o.group) + " --degree " + std::to_string(o.degree) + " --trials " +
              std::to_string(o.trials) + " --seed " + std::to_string(o.seed);
  r.tables["group_order"] = g.order();
  r.tables["degree"] = o.degree;
  r.tables["trials"] = o.trials;

  if (!o.check_tuple.empty() || !o.only_check.empty()) {
    const auto* it = std::find(std::begin(kCheckNames), std::end(kCheckNames), o.only_check);
    if (it == std::end(kCheckNames)) throw InputError("--check must name one of the verify checks");
    if (o.check_tuple.empty()) throw InputError("--check needs --check-tuple");
    if (o.only_trial < 0 || o.only_trial >= o.trials) throw InputError("--trial out of range");
    const int check = static_cast<int>(it - std::begin(kCheckNames));
    if (!check_applies(check, o.degree)) throw InputError("check does not apply in this degree");
    r.command += std::string(" --check ") + *it + " --trial " + std::to_string(o.only_trial) + " --check-tuple " +
                 join(o.check_tuple);
    const Sides s = compute_sides(v, o, check, o.only_trial);
    RationalAngle lhs, rhs;
    try {
      lhs = s.lhs.at(o.check_tuple);
      rhs = s.rhs.at(o.check_tuple);
    } catch (const std::exception& e) {
      throw InputError(std::string("check tuple: ") + e.what());
    }
    CheckResult c{*it, lhs == rhs, "lhs " + lhs.to_string() + ", rhs " + rhs.to_string(), {}, {}};
    if (!c.pass) c.witness = o.check_tuple;
    r.checks.push_back(c);
    r.timings.emplace_back("total", seconds_since(t0));
    return r;
  }

  struct Outcome {
    std::optional<std::vector<int>> witness;
    std::string lhs, rhs;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(kCheckCount) * o.trials);
  parallel_for(outcomes.size(), o.workers, [&](std::size_t idx) {
    const int check = static_cast<int>(idx / o.trials);
    const int trial = static_cast<int>(idx % o.trials);
    if (!check_applies(check, o.degree)) return;
    const Sides s = compute_sides(v, o, check, trial);
    if (auto w = first_difference(s.lhs, s.rhs)) outcomes[idx] = {w, s.lhs(*w).to_string(), s.rhs(*w).to_string()};
  });
  for (int check = 0; check < kCheckCount; ++check) {
    CheckResult c;
    c.name = kCheckNames[check];
    if (!check_applies(check, o.degree)) {
      c.detail = "not applicable in degree " + std::to_string(o.degree);
      r.checks.push_back(c);
      continue;
    }
    int failures = 0;
    for (int trial = 0; trial < o.trials; ++trial) {
      const Outcome& out = outcomes[static_cast<std::size_t>(check) * o.trials + trial];
      if (!out.witness) continue;
      if (failures++ == 0) {
        c.pass = false;
        c.witness = *out.witness;
        c.replay = "orbk " + r.command + " --check " + c.name + " --trial " + std::to_string(trial) + " --check-tuple " + join(c.witness);
        c.detail = "trial " + std::to_string(trial) + ": lhs " + out.lhs + ", rhs " + out.rhs;
      }
    }
    if (failures == 0)
      c.detail = std::to_string(o.trials) + (check == kUnitCoboundary ? " random 3-cocycles" : " random cochains");
    else
      c.detail = std::to_string(failures) + "/" + std::to_string(o.trials) + " trials fail; first " + c.detail;
    r.checks.push_back(c);
  }
  r.timings.emplace_back("total", seconds_since(t0));
  return r;
}

Report cmd_transgress(const TransgressOptions& o) {
  const auto t0 = Clock::now();
  const FiniteGroup g = load_group(o.group);
  const Cochain phi = load_twist(g, o.twist, true);
  if (phi.degree() < 2) throw InputError("transgression needs a cocycle of degree at least 2");
  Report r;
  r.command = "transgress " + group_echo(o.group) + twist_echo(o.twist);
  if (!o.out_dir.empty()) r.command += " --out-dir " + o.out_dir;

  const FiniteGroupoid pg = point_groupoid(g);
  const SectorGroupoid in = inertia(pg);
  const Cochain tau = theta(phi, in);
  const auto classes = conjugacy_classes(g);
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);

  CheckResult shuffle{"shuffle_matches_restriction", true, "", {}, {}};
  CheckResult closed{"sector_cocycles", true, "", {}, {}};
  nlohmann::ordered_json sectors = nlohmann::ordered_json::array();
  int nontrivial = 0;
  int total_rank = 0;
  const bool ranks = phi.degree() == 3;
  r.table_lines.push_back("group order " + std::to_string(g.order()) + ", " + std::to_string(classes.count()) +
                          " sectors, cocycle degree " + std::to_string(phi.degree()));
  for (int c = 0; c < classes.count(); ++c) {
    const Element x = classes.representative(c);
    const Subgroup z = centralizer(g, x);
    const Cochain tx = shuffle_theta(phi, g, x);
    if (shuffle.pass)
      if (auto w = first_difference(tx, restrict_to_sector(tau, in, g, x))) {
        shuffle.pass = false;
        shuffle.witness = {x};
        shuffle.witness.insert(shuffle.witness.end(), w->begin(), w->end());
      }
    if (closed.pass)
      if (auto w = cocycle_failure(tx)) {
        closed.pass = false;
        closed.witness = {x};
        closed.witness.insert(closed.witness.end(), w->begin(), w->end());
      }
    const bool trivial = closed.pass && coboundary_solve(tx).has_value();
    nontrivial += !trivial;
    nlohmann::ordered_json s;
    s["representative"] = x;
    s["label"] = g.label(x);
    s["class_size"] = classes.classes[c].size();
    s["centralizer_order"] = z.order();
    s["class"] = trivial ? "trivial" : "nontrivial";
    std::string line = "sector " + g.label(x) + ": class size " + std::to_string(classes.classes[c].size()) +
                       ", centralizer order " + std::to_string(z.order()) + ", theta_g " +
                       (trivial ? "trivial" : "nontrivial");
    if (ranks && closed.pass) {
      const auto n = normalize_cocycle(TwoCocycleGroup::from_cochain(z.as_group(), tx)).cocycle;
      const int rank = twisted_rank(n);
      total_rank += rank;
      s["twisted_rank"] = rank;
      line += ", twisted rank " + std::to_string(rank);
      if (z.as_group().is_abelian()) {
        const auto beta = commutator_pairing(n.to_cochain());
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : beta) {
          nlohmann::ordered_json jr = nlohmann::ordered_json::array();
          for (const auto& a : row) jr.push_back(a.to_string());
          rows.push_back(jr);
        }
        s["commutator_pairing"] = rows;
        int radical = 0;
        for (const auto& row : beta)
          radical += std::all_of(row.begin(), row.end(), [](const RationalAngle& a) { return a.is_zero(); });
        line += ", pairing radical " + std::to_string(radical);
      }
    }
    if (!o.out_dir.empty()) {
      const std::string path = o.out_dir + "/sector_" + std::to_string(x) + ".cochain";
      std::ofstream f(path);
      f << "# theta_g for g = " << g.label(x) << " on its centralizer, local indices\n";
      write_cochain(f, tx);
      s["file"] = path;
    }
    sectors.push_back(s);
    r.table_lines.push_back(line);
  }
  r.tables["group_order"] = g.order();
  r.tables["cocycle_degree"] = phi.degree();
  r.tables["sectors"] = sectors;
  r.tables["nontrivial_sectors"] = nontrivial;
  std::string summary = "nontrivial sectors: " + std::to_string(nontrivial);
  if (ranks && closed.pass) {
    r.tables["total_rank"] = total_rank;
    summary += ", total twisted rank " + std::to_string(total_rank);
  }
  r.table_lines.push_back(summary);
  shuffle.detail = shuffle.pass ? "shuffle formula equals the restricted theta on every sector"
                                : "shuffle formula differs at (g, tuple)";
  closed.detail = closed.pass ? "every theta_g is a cocycle" : "theta_g fails the cocycle identity at (g, tuple)";
  r.checks.push_back(shuffle);
  r.checks.push_back(closed);
  r.timings.emplace_back("total", seconds_since(t0));
  return r;
}

Report cmd_fusion_table(const FusionOptions& o) {
  const auto t0 = Clock::now();
  const FiniteGroup g = load_group(o.group);
  const Cochain phi = load_twist(g, o.twist, false);
  if (phi.degree() != 3) throw InputError("the twist must be a 3-cocycle");
  ContextPtr ctx;
  try {
    ctx = make_context(g, phi);
  } catch (const ValidationError& e) {
    throw InputError(e.what());
  }
  Report r;
  r.command = "fusion-table " + group_echo(o.group) + twist_echo(o.twist);
  if (o.skip_axioms) r.command += " --skip-axioms";

  const auto basis = irreducible_basis(ctx);
  std::vector<KClass> chars;
  CheckResult valid{"bundles_validate", true, "", {}, {}};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto check = validate_bundle(basis[i]);
    if (!check && valid.pass) {
      valid.pass = false;
      valid.witness = {static_cast<int>(i), (*check.witness)[0], (*check.witness)[1], (*check.witness)[2]};
      valid.detail = check.reason;
    }
    chars.push_back(character(basis[i]));
  }
  if (valid.pass) valid.detail = std::to_string(basis.size()) + " basis bundles";
  r.checks.push_back(valid);

  const auto classes = conjugacy_classes(g);
  CheckResult ranks{"rank_consistency", true, "", {}, {}};
  nlohmann::ordered_json jbasis = nlohmann::ordered_json::array();
  r.table_lines.push_back("basis (" + std::to_string(basis.size()) + " irreducible bundles):");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Element x = basis[i].sector(0);
    nlohmann::ordered_json b;
    b["index"] = i;
    b["sector"] = x;
    b["sector_label"] = g.label(x);
    b["dimension"] = basis[i].dimension();
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    std::string vals;
    for (Element u : ctx->centralizers[x].members) {
      values[g.label(u)] = chars[i](x, u).to_string();
      vals += (vals.empty() ? "" : ", ") + g.label(u) + ": " + chars[i](x, u).to_string();
    }
    b["character"] = values;
    jbasis.push_back(b);
    r.table_lines.push_back("  b" + std::to_string(i) + ": sector " + g.label(x) + ", dim " +
                            std::to_string(basis[i].dimension()) + ", chi = {" + vals + "}");
  }
  int total = 0;
  for (int c = 0; c < classes.count(); ++c) {
    const Element x = classes.representative(c);
    const int expected = twisted_rank(normalize_cocycle(ctx->sector_cocycle(x)).cocycle);
    const int found = static_cast<int>(std::count_if(basis.begin(), basis.end(),
                                                     [&](const TwistedBundle& b) { return b.sector(0) == x; }));
    total += found;
    if (found != expected && ranks.pass) {
      ranks.pass = false;
      ranks.witness = {x, found, expected};
    }
  }
  ranks.detail = ranks.pass ? "basis size per sector equals the twisted rank; total " + std::to_string(total)
                            : "basis size differs from the twisted rank at (g, found, expected)";
  r.checks.push_back(ranks);
  r.tables["group_order"] = g.order();
  r.tables["rank"] = basis.size();
  r.tables["basis"] = jbasis;

  CheckResult closure{"closure", true, "", {}, {}};
  try {
    const auto table = structure_constants(chars, o.workers);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    r.table_lines.push_back("products:");
    for (int i = 0; i < table.size; ++i)
      for (int j = i; j < table.size; ++j) {
        std::string rhs;
        for (int k = 0; k < table.size; ++k) {
          const auto c = table.at(i, j, k);
          if (c == 0) continue;
          entries.push_back({i, j, k, c});
          if (!rhs.empty()) rhs += " + ";
          if (c != 1) rhs += std::to_string(c) + " ";
          rhs += "b" + std::to_string(k);
        }
        r.table_lines.push_back("  b" + std::to_string(i) + " * b" + std::to_string(j) + " = " +
                                (rhs.empty() ? "0" : rhs));
      }
    r.tables["structure_constants"] = entries;
    closure.detail = "every product expands with integer coefficients";
  } catch (const ValidationError& e) {
    closure.pass = false;
    closure.detail = e.what();
  }
  r.checks.push_back(closure);

  if (!o.skip_axioms) {
    const auto ring = check_ring_axioms(chars, o.workers);
    CheckResult assoc{"associativity", ring.associative, std::to_string(ring.triples) + " triples", {}, {}};
    if (ring.associativity_witness) assoc.witness.assign(ring.associativity_witness->begin(), ring.associativity_witness->end());
    CheckResult comm{"commutativity", ring.commutative, std::to_string(basis.size() * basis.size()) + " pairs", {}, {}};
    if (ring.commutativity_witness) comm.witness.assign(ring.commutativity_witness->begin(), ring.commutativity_witness->end());
    r.checks.push_back(assoc);
    r.checks.push_back(comm);
  }
  r.timings.emplace_back("total", seconds_since(t0));
  return r;
}

namespace {

void add_group_options(CLI::App* app, GroupSource& g) {
  app->add_option("--group", g.spec, "group spec, e.g. elemab:2,3 or cyclic:4*cyclic:2");
  app->add_option("--group-file", g.file, "file holding a group spec or multiplication table");
  app->add_option("--max-order", g.order_cap, "largest accepted group order")->check(CLI::Range(1, 4096));
}

void add_twist_options(CLI::App* app, TwistSource& t) {
  app->add_option("--poly", t.poly, "mod-2 polynomial, e.g. x2yz|xy2z|xyz2");
  app->add_flag("--bockstein", t.bockstein, "use the integral lift of the polynomial class");
  app->add_option("--cocycle", t.cocycle_file, "cochain file on the point groupoid");
}

std::vector<int> parse_tuple(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--check-tuple expects comma-separated integers");
    }
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse transgression and twisted fusion on finite groups", "orbk"};
  app.require_subcommand(1);
  bool json = false, timing = false;
  app.add_flag("--json", json, "machine-readable report");
  app.add_flag("--timing", timing, "append wall-clock timings (not reproducible)");

  VerifyOptions vo;
  std::string tuple;
  auto* verify = app.add_subcommand("verify", "coboundary, transgression and homotopy identities on random cochains");
  add_group_options(verify, vo.group);
  verify->add_option("--degree", vo.degree, "degree of the random cochains")->check(CLI::Range(0, 6));
  verify->add_option("--trials", vo.trials, "random trials per check")->check(CLI::Range(1, 100000));
  verify->add_option("--seed", vo.seed, "random seed");
  verify->add_option("--workers", vo.workers, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--check", vo.only_check, "replay one check (with --trial and --check-tuple)");
  verify->add_option("--trial", vo.only_trial, "trial index to replay");
  verify->add_option("--check-tuple", tuple, "tuple to evaluate, comma separated");
  verify->add_flag("--json", json);
  verify->add_flag("--timing", timing);

  TransgressOptions to;
  auto* transgress = app.add_subcommand("transgress", "sector-wise inverse transgression of a 3-cocycle");
  add_group_options(transgress, to.group);
  add_twist_options(transgress, to.twist);
  transgress->add_option("--out-dir", to.out_dir, "write one cochain file per sector");
  transgress->add_flag("--json", json);
  transgress->add_flag("--timing", timing);

  FusionOptions fo;
  auto* fusion = app.add_subcommand("fusion-table", "twisted fusion ring: basis, structure constants, ring axioms");
  add_group_options(fusion, fo.group);
  add_twist_options(fusion, fo.twist);
  fusion->add_option("--workers", fo.workers, "worker threads")->check(CLI::Range(1, 256));
  fusion->add_flag("--skip-axioms", fo.skip_axioms, "skip the exhaustive associativity sweep");
  fusion->add_flag("--json", json);
  fusion->add_flag("--timing", timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (*verify) {
      if (!tuple.empty()) vo.check_tuple = parse_tuple(tuple);
      r = cmd_verify(vo);
    } else if (*transgress) {
      r = cmd_transgress(to);
    } else {
      r = cmd_fusion_table(fo);
    }
    out << (json ? render_json(r, timing) : render_text(r, timing));
    return r.passed() ? 0 : 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace orbk::cli
