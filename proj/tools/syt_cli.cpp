/*
 * Command-line front end. Subcommands cover enumeration, per-tableau
 * statistics, map application, statistic distributions, Narayana
 * coefficients, canon words, rowmotion orbits, and the verification suites.
 *
 * Exit codes: 0 success, 1 verification or resource failure, 2 usage error
 * (including malformed inputs). Every error is a single JSON line on stderr.
 * SYT_BUDGET overrides the default enumeration budget.
 */

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "syt/arrow.hpp"
#include "syt/bounce.hpp"
#include "syt/canon.hpp"
#include "syt/distribution.hpp"
#include "syt/dyck.hpp"
#include "syt/enumerate.hpp"
#include "syt/maps.hpp"
#include "syt/narayana.hpp"
#include "syt/polynomial.hpp"
#include "syt/poset.hpp"
#include "syt/tableau.hpp"
#include "syt/verify.hpp"

using nlohmann::json;
using namespace syt;

namespace {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_shape: return "bad_shape";
    case errc::bad_entries: return "bad_entries";
    case errc::row_order: return "row_order";
    case errc::column_order: return "column_order";
    case errc::not_rectangular: return "not_rectangular";
    case errc::not_distinct: return "not_distinct";
    case errc::invalid_arrows: return "invalid_arrows";
    case errc::bad_dyck: return "bad_dyck";
    case errc::bad_sigma: return "bad_sigma";
    case errc::bad_canon_word: return "bad_canon_word";
    case errc::bad_labeling: return "bad_labeling";
    case errc::descents_not_contained: return "descents_not_contained";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::unknown_suite: return "unknown_suite";
    case errc::bad_argument: return "bad_argument";
    case errc::iteration_guard: return "iteration_guard";
    case errc::internal: return "internal";
  }
  return "unknown";
}

// Malformed inputs are usage errors; blown budgets and internal guards are
// runtime failures.
int errc_exit_code(errc c) {
  switch (c) {
    case errc::budget_exceeded:
    case errc::iteration_guard:
    case errc::internal:
      return 1;
    default:
      return 2;
  }
}

[[noreturn]] void emit_error(const std::string& name, const std::string& message, int code) {
  json j;
  j["error"] = name;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
  std::exit(code);
}

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("SYT_BUDGET");
  if (!raw) return kDefaultBudget;
  try {
    return static_cast<std::uint64_t>(std::stoull(raw));
  } catch (const std::exception&) {
    emit_error("bad_argument", "SYT_BUDGET is not a number", 2);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

json tableau_to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& row : t.grid()) rows.push_back(row);
  return rows;
}

std::vector<int> parse_sigma_text(const std::string& text) {
  // Accepts "3,1,2,4" or the digit form "3124".
  return CanonWord::parse(text).letters;
}

// ---- subcommand bodies ------------------------------------------------------

int run_enumerate(const std::string& shape_text, std::optional<std::uint64_t> limit,
                  const std::string& format) {
  Partition shape = parse_shape(shape_text);
  std::vector<Tableau> all = enumerate_syt(shape, limit, budget_from_env());
  if (format == "json") {
    json out = json::array();
    for (const Tableau& t : all) out.push_back(tableau_to_json(t));
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << to_text(all[i]);
    }
  }
  return 0;
}

int run_stats(const std::string& path) {
  Tableau t = parse_tableau(read_file(path));
  StatRecord s = stats(t);
  BounceMatrix b = bounce_matrix(t);
  json out;
  out["shape"] = t.shape().to_string();
  out["des_set"] = s.des_set;
  out["asc_set"] = s.asc_set;
  out["hdes_set"] = s.hdes_set;
  out["des"] = s.des();
  out["asc"] = s.asc();
  out["hdes"] = s.hdes();
  out["maj"] = s.maj;
  json rows = json::array();
  for (int r = 1; r <= t.rows(); ++r) {
    json row = json::array();
    for (int c = 1; c <= t.rows(); ++c) row.push_back(b.at(r, c));
    rows.push_back(row);
  }
  out["bounce"] = rows;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_apply(const std::string& map_name, const std::string& path) {
  std::string raw = read_file(path);
  if (map_name == "lk") {
    DyckPath d(trim(raw));
    std::cout << lalanne_kreweras(d).word() << "\n";
    return 0;
  }
  Tableau t = parse_tableau(raw);
  Tableau out = [&] {
    if (map_name == "phi-d") return complement_descents(t);
    if (map_name == "phi-a")
      return t.shape().rectangular() ? complement_ascents(t) : complement_ascents_distinct(t);
    if (map_name == "rev") return reverse_arrows(t);
    if (map_name == "rot") return rotate(t);
    if (map_name == "conj") return conjugate(t);
    if (map_name == "rowmotion") return rowmotion(t);
    if (map_name == "asc-to-hdes") return asc_to_hdes(t);
    fail(errc::bad_argument, "unknown map: " + map_name);
  }();
  std::cout << to_text(out);
  return 0;
}

int run_distribution(const std::string& shape_text, const std::string& stat_name,
                     const std::string& sigma_text) {
  Partition shape = parse_shape(shape_text);
  StatisticSpec spec;
  if (!sigma_text.empty()) {
    if (stat_name != "des")
      fail(errc::bad_argument, "--sigma applies to --stat des only");
    spec.which = Statistic::des_sigma;
    spec.sigma = parse_sigma_text(sigma_text);
  } else {
    spec.which = parse_statistic(stat_name);
  }
  std::cout << distribution(shape, spec, budget_from_env()).to_json() << "\n";
  return 0;
}

void print_coefficients(const IntPolynomial& p) {
  std::cout << "coefficients";
  for (const Int& c : p.coeffs()) std::cout << " " << c;
  std::cout << "\n";
}

int run_narayana(int k, int n, std::optional<int> h) {
  if (h) {
    std::cout << narayana(k, n, *h) << "\n";
    return 0;
  }
  print_coefficients(narayana_polynomial(k, n));
  return 0;
}

int run_canon_distribution(int k, int n) {
  print_coefficients(canon_descent_distribution(k, n, budget_from_env()));
  return 0;
}

int run_canon_compose(const std::string& sigma_text, const std::string& path) {
  std::vector<int> sigma = parse_sigma_text(sigma_text);
  Tableau t = parse_tableau(read_file(path));
  std::cout << canon_compose(sigma, t).to_string() << "\n";
  return 0;
}

int run_canon_decompose(const std::string& word_text) {
  CanonDecomposition dec = canon_decompose(CanonWord::parse(word_text));
  std::cout << "sigma";
  for (int v : dec.sigma) std::cout << " " << v;
  std::cout << "\n" << to_text(dec.tableau);
  return 0;
}

int run_orbit(const std::string& map_name, const std::string& shape_text, bool cycles) {
  if (map_name != "rowmotion") fail(errc::bad_argument, "unknown orbit map: " + map_name);
  Partition shape = parse_shape(shape_text);
  if (!shape.rectangular()) fail(errc::not_rectangular, "rowmotion orbits need a rectangle");

  std::vector<Tableau> all = enumerate_syt(shape, std::nullopt, budget_from_env());
  std::sort(all.begin(), all.end());
  std::set<RowWord> done;
  std::vector<std::vector<Tableau>> orbits;
  for (const Tableau& t : all) {
    if (done.count(t.row_word())) continue;
    std::vector<Tableau> orbit{t};
    done.insert(t.row_word());
    for (Tableau cur = rowmotion(t); !(cur == t); cur = rowmotion(cur)) {
      // The map is a bijection, so the walk returns to its start.
      check_internal(!done.count(cur.row_word()), "orbits are not disjoint");
      done.insert(cur.row_word());
      orbit.push_back(cur);
    }
    orbits.push_back(std::move(orbit));
  }

  if (cycles) {
    json out = json::array();
    for (const auto& orbit : orbits) {
      json members = json::array();
      for (const Tableau& t : orbit) members.push_back(tableau_to_json(t));
      out.push_back(members);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::map<std::size_t, int> sizes;
  for (const auto& orbit : orbits) ++sizes[orbit.size()];
  std::cout << "tableaux " << all.size() << " orbits " << orbits.size() << "\n";
  for (const auto& [len, count] : sizes) std::cout << "size " << len << " count " << count << "\n";
  return 0;
}

int run_verify(const std::string& suite, int max_cells) {
  VerifyOptions opt;
  opt.max_cells = max_cells;
  opt.budget = budget_from_env();
  std::vector<std::string> names =
      suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const std::string& name : names) {
    SuiteReport report = run_suite(name, opt);
    for (const SuiteRecord& rec : report.records) std::cout << to_json(rec) << "\n";
    ok = ok && report.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"standard Young tableau statistics, maps, and verification"};
  app.require_subcommand(1);

  auto* cmd_enum = app.add_subcommand("enumerate", "list all tableaux of a shape");
  std::string enum_shape, enum_format = "text";
  std::uint64_t enum_limit = 0;
  cmd_enum->add_option("--shape", enum_shape, "partition, e.g. 4,3,2 or 6x5")->required();
  auto* limit_opt = cmd_enum->add_option("--limit", enum_limit, "stop after this many");
  cmd_enum->add_option("--format", enum_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_stats = app.add_subcommand("stats", "statistics of one tableau");
  std::string stats_file;
  cmd_stats->add_option("--tableau", stats_file, "tableau file")->required();

  auto* cmd_apply = app.add_subcommand("apply", "apply a map to a tableau or path");
  std::string apply_map, apply_file;
  cmd_apply->add_option("--map", apply_map, "phi-d|phi-a|rev|rot|conj|rowmotion|lk|asc-to-hdes")
      ->required();
  cmd_apply->add_option("--input", apply_file, "input file")->required();

  auto* cmd_dist = app.add_subcommand("distribution", "histogram of a statistic over a shape");
  std::string dist_shape, dist_stat, dist_sigma;
  cmd_dist->add_option("--shape", dist_shape, "partition")->required();
  cmd_dist->add_option("--stat", dist_stat, "des|asc|hdes|maj|st1|st2")->required();
  cmd_dist->add_option("--sigma", dist_sigma, "weigh descents by a permutation of the rows");

  auto* cmd_nar = app.add_subcommand("narayana", "generalized Narayana numbers");
  // The short -h help alias would collide with the --h option below.
  cmd_nar->set_help_flag("--help", "print help and exit");
  int nar_k = 0, nar_n = 0, nar_h = 0;
  cmd_nar->add_option("--k", nar_k, "rows")->required();
  cmd_nar->add_option("--n", nar_n, "columns")->required();
  auto* nar_h_opt = cmd_nar->add_option("--h", nar_h, "single coefficient");

  auto* cmd_canon = app.add_subcommand("canon", "canon words over k voices");
  int canon_k = 0, canon_n = 0;
  bool canon_dist = false;
  std::vector<std::string> canon_compose_args;
  std::string canon_word;
  cmd_canon->add_option("--k", canon_k, "voices");
  cmd_canon->add_option("--n", canon_n, "length per voice");
  cmd_canon->add_flag("--distribution", canon_dist, "descent histogram over all canon words");
  cmd_canon->add_option("--compose", canon_compose_args, "SIGMA FILE")->expected(2);
  cmd_canon->add_option("--decompose", canon_word, "canon word");

  auto* cmd_orbit = app.add_subcommand("orbit", "orbit structure of a map");
  std::string orbit_map = "rowmotion", orbit_shape, orbit_report;
  cmd_orbit->add_option("--map", orbit_map, "rowmotion")->required();
  cmd_orbit->add_option("--shape", orbit_shape, "rectangle, e.g. 3,3 or 3x2")->required();
  cmd_orbit->add_option("--report", orbit_report, "cycles for full members")
      ->check(CLI::IsMember({"cycles"}));

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string verify_suite;
  int verify_cells = -1;
  cmd_verify->add_option("--suite", verify_suite, "suite name or all")->required();
  cmd_verify->add_option("--max-cells", verify_cells, "cap the sweep ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit_error("usage", e.what(), 2);
  }

  try {
    if (app.got_subcommand(cmd_enum)) {
      std::optional<std::uint64_t> limit;
      if (limit_opt->count()) limit = enum_limit;
      return run_enumerate(enum_shape, limit, enum_format);
    }
    if (app.got_subcommand(cmd_stats)) return run_stats(stats_file);
    if (app.got_subcommand(cmd_apply)) return run_apply(apply_map, apply_file);
    if (app.got_subcommand(cmd_dist)) return run_distribution(dist_shape, dist_stat, dist_sigma);
    if (app.got_subcommand(cmd_nar)) {
      std::optional<int> h;
      if (nar_h_opt->count()) h = nar_h;
      return run_narayana(nar_k, nar_n, h);
    }
    if (app.got_subcommand(cmd_canon)) {
      int modes = (canon_dist ? 1 : 0) + (canon_compose_args.empty() ? 0 : 1) +
                  (canon_word.empty() ? 0 : 1);
      if (modes != 1)
        fail(errc::bad_argument, "canon needs exactly one of --distribution, --compose, --decompose");
      if (canon_dist) {
        if (canon_k <= 0 || canon_n <= 0)
          fail(errc::bad_argument, "canon --distribution needs --k and --n");
        return run_canon_distribution(canon_k, canon_n);
      }
      if (!canon_compose_args.empty())
        return run_canon_compose(canon_compose_args[0], canon_compose_args[1]);
      return run_canon_decompose(canon_word);
    }
    if (app.got_subcommand(cmd_orbit))
      return run_orbit(orbit_map, orbit_shape, orbit_report == "cycles");
    if (app.got_subcommand(cmd_verify)) return run_verify(verify_suite, verify_cells);
  } catch (const error& e) {
    emit_error(errc_name(e.code()), e.what(), errc_exit_code(e.code()));
  } catch (const std::exception& e) {
    emit_error("internal", e.what(), 1);
  }
  emit_error("usage", "no subcommand", 2);
}
