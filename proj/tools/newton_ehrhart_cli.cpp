// Command-line front-end for the Newton-polytope Ehrhart library.
//
// Exit codes: 0 success, 1 usage/validation error, 2 internal disagreement
// or consistency failure (method mismatch, golden-table diff, failed
// property sweep).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "newt/ehrhart.hpp"
#include "newt/errors.hpp"
#include "newt/hstar_formulas.hpp"
#include "newt/idp.hpp"
#include "newt/reflexivity.hpp"
#include "newt/serialize.hpp"
#include "newt/symfun.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace newt;

namespace {

constexpr long long kDefaultMaxPoints = 5'000'000;

long long point_cap() {
  if (const char* env = std::getenv("NEWTON_EHRHART_MAX_POINTS")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      throw validation_error(
          "NEWTON_EHRHART_MAX_POINTS must be a positive integer");
    }
    throw validation_error(
        "NEWTON_EHRHART_MAX_POINTS must be a positive integer");
  }
  return kDefaultMaxPoints;
}

void guard_count(const Int& count, const std::string& what) {
  if (count > point_cap()) {
    throw limit_error(what + " has " + to_decimal(count) +
                      " lattice points, above the cap of " +
                      std::to_string(point_cap()) +
                      " (raise NEWTON_EHRHART_MAX_POINTS to override)");
  }
}

struct Selection {
  std::string kind = "schur";
  std::string lambda_text;
  int m = 0;
  int h = 1;
  bool h_given = false;

  PolytopeHandle handle() const {
    std::vector<int> parts;
    std::stringstream ss(lambda_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        parts.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw validation_error("cannot parse partition entry '" + item + "'");
      }
    }
    if (m <= 0) throw validation_error("--m must be a positive integer");
    const Partition lam = Partition::make(parts, m);
    if (kind == "schur") {
      if (h_given) {
        throw validation_error("--h only applies to --kind grothendieck");
      }
      return PolytopeHandle::schur(lam);
    }
    if (kind == "grothendieck") return PolytopeHandle::grothendieck(h, lam);
    throw validation_error("unknown --kind '" + kind + "'");
  }
};

void add_selection(CLI::App* cmd, Selection& sel) {
  // --h is a real option on these subcommands; keep help on --help alone.
  cmd->set_help_flag("--help", "print help");
  cmd->add_option("--kind", sel.kind, "schur|grothendieck")
      ->check(CLI::IsMember({"schur", "grothendieck"}))
      ->capture_default_str();
  cmd->add_option("--lambda", sel.lambda_text,
                  "partition as comma-separated integers, e.g. 2,1,0")
      ->required();
  cmd->add_option("--m", sel.m, "number of variables")->required();
  cmd->add_option("--h", sel.h, "inflation parameter (grothendieck only)")
      ->check(CLI::PositiveNumber)
      ->each([&sel](const std::string&) { sel.h_given = true; });
}

json handle_json(const PolytopeHandle& handle) {
  json j = to_json(handle);
  j["m"] = handle.m();
  return j;
}

std::vector<Point> guarded_points(const PolytopeHandle& handle) {
  const Int count = handle.is_schur()
                        ? permutohedron::count_lattice_points(handle.lambda)
                        : grothendieck_polytope::count_lattice_points(
                              handle.h, handle.lambda);
  guard_count(count, handle.str());
  return handle.is_schur()
             ? permutohedron::lattice_points(handle.lambda)
             : grothendieck_polytope::lattice_points(handle.h, handle.lambda);
}

std::vector<FacetInequality> facets_of(const PolytopeHandle& handle) {
  if (handle.is_schur()) return permutohedron::facets(handle.lambda);
  return grothendieck_polytope::facets(handle.h, handle.lambda);
}

std::string points_text(const std::vector<Point>& pts) {
  std::ostringstream os;
  for (const Point& p : pts) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) os << ',';
      os << p[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string facet_text(const FacetInequality& f) {
  std::ostringstream os;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i) os << ',';
    os << f.coeffs[i];
  }
  os << ' ' << sense_str(f.sense) << ' ' << f.bound << "  [" << f.tag << ']';
  return os.str();
}

// ---------------------------------------------------------------- hstar --

json hstar_report(const PolytopeHandle& handle) {
  const HStarVector v = hstar(handle);
  json j = handle_json(handle);
  j["dim"] = v.dim;
  json arr = json::array();
  for (const Int& c : v.coeffs) arr.push_back(to_decimal(c));
  j["hstar"] = arr;
  j["palindromic"] = is_palindromic(v);
  j["unimodal"] = is_unimodal(v);
  const auto g = gorenstein_index(v);
  j["gorenstein_index"] = g ? json(*g) : json(nullptr);
  return j;
}

int run_hstar(const Selection& sel, const std::string& format) {
  const PolytopeHandle handle = sel.handle();
  if (format == "json") {
    std::cout << hstar_report(handle).dump() << '\n';
  } else {
    std::cout << hstar(handle).str() << '\n';
  }
  return 0;
}

// ------------------------------------------------- points/vertices/facets --

int run_points(const Selection& sel, const std::string& format,
               bool vertices_only) {
  const PolytopeHandle handle = sel.handle();
  std::vector<Point> pts;
  if (vertices_only) {
    pts = handle.is_schur()
              ? permutohedron::vertices(handle.lambda)
              : grothendieck_polytope::vertices(handle.h, handle.lambda);
  } else {
    pts = guarded_points(handle);
  }
  if (format == "json") {
    json j = handle_json(handle);
    j[vertices_only ? "vertices" : "points"] = to_json(pts);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << points_text(pts);
  }
  return 0;
}

int run_facets(const Selection& sel, const std::string& format) {
  const PolytopeHandle handle = sel.handle();
  std::vector<FacetInequality> fs = facets_of(handle);
  if (format == "json") {
    json arr = json::array();
    for (const auto& f : fs) arr.push_back(to_json(f));
    if (handle.is_schur()) {
      arr.push_back(to_json(permutohedron::span_equality(handle.lambda)));
    }
    json j = handle_json(handle);
    j["facets"] = arr;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& f : fs) std::cout << facet_text(f) << '\n';
    if (handle.is_schur()) {
      std::cout << facet_text(permutohedron::span_equality(handle.lambda))
                << '\n';
    }
  }
  return 0;
}

// ----------------------------------------------- reflexive / gorenstein --

json reflexive_geometric_json(const ReflexivityReport& rep) {
  json j;
  j["verdict"] = verdict_str(rep.verdict);
  j["interior_points"] = to_json(rep.interior_points);
  json dists = json::array();
  for (const auto& [tag, d] : rep.facet_distances) {
    dists.push_back({{"facet", tag}, {"distance", d}});
  }
  j["facet_distances"] = dists;
  return j;
}

int run_reflexive(const Selection& sel, const std::string& method,
                  const std::string& format) {
  const PolytopeHandle handle = sel.handle();
  std::optional<Verdict> geometric;
  ReflexivityReport report;
  if (method == "geometric" || method == "both") {
    report = is_reflexive_geometric(handle);
    geometric = report.verdict;
  }
  std::optional<Verdict> classified;
  std::string form;
  if (method == "classifier" || method == "both") {
    try {
      std::optional<std::string> matched =
          handle.is_schur()
              ? schur_reflexive_form(handle.lambda)
              : grothendieck_reflexive_form(handle.h, handle.lambda);
      classified = matched ? Verdict::Yes : Verdict::No;
      if (matched) form = *matched;
    } catch (const degenerate_error&) {
      classified = Verdict::Degenerate;
    }
  }

  if (format == "json") {
    json j = handle_json(handle);
    if (geometric) j["geometric"] = reflexive_geometric_json(report);
    if (classified) {
      j["classifier"] = {{"verdict", verdict_str(*classified)},
                         {"form", form}};
    }
    std::cout << j.dump() << '\n';
  } else {
    if (geometric) {
      std::cout << "geometric: " << verdict_str(*geometric) << '\n';
      if (report.interior_points.size() == 1) {
        std::cout << "interior point: "
                  << points_text(report.interior_points);
        for (const auto& [tag, d] : report.facet_distances) {
          std::cout << "  distance " << d << "  [" << tag << "]\n";
        }
      } else {
        std::cout << "interior points: " << report.interior_points.size()
                  << '\n';
      }
    }
    if (classified) {
      std::cout << "classifier: " << verdict_str(*classified);
      if (!form.empty()) std::cout << "  form " << form;
      std::cout << '\n';
    }
  }
  if (geometric && classified && *geometric != *classified) {
    std::cerr << "error: geometric and classifier verdicts disagree\n";
    return 2;
  }
  return 0;
}

int run_gorenstein(const Selection& sel, const std::string& method,
                   const std::string& format) {
  const PolytopeHandle handle = sel.handle();
  if (!handle.is_schur() && method != "geometric") {
    throw validation_error(
        "no closed-form gorenstein classifier exists for grothendieck "
        "handles; use --method geometric");
  }
  std::optional<bool> geometric;
  std::optional<int> index;
  HStarVector v;
  if (method == "geometric" || method == "both") {
    v = hstar(handle);
    index = gorenstein_index(v);
    geometric = index.has_value();
  }
  std::optional<bool> classified;
  std::string form;
  if (method == "classifier" || method == "both") {
    const auto matched = schur_gorenstein_form(handle.lambda);
    classified = matched.has_value();
    if (matched) form = *matched;
  }

  if (format == "json") {
    json j = handle_json(handle);
    if (geometric) {
      j["geometric"] = {{"verdict", *geometric},
                        {"gorenstein_index", index ? json(*index) : json(nullptr)},
                        {"hstar", hstar_report(handle)["hstar"]}};
    }
    if (classified) {
      j["classifier"] = {{"verdict", *classified}, {"form", form}};
    }
    std::cout << j.dump() << '\n';
  } else {
    if (geometric) {
      std::cout << "geometric: " << (*geometric ? "true" : "false");
      if (index) std::cout << "  index " << *index;
      std::cout << "  h* " << v.str() << '\n';
    }
    if (classified) {
      std::cout << "classifier: " << (*classified ? "true" : "false");
      if (!form.empty()) std::cout << "  form " << form;
      std::cout << '\n';
    }
  }
  if (geometric && classified && *geometric != *classified) {
    std::cerr << "error: geometric and classifier verdicts disagree\n";
    return 2;
  }
  return 0;
}

// ------------------------------------------------------------------ idp --

int run_idp(const Selection& sel, int tmax, const std::string& format) {
  const PolytopeHandle handle = sel.handle();
  const auto brute = idp_brute(handle, tmax, point_cap());
  if (!brute.ok) {
    std::cerr << "error: IDP counterexample at t=" << brute.t << ": "
              << points_text({brute.counterexample});
    return 2;
  }
  json certs = json::array();
  long long checked = 0;
  for (int t = 2; t <= tmax; ++t) {
    std::vector<Point> pts;
    if (handle.is_schur()) {
      pts = permutohedron::lattice_points(handle.lambda.dilated(t));
    } else {
      const auto [ht, lt] =
          grothendieck_polytope::dilate(handle.h, handle.lambda, t);
      pts = grothendieck_polytope::lattice_points(ht, lt);
    }
    for (const Point& p : pts) {
      const auto parts =
          handle.is_schur()
              ? decompose_schur(handle.lambda, t, p)
              : decompose_grothendieck(handle.h, handle.lambda, t, p);
      ++checked;
      if (format == "json") {
        certs.push_back(
            {{"t", t}, {"point", p}, {"parts", to_json(parts)}});
      }
    }
  }
  if (format == "json") {
    json j = handle_json(handle);
    j["tmax"] = tmax;
    j["idp"] = true;
    j["certificates"] = certs;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "idp: true (brute t<=" << tmax << "; " << checked
              << " constructive certificates validated)\n";
  }
  return 0;
}

// ------------------------------------------------------------------ snp --

int run_snp(const Selection& sel, const std::string& format) {
  const PolytopeHandle handle = sel.handle();
  guard_count(handle.is_schur()
                  ? permutohedron::count_lattice_points(handle.lambda)
                  : grothendieck_polytope::count_lattice_points(handle.h,
                                                                handle.lambda),
              handle.str());
  const MonomialMap poly =
      handle.is_schur() ? schur_expansion(handle.lambda)
                        : grothendieck_expansion(handle.h, handle.lambda);
  const auto pts = guarded_points(handle);
  auto member = [&](const std::vector<int>& p) {
    return handle.is_schur()
               ? permutohedron::contains(handle.lambda, p)
               : grothendieck_polytope::contains(handle.h, handle.lambda, p);
  };
  const bool ok = snp_check(poly, member, pts);
  if (format == "json") {
    json j = handle_json(handle);
    j["snp"] = ok;
    j["support_size"] = poly.size();
    j["lattice_points"] = pts.size();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "snp: " << (ok ? "true" : "false") << " (support "
              << poly.size() << ", lattice points " << pts.size() << ")\n";
  }
  return ok ? 0 : 2;
}

// -------------------------------------------------------------- formula --

int run_formula(const std::string& family, int n, const std::string& format) {
  HStarVector v;
  if (family == "single-row") {
    v = hstar_single_row(n);
  } else if (family == "near-hook") {
    v = hstar_near_hook(n);
  } else if (family == "two-row") {
    v = hstar_two_row_family(n);
  } else {
    throw validation_error("unknown --family '" + family + "'");
  }
  if (format == "json") {
    json j = to_json(v);
    j["family"] = family;
    j["n"] = n;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << v.str() << '\n';
  }
  return 0;
}

// --------------------------------------------------------------- tables --

Partition table2_shape(int m) {
  std::vector<int> parts;
  if (m % 2 == 1) {
    parts.assign(static_cast<size_t>((m - 1) / 2), 2);
  } else {
    parts.assign(static_cast<size_t>(m / 2 - 1), 2);
    parts.push_back(1);
  }
  return Partition::make(parts, m);
}

Partition table1_shape(int m) {
  return Partition::make(std::vector<int>(static_cast<size_t>(m - 1), m + 1),
                         m);
}

struct TableRow {
  std::string label;  // first column: m (tables 1,2) or lambda digits (3)
  int bound_key;      // m or n, used by --max-row
  std::string line;   // full CSV line
};

std::vector<TableRow> generate_table(int which, int max_row) {
  std::vector<TableRow> rows;
  auto add = [&rows](std::string label, int key, int hmin,
                     const HStarVector& v) {
    TableRow row;
    row.label = label;
    row.bound_key = key;
    row.line = label + "," + std::to_string(hmin) + "," + v.str();
    rows.push_back(std::move(row));
  };
  if (which == 1) {
    for (int m = 3; m <= std::min(max_row, 8); ++m) {
      const auto v = hstar(PolytopeHandle::grothendieck(2, table1_shape(m)));
      if (!(v == hstar_single_row(m + 1))) {
        throw consistency_error(
            "table 1 row m=" + std::to_string(m) +
            " disagrees with the single-row closed form at n=m+1");
      }
      add(std::to_string(m), m, 2, v);
    }
  } else if (which == 2) {
    for (int m = 3; m <= std::min(max_row, 9); ++m) {
      if (m == 3) {
        add("3", 3, 1, hstar(PolytopeHandle::grothendieck(1, table2_shape(3))));
        add("3", 3, 2, hstar(PolytopeHandle::grothendieck(2, table2_shape(3))));
      } else {
        add(std::to_string(m), m, 1,
            hstar(PolytopeHandle::grothendieck(1, table2_shape(m))));
      }
    }
  } else if (which == 3) {
    const std::vector<std::pair<std::string, int>> labels = {
        {"21", 3},      {"3", 3},
        {"211", 4},     {"22", 4},     {"4", 4},
        {"2111", 5},    {"221", 5},    {"5", 5},
        {"21111", 6},   {"222", 6},    {"6", 6},
        {"211111", 7},  {"2221", 7},
        {"2111111", 8}, {"2222", 8},
        {"22221", 9}};
    for (const auto& [label, n] : labels) {
      if (n > max_row) continue;
      std::vector<int> parts;
      for (char c : label) parts.push_back(c - '0');
      const Partition lam = Partition::make(parts, n);
      TableRow row;
      row.label = label;
      row.bound_key = n;
      row.line = label + "," + std::to_string(n) + "," +
                 hstar(PolytopeHandle::schur(lam)).str();
      rows.push_back(std::move(row));
    }
  } else {
    throw validation_error("--which must be 1, 2 or 3");
  }
  return rows;
}

fs::path locate_golden(int which, const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  const std::string name = "table" + std::to_string(which) + ".csv";
  std::vector<fs::path> candidates;
  if (const char* env = std::getenv("NEWTON_EHRHART_DATA")) {
    candidates.push_back(fs::path(env) / name);
  }
  candidates.push_back(fs::path("data") / name);
  candidates.push_back(fs::path("..") / "data" / name);
  for (const auto& c : candidates) {
    if (fs::exists(c)) return c;
  }
  throw validation_error("cannot locate golden file " + name +
                         "; pass --golden or set NEWTON_EHRHART_DATA");
}

int run_tables(int which, int max_row, const std::string& golden_path,
               bool no_diff, bool stability_check) {
  const auto rows = generate_table(which, max_row);
  for (const auto& row : rows) std::cout << row.line << '\n';

  int rc = 0;
  if (!no_diff) {
    std::ifstream in(locate_golden(which, golden_path));
    std::vector<std::string> golden;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) golden.push_back(line);
    }
    size_t gi = 0;
    for (const auto& row : rows) {
      if (gi >= golden.size()) {
        std::cerr << "diff: golden file is missing a row for " << row.label
                  << '\n';
        rc = 2;
        break;
      }
      if (row.line != golden[gi]) {
        std::cerr << "diff: computed " << row.line << "\n      golden   "
                  << golden[gi] << '\n';
        rc = 2;
      }
      ++gi;
    }
    if (rc == 0) std::cerr << "golden diff: ok (" << rows.size() << " rows)\n";
  }

  if (stability_check) {
    // The h >= 2 (table 1) and h >= 1 (table 2, m >= 4) rows use polytopes
    // that have stabilized in h; verify the lattice-point sets agree for
    // the next h at desk scale.
    auto points_set = [](int h, const Partition& lam) {
      auto pts = grothendieck_polytope::lattice_points(h, lam);
      return std::set<Point>(pts.begin(), pts.end());
    };
    const int cap = std::min(max_row, which == 1 ? 8 : 9);
    for (int m = 3; m <= cap; ++m) {
      const Partition lam = which == 1 ? table1_shape(m) : table2_shape(m);
      const int base_h = (which == 1 || m == 3) ? 2 : 1;
      guard_count(grothendieck_polytope::count_lattice_points(base_h, lam),
                  "stability check at m=" + std::to_string(m));
      if (points_set(base_h, lam) != points_set(base_h + 1, lam)) {
        std::cerr << "stability check failed at m=" << m << '\n';
        return 2;
      }
    }
    std::cerr << "stability check: ok\n";
  }
  return rc;
}

// ---------------------------------------------------------------- sweep --

// Partitions of every n <= max_n with at most m parts, zero-padded.
std::vector<Partition> partitions_up_to(int max_n, int m) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      std::vector<int> padded = parts;
      padded.resize(static_cast<size_t>(m), 0);
      out.push_back(Partition::unchecked(padded));
      return;
    }
    if (static_cast<int>(parts.size()) == m) return;
    for (int v = std::min(cap, remaining); v >= 1; --v) {
      parts.push_back(v);
      rec(remaining - v, v);
      parts.pop_back();
    }
  };
  for (int n = 0; n <= max_n; ++n) rec(n, n);
  return out;
}

int run_sweep(const std::string& family, int max_n, int max_m, int max_h,
              int jobs, const std::string& format) {
  struct Task {
    PolytopeHandle handle;
    bool gorenstein_too = false;
  };
  std::vector<Task> tasks;
  if (family == "schur" || family == "all") {
    for (int m = 2; m <= max_m; ++m) {
      for (const Partition& lam : partitions_up_to(max_n, m)) {
        if (lam.trivial_orbit()) continue;
        tasks.push_back({PolytopeHandle::schur(lam), true});
      }
    }
  }
  if (family == "grothendieck" || family == "all") {
    for (int m = 2; m <= max_m; ++m) {
      for (const Partition& lam : partitions_up_to(max_n, m)) {
        if (!lam.reduced() || lam.trivial_orbit()) continue;
        for (int h = 1; h <= max_h; ++h) {
          tasks.push_back({PolytopeHandle::grothendieck(h, lam), false});
        }
      }
    }
  }

  std::vector<std::string> failures(tasks.size());
  auto worker = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < tasks.size(); i += step) {
      const auto& task = tasks[i];
      std::ostringstream bad;
      try {
        const auto geo = is_reflexive_geometric(task.handle);
        const bool classified =
            task.handle.is_schur()
                ? schur_reflexive_classifier(task.handle.lambda)
                : grothendieck_reflexive_classifier(task.handle.h,
                                                    task.handle.lambda);
        if ((geo.verdict == Verdict::Yes) != classified) {
          bad << task.handle.str() << ": geometric "
              << verdict_str(geo.verdict) << " vs classifier "
              << (classified ? "true" : "false");
        }
        if (task.gorenstein_too) {
          const bool gclass = schur_gorenstein_classifier(task.handle.lambda);
          const bool gindex =
              gorenstein_index(hstar(task.handle)).has_value();
          if (gclass != gindex) {
            bad << task.handle.str() << ": gorenstein classifier "
                << (gclass ? "true" : "false") << " vs h* index "
                << (gindex ? "present" : "absent");
          }
        }
      } catch (const std::exception& e) {
        bad << task.handle.str() << ": " << e.what();
      }
      failures[i] = bad.str();
    }
  };

  const int nworkers = std::max(1, jobs);
  if (nworkers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w) {
      pool.emplace_back(worker, static_cast<size_t>(w),
                        static_cast<size_t>(nworkers));
    }
    for (auto& th : pool) th.join();
  }

  long long bad_count = 0;
  for (const auto& f : failures) {
    if (!f.empty()) {
      ++bad_count;
      std::cerr << "disagreement: " << f << '\n';
    }
  }
  if (format == "json") {
    json j;
    j["family"] = family;
    j["handles"] = tasks.size();
    j["disagreements"] = bad_count;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "sweep: " << tasks.size() << " handles, " << bad_count
              << " disagreements\n";
  }
  return bad_count == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polytopes of Schur and inflated symmetric Grothendieck "
               "polynomials: lattice points, facets, Ehrhart h*-vectors, "
               "reflexivity and IDP"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  Selection sel;
  std::string method = "both";
  std::string family = "single-row";
  std::string golden;
  int n = 0;
  int tmax = 3;
  int which = 0;
  int max_row = 9;
  int max_n = 8, max_m = 5, max_h = 3, jobs = 1;
  bool no_diff = false, stability = false;

  auto* c_hstar = app.add_subcommand("hstar", "exact h*-vector");
  add_format(c_hstar);
  add_selection(c_hstar, sel);

  auto* c_points = app.add_subcommand("points", "lattice points");
  add_format(c_points);
  add_selection(c_points, sel);
  auto* c_vertices = app.add_subcommand("vertices", "vertex set");
  add_format(c_vertices);
  add_selection(c_vertices, sel);
  auto* c_facets = app.add_subcommand("facets", "facet inequalities");
  add_format(c_facets);
  add_selection(c_facets, sel);

  auto* c_refl = app.add_subcommand("reflexive", "reflexivity verdict");
  add_format(c_refl);
  add_selection(c_refl, sel);
  c_refl->add_option("--method", method, "geometric|classifier|both")
      ->check(CLI::IsMember({"geometric", "classifier", "both"}));

  auto* c_gor = app.add_subcommand("gorenstein", "Gorenstein verdict");
  add_format(c_gor);
  add_selection(c_gor, sel);
  c_gor->add_option("--method", method, "geometric|classifier|both")
      ->check(CLI::IsMember({"geometric", "classifier", "both"}));

  auto* c_idp = app.add_subcommand("idp", "integer decomposition property");
  add_format(c_idp);
  add_selection(c_idp, sel);
  c_idp->add_option("--tmax", tmax, "largest dilate to check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* c_snp = app.add_subcommand("snp", "saturated Newton polytope check");
  add_format(c_snp);
  add_selection(c_snp, sel);

  auto* c_formula = app.add_subcommand("formula", "closed-form h* families");
  add_format(c_formula);
  c_formula->add_option("--family", family, "single-row|near-hook|two-row")
      ->required()
      ->check(CLI::IsMember({"single-row", "near-hook", "two-row"}));
  c_formula->add_option("--n", n, "family parameter")->required();

  auto* c_tables = app.add_subcommand("tables", "reproduce appendix tables");
  add_format(c_tables);
  c_tables->add_option("--which", which, "1|2|3")->required();
  c_tables->add_option("--max-row", max_row, "largest m (tables 1,2) or n (3)")
      ->capture_default_str();
  c_tables->add_option("--golden", golden, "golden CSV to diff against");
  c_tables->add_flag("--no-diff", no_diff, "skip the golden comparison");
  c_tables->add_flag("--stability-check", stability,
                     "verify the polytopes have stabilized in h");

  auto* c_sweep =
      app.add_subcommand("sweep", "classifier vs geometry equivalence");
  add_format(c_sweep);
  c_sweep->add_option("--family", family, "schur|grothendieck|all")
      ->check(CLI::IsMember({"schur", "grothendieck", "all"}));
  c_sweep->add_option("--max-n", max_n, "largest |lambda|")
      ->capture_default_str();
  c_sweep->add_option("--max-m", max_m, "largest m")->capture_default_str();
  c_sweep->add_option("--max-h", max_h, "largest h (grothendieck)")
      ->capture_default_str();
  c_sweep->add_option("--jobs", jobs, "worker thread cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  family = "all";  // sweep default; formula requires it explicitly

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_hstar->parsed()) return run_hstar(sel, format);
    if (c_points->parsed()) return run_points(sel, format, false);
    if (c_vertices->parsed()) return run_points(sel, format, true);
    if (c_facets->parsed()) return run_facets(sel, format);
    if (c_refl->parsed()) return run_reflexive(sel, method, format);
    if (c_gor->parsed()) return run_gorenstein(sel, method, format);
    if (c_idp->parsed()) return run_idp(sel, tmax, format);
    if (c_snp->parsed()) return run_snp(sel, format);
    if (c_formula->parsed()) return run_formula(family, n, format);
    if (c_tables->parsed()) {
      return run_tables(which, max_row, golden, no_diff, stability);
    }
    if (c_sweep->parsed()) {
      return run_sweep(family, max_n, max_m, max_h, jobs, format);
    }
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const degenerate_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const consistency_error& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
