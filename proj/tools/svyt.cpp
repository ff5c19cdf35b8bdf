// Command-line front end: reproduce the reference tables, generate and map
// objects, run the bijection verifiers and the conjecture sweeps.
//
// Exit status: 0 success / all checks agree, 1 usage or runtime error,
// 2 a verifier or conjecture found a disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "svyt/bijections.hpp"
#include "svyt/conjectures.hpp"
#include "svyt/counting.hpp"
#include "svyt/prograph.hpp"
#include "svyt/tableau.hpp"

namespace {

using namespace svyt;

struct Range {
  int lo = 1;
  int hi = 1;
};

Range parse_range(const std::string& text) {
  Range r;
  size_t dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range " + text);
  return r;
}

std::string slurp(const std::string& path) {
  std::ostringstream out;
  if (path.empty() || path == "-") {
    out << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    out << in.rdbuf();
  }
  std::string s = out.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

void write_report(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

std::string cache_path_default() {
  const char* env = std::getenv("SVYT_CACHE");
  return env ? env : "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration toolkit for set-valued Young tableaux and "
               "k-ary product-coproduct prographs"};
  app.require_subcommand(1);

  std::string family, shape_text, density_text;
  std::string k_range = "1..1", n_range = "1..1";
  std::string format = "text";
  long long budget = 24;
  std::string cache_path = cache_path_default();
  int jobs = 1;
  std::string report_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "csv|json|text|dot");
    cmd->add_option("--budget-entries", budget, "entry cap for brute force");
    cmd->add_option("--cache", cache_path, "count cache file (or $SVYT_CACHE)");
    cmd->add_option("--jobs", jobs, "parallelism for grid sweeps");
  };

  // count
  auto* count = app.add_subcommand("count", "count tableaux families");
  count->add_option("--family", family, "1k1|k11|xi1|xi2");
  count->add_option("--shape", shape_text, "explicit shape a,b,c,...");
  count->add_option("--density", density_text, "explicit density r1,r2,...");
  count->add_option("--k", k_range, "k range A..B");
  count->add_option("--n", n_range, "n range A..B");
  add_common(count);

  // generate
  auto* gen = app.add_subcommand("generate", "stream objects");
  std::string what;
  int gk = 2, gn = 1, gm = -1, gx = 1;
  long long limit = -1;
  gen->add_option("kind", what, "prographs|svt")->required();
  gen->add_option("--k", gk, "arity");
  gen->add_option("--n", gn, "coproducts");
  gen->add_option("--m", gm, "products (default n)");
  gen->add_option("--x", gx, "input strands");
  gen->add_option("--shape", shape_text, "tableau shape");
  gen->add_option("--density", density_text, "tableau density");
  gen->add_option("--limit", limit, "stop after this many objects");
  add_common(gen);

  // map
  auto* map_cmd = app.add_subcommand("map", "apply a bijection or involution");
  std::string op, in_path;
  int ux = 1, uy = 1;
  map_cmd->add_option("op", op,
                      "phi|phi-inverse|psi|tau|phi-k-tree|rotate|"
                      "schutzenberger|skew-schutzenberger|justify|unjustify|"
                      "left-weighted-justify")
      ->required();
  map_cmd->add_option("--in", in_path, "input file (default stdin)");
  map_cmd->add_option("--x", ux, "x for unjustify");
  map_cmd->add_option("--y", uy, "y for unjustify");
  add_common(map_cmd);

  // verify
  auto* verify = app.add_subcommand("verify", "run bijection verifier suites");
  std::string suite;
  std::string vx_range = "1..1", m_range;
  verify->add_option("suite", suite,
                     "roundtrip|cardinality|schutzenberger|skew|tau-psi")
      ->required();
  verify->add_option("--k", k_range, "k range");
  verify->add_option("--n", n_range, "n range");
  verify->add_option("--x", vx_range, "x range");
  verify->add_option("--m", m_range, "m range (default n)");
  verify->add_option("--report", report_path, "write JSON report here");
  add_common(verify);

  // interpolate
  auto* interp = app.add_subcommand(
      "interpolate", "fit the count of a three-row shape as a polynomial in k");
  interp->add_option("--shape", shape_text, "shape a,b,c")->required();
  interp->add_option("--family", family, "1k1 (default) or k11");
  add_common(interp);

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "run conjecture sweeps");
  std::string claim;
  int c_kmax = 4, c_nmax = 3, c_nmmax = 4;
  conj->add_option("claim", claim, "c6|walks|lattice3d|motzkin")->required();
  conj->add_option("--k-max", c_kmax, "largest k");
  conj->add_option("--n-max", c_nmax, "largest n");
  conj->add_option("--nm-max", c_nmmax, "largest n+m (c6)");
  conj->add_option("--report", report_path, "write JSON report here");
  add_common(conj);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!cache_path.empty()) global_count_cache().load_file(cache_path);
    auto save_cache = [&]() {
      if (!cache_path.empty()) global_count_cache().save_file(cache_path);
    };

    if (count->parsed()) {
      EnumLimits limits{budget};
      if (!shape_text.empty()) {
        Shape s = Shape::parse(shape_text);
        if (density_text.empty())
          throw std::runtime_error("--shape needs --density");
        Int v = count_explicit(s, Density::parse(density_text), limits);
        if (format == "json") {
          nlohmann::ordered_json j;
          j["shape"] = s.to_string();
          j["density"] = density_text;
          j["value"] = v.get_str();
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << v.get_str() << '\n';
        }
        save_cache();
        return 0;
      }
      TableFamily fam;
      if (family == "1k1") fam = TableFamily::OneKm1One;
      else if (family == "k11") fam = TableFamily::Km1OneOne;
      else if (family == "xi1") fam = TableFamily::Xi1;
      else if (family == "xi2") fam = TableFamily::Xi2;
      else throw std::runtime_error("unknown family: " + family);
      Range kr = parse_range(k_range), nr = parse_range(n_range);
      auto cells = table_cells(fam, kr.lo, kr.hi, nr.lo, nr.hi, limits, jobs);
      if (format == "json")
        std::cout << table_json(fam, cells).dump(2) << '\n';
      else
        std::cout << table_csv(cells);
      save_cache();
      return 0;
    }

    if (gen->parsed()) {
      long long emitted = 0;
      if (what == "prographs") {
        if (gm < 0) gm = gn;
        for_each_prograph(gk, gn, gm, gx, [&](const Prograph& g) {
          if (format == "dot")
            std::cout << to_dot(g);
          else if (format == "json") {
            nlohmann::ordered_json j;
            j["text"] = to_text(g);
            std::cout << j.dump() << '\n';
          } else {
            std::cout << to_text(g) << '\n';
          }
          return limit < 0 || ++emitted < limit;
        });
      } else if (what == "svt") {
        SkewShape s(Shape::parse(shape_text));
        Density d = Density::parse(density_text);
        EnumLimits limits{budget};
        for_each_svt(s, d, [&](const SetValuedTableau& t) {
          if (format == "json")
            std::cout << to_json(t).dump() << '\n';
          else
            std::cout << to_text(t) << '\n';
          return limit < 0 || ++emitted < limit;
        }, limits);
      } else {
        throw std::runtime_error("unknown kind: " + what);
      }
      return 0;
    }

    if (map_cmd->parsed()) {
      std::string input = slurp(in_path);
      auto emit_tableau = [&](const SetValuedTableau& t) {
        if (format == "json")
          std::cout << to_json(t).dump(2) << '\n';
        else
          std::cout << to_text(t) << '\n';
      };
      auto emit_prograph = [&](const Prograph& g) {
        if (format == "dot")
          std::cout << to_dot(g);
        else
          std::cout << to_text(g) << '\n';
      };
      if (op == "phi") emit_tableau(phi(prograph_from_text(input)));
      else if (op == "phi-k-tree") emit_tableau(phi_k_tree(prograph_from_text(input)));
      else if (op == "psi") emit_tableau(psi(prograph_from_text(input)));
      else if (op == "tau") emit_tableau(tau(prograph_from_text(input)));
      else if (op == "phi-inverse") emit_prograph(phi_inverse(tableau_from_text(input)));
      else if (op == "rotate") emit_prograph(rotate(prograph_from_text(input)));
      else if (op == "justify") emit_prograph(justify(prograph_from_text(input)));
      else if (op == "unjustify") emit_prograph(unjustify(prograph_from_text(input), ux, uy));
      else if (op == "left-weighted-justify")
        emit_prograph(left_weighted_justify(prograph_from_text(input)));
      else if (op == "schutzenberger")
        emit_tableau(schutzenberger(tableau_from_text(input)));
      else if (op == "skew-schutzenberger")
        emit_tableau(skew_schutzenberger(tableau_from_text(input)));
      else throw std::runtime_error("unknown op: " + op);
      return 0;
    }

    if (verify->parsed()) {
      Range kr = parse_range(k_range), nr = parse_range(n_range);
      Range xr = parse_range(vx_range);
      std::vector<VerifyReport> reports;
      for (int k = kr.lo; k <= kr.hi; ++k)
        for (int n = nr.lo; n <= nr.hi; ++n)
          for (int x = xr.lo; x <= xr.hi; ++x) {
            Range mr = m_range.empty() ? Range{n, n} : parse_range(m_range);
            for (int m = mr.lo; m <= mr.hi; ++m) {
              if (suite == "roundtrip") reports.push_back(verify_roundtrip(k, n));
              else if (suite == "cardinality") reports.push_back(verify_cardinality(k, n));
              else if (suite == "schutzenberger")
                reports.push_back(verify_schutzenberger_square(k, n));
              else if (suite == "skew")
                reports.push_back(verify_skew_square(k, x, n, m));
              else if (suite == "tau-psi")
                reports.push_back(verify_tau_psi(k, x, n, m));
              else throw std::runtime_error("unknown suite: " + suite);
              if (suite == "roundtrip" || suite == "cardinality" ||
                  suite == "schutzenberger")
                break;  // x/m ranges do not apply
            }
            if (suite == "roundtrip" || suite == "cardinality" ||
                suite == "schutzenberger")
              break;
          }
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      bool ok = true;
      for (const auto& r : reports) {
        j.push_back(r.to_json());
        ok = ok && r.ok();
        std::cout << r.identity << " [" << r.grid << "]: "
                  << r.cases_checked << " cases, "
                  << r.counterexamples.size() << " counterexamples\n";
      }
      write_report(report_path, j);
      return ok ? 0 : 2;
    }

    if (interp->parsed()) {
      Shape s = Shape::parse(shape_text);
      if (s.rows() > 3) throw std::runtime_error("shape must have at most 3 rows");
      DensityFamily fam = family == "k11" ? DensityFamily::Km1OneOne
                                          : DensityFamily::OneKm1One;
      auto poly = interpolate_polynomial(s.part(0), s.part(1), s.part(2), fam);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["shape"] = s.to_string();
        j["degree"] = poly.degree();
        j["coefficients"] = nlohmann::ordered_json::array();
        for (const Rat& c : poly.coeffs) j["coefficients"].push_back(c.get_str());
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << poly.to_string() << '\n';
      }
      save_cache();
      return 0;
    }

    if (conj->parsed()) {
      ConjectureReport report;
      if (claim == "c6") report = conjecture6_sweep(c_kmax, c_nmmax, jobs);
      else if (claim == "walks") report = walks_sweep(c_kmax, c_nmax, jobs);
      else if (claim == "lattice3d") report = lattice3d_sweep(c_kmax, c_nmax, jobs);
      else if (claim == "motzkin") report = motzkin_sweep(c_kmax, c_nmax, jobs);
      else throw std::runtime_error("unknown claim: " + claim);
      if (format == "json")
        std::cout << report.to_json().dump(2) << '\n';
      else
        std::cout << report.table_text();
      write_report(report_path, report.to_json());
      save_cache();
      return report.all_agree() ? 0 : 2;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
