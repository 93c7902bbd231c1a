// hermspec command line front end.
//
// Exit codes: 0 success, 1 a requested check failed (method disagreement,
// failed verification run, unrealizable sign pattern), 2 usage or input
// parse errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermspec/hermspec.hpp"
#include "hermspec/json_io.hpp"

namespace {

hermspec::MixedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hermspec::Error("cannot open '" + path + "'");
  std::ostringstream body;
  body << in.rdbuf();
  return hermspec::parse_mixed_graph(body.str());
}

// Accepts "2", "-3", "5/2" and plain decimals like "2.5".
hermspec::BigRat parse_rational(const std::string& text) {
  using hermspec::BigInt;
  using hermspec::BigRat;
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw hermspec::Error("zero denominator in '" + text + "'");
      return BigRat(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      BigInt num(text.substr(0, dot) + text.substr(dot + 1));
      BigInt den = 1;
      for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
      return BigRat(num, den);
    }
    return BigRat(BigInt(text));
  } catch (const hermspec::Error&) {
    throw;
  } catch (const std::exception&) {
    throw hermspec::Error("cannot parse '" + text + "' as a rational number");
  }
}

hermspec::SignClass sign_class_from_flag(const std::string& s) {
  if (s == "plus") return hermspec::SignClass::Positive;
  if (s == "minus") return hermspec::SignClass::Negative;
  return hermspec::SignClass::Imaginary;  // "star"
}

void print_report_text(const hermspec::Report& rep, std::ostream& out) {
  for (const auto& c : rep.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.check;
    if (!c.instance.empty()) out << " | " << c.instance;
    out << "\n";
    if (!c.pass || c.expected == "informational") {
      out << "       expected: " << c.expected << "\n";
      out << "       observed: " << c.observed << "\n";
    }
  }
  out << "summary: " << rep.passed() << "/" << rep.total() << " checks passed";
  if (rep.failed() > 0) out << ", " << rep.failed() << " FAILED";
  out << " (" << rep.elapsed_seconds << "s)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian spectra and bounded-radius classification of mixed graphs"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file;
  bool as_json = false;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and spectral radius");
  spectrum->add_option("file", file, "mixed graph file (.mg)")->required();
  spectrum->add_flag("--json", as_json, "emit JSON");
  spectrum->callback([&] {
    auto D = load_graph(file);
    auto ev = hermspec::eigenvalues(D);
    double rho = ev.empty() ? 0.0 : std::max(std::abs(ev.front()), std::abs(ev.back()));
    if (as_json) {
      nlohmann::json j;
      j["n"] = D.num_vertices();
      j["m"] = D.num_edges();
      j["eigenvalues"] = ev;
      j["spectral_radius"] = rho;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "n = " << D.num_vertices() << ", m = " << D.num_edges() << "\n";
      std::cout << "eigenvalues (descending):\n";
      for (double x : ev) std::cout << "  " << hermspec::format_significant(x) << "\n";
      std::cout << "spectral radius = " << hermspec::format_significant(rho) << "\n";
    }
  });

  std::string method = "leverrier";
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial (exact)");
  charpoly->add_option("file", file, "mixed graph file (.mg)")->required();
  charpoly->add_option("--method", method, "sachs | leverrier | both")
      ->check(CLI::IsMember({"sachs", "leverrier", "both"}));
  charpoly->add_flag("--json", as_json, "emit JSON");
  charpoly->callback([&] {
    auto D = load_graph(file);
    hermspec::IntPolynomial p;
    if (method == "sachs") {
      p = hermspec::charpoly_sachs(D);
    } else if (method == "leverrier") {
      p = hermspec::charpoly_leverrier(D);
    } else {
      auto ps = hermspec::charpoly_sachs(D);
      auto pl = hermspec::charpoly_leverrier(D);
      if (!(ps == pl)) {
        std::cerr << "charpoly methods disagree:\n"
                  << "  sachs:     " << hermspec::to_display_string(ps, "λ") << "\n"
                  << "  leverrier: " << hermspec::to_display_string(pl, "λ") << "\n";
        rc = 1;
        return;
      }
      p = pl;
    }
    if (as_json) {
      nlohmann::json j;
      j["method"] = method;
      j["degree"] = D.num_vertices();
      j["coefficients"] = hermspec::poly_to_json(p);
      j["display"] = hermspec::to_display_string(p, "λ");
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << hermspec::to_display_string(p, "λ") << "\n";
    }
  });

  std::string bound_str = "2";
  bool eq2 = false;
  bool per_component = false;
  auto* classify = app.add_subcommand(
      "classify", "Structural verdict for spectral radius at most 2 (or exactly 2 with --eq2)");
  classify->add_option("file", file, "mixed graph file (.mg)")->required();
  classify->add_option("--exact-bound", bound_str,
                       "rational bound for the Sturm cross-check (default 2)");
  classify->add_flag("--eq2", eq2, "classify the spectral radius exactly 2 list");
  classify->add_flag("--components", per_component, "classify each connected component");
  classify->add_flag("--json", as_json, "compact single-line JSON");
  classify->callback([&] {
    auto D = load_graph(file);
    auto bound = parse_rational(bound_str);
    auto one = [&](const hermspec::MixedGraph& g) {
      auto v = eq2 ? hermspec::classify_eq2(g, false) : hermspec::classify_le2(g, false);
      if (g.num_vertices() > 0) v.crosscheck = hermspec::compare_radius(g, bound);
      return hermspec::verdict_to_json(v);
    };
    nlohmann::json out;
    if (per_component) {
      out = nlohmann::json::array();
      for (const auto& comp : hermspec::components(D))
        out.push_back(one(hermspec::induced_subgraph(D, comp)));
    } else {
      out = one(D);
    }
    std::cout << (as_json ? out.dump() : out.dump(2)) << "\n";
  });

  std::string family_spec;
  std::string signs = "none";
  auto* family = app.add_subcommand("family", "Named graph families");
  family->require_subcommand(1);
  auto* gen = family->add_subcommand("gen", "Generate one member as .mg text");
  gen->add_option("spec", family_spec, "family string, e.g. \"C6(2,0,0,2)\" or \"Y(2,3,2)\"")
      ->required();
  gen->add_option("--signs", signs,
                  "cycle signs: none (undirected) | plus | minus | star (imaginary)")
      ->check(CLI::IsMember({"none", "plus", "minus", "star"}));
  gen->callback([&] {
    auto G = hermspec::generate(hermspec::parse_family(family_spec));
    if (signs != "none") G = hermspec::orient_all_cycles(G, sign_class_from_flag(signs));
    std::cout << hermspec::serialize_mg(G);
  });

  auto* cycles = app.add_subcommand("cycles", "List cycles with their sign classes");
  cycles->add_option("file", file, "mixed graph file (.mg)")->required();
  cycles->add_flag("--json", as_json, "emit JSON");
  cycles->callback([&] {
    auto D = load_graph(file);
    auto cs = hermspec::enumerate_cycles(D);
    if (as_json) {
      auto arr = nlohmann::json::array();
      for (const auto& c : cs) {
        nlohmann::json j;
        j["vertices"] = c.verts;
        j["length"] = static_cast<int>(c.verts.size());
        j["sign"] = hermspec::cycle_sign_name(hermspec::classify_cycle(D, c));
        arr.push_back(std::move(j));
      }
      std::cout << arr.dump(2) << "\n";
    } else if (cs.empty()) {
      std::cout << "no cycles\n";
    } else {
      for (const auto& c : cs) {
        std::cout << "(";
        for (std::size_t i = 0; i < c.verts.size(); ++i)
          std::cout << (i ? " " : "") << c.verts[i];
        std::cout << ") length " << c.verts.size() << ": "
                  << hermspec::cycle_sign_name(hermspec::classify_cycle(D, c)) << "\n";
      }
    }
  });

  int max_n = 5;
  std::string json_out;
  bool all_orientations = false;
  bool include_c4 = false;
  bool include_disconnected = false;
  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  verify->add_option("--max-n", max_n, "largest vertex count to enumerate (default 5)");
  verify->add_option("--json", json_out, "write the JSON report to this path");
  verify->add_flag("--all-orientations", all_orientations,
                   "check every orientation instead of one per cycle sign vector");
  verify->add_flag("--include-c4", include_c4, "also enumerate graphs containing C4");
  verify->add_flag("--include-disconnected", include_disconnected,
                   "also enumerate disconnected graphs");
  verify->callback([&] {
    if (max_n < 1) throw hermspec::Error("--max-n must be at least 1");
    if (max_n > hermspec::enumeration_cap())
      throw hermspec::Error("--max-n " + std::to_string(max_n) + " exceeds the cap " +
                            std::to_string(hermspec::enumeration_cap()) +
                            " (HERMSPEC_MAX_N can lower, never raise, the built-in 10)");
    hermspec::EnumerationScope scope;
    scope.max_n = max_n;
    scope.c4free_only = !include_c4;
    scope.connected_only = !include_disconnected;
    scope.orientation_mode = all_orientations ? hermspec::OrientationMode::All
                                              : hermspec::OrientationMode::OnePerSignVector;
    auto rep = hermspec::run_all(scope);
    print_report_text(rep, std::cout);
    if (!json_out.empty()) {
      std::ofstream out(json_out);
      if (!out) throw hermspec::Error("cannot write '" + json_out + "'");
      out << hermspec::report_to_json(rep).dump(2) << "\n";
    }
    if (!rep.all_passed()) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hermspec::UnrealizableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hermspec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
