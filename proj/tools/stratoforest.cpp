#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stratoforest/homotopy.hpp"
#include "stratoforest/nerve.hpp"
#include "stratoforest/poset.hpp"
#include "stratoforest/render.hpp"
#include "stratoforest/superimpose.hpp"
#include "stratoforest/tracer.hpp"
#include "stratoforest/whitehead.hpp"

using namespace stratoforest;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

EnumerationLimits limits() {
  EnumerationLimits lim;
  if (const char* b = std::getenv("STRATOFOREST_BUDGET")) lim.budget = std::stoull(b);
  return lim;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Signature read_signature(const std::string& path) { return validate(decode(slurp(path))); }

GenericSignature read_generic(const std::string& path) {
  auto g = to_generic(read_signature(path));
  if (!g) throw std::invalid_argument(path + " is not a generic signature; superimposition takes generic inputs only");
  return *g;
}

std::vector<Signature> signatures_at(int n, int codim) {
  if (codim == 0) return enumerate_generic_signatures(n, limits());
  std::vector<Signature> out;
  for (auto& s : enumerate_all(n, codim, limits()))
    if (codimension(s) == codim) out.push_back(std::move(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratification of the space of complex polynomials by signatures"};
  app.require_subcommand(1);
  bool json_errors = false;
  std::uint64_t seed = kDefaultSeed;
  app.add_flag("--json-errors", json_errors, "Report errors as JSON on stderr");
  app.add_option("--seed", seed, "Seed for every random choice");

  int n = 2, codim = 0;
  bool count = false, dot = false, homology_flag = false, smoothings = false;
  std::string svg, json_out, coeffs, poly_file, cell;
  std::vector<std::string> files;
  int samples = 20;

  auto* enumerate = app.add_subcommand("enumerate", "List signatures of one codimension");
  enumerate->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 7));
  enumerate->add_option("--codim", codim, "Codimension")->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--count", count, "Print only the number of signatures");

  auto* orbits = app.add_subcommand("orbits", "Rotation orbits of signatures of one codimension");
  orbits->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 7));
  orbits->add_option("--codim", codim, "Codimension")->check(CLI::NonNegativeNumber);

  auto* moves = app.add_subcommand("moves", "Whitehead moves available at a signature");
  moves->add_option("signature", files, "Signature JSON file")->required()->expected(1);
  moves->add_flag("--smoothings", smoothings, "List smoothing moves instead of contractions");

  auto* poset = app.add_subcommand("poset", "Incidence poset");
  poset->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 7));
  poset->add_option("--codim", codim, "Largest codimension (default: all)");
  poset->add_flag("--dot", dot, "Emit the Hasse diagram as DOT");

  auto* glb = app.add_subcommand("glb", "Greatest lower bound of two signatures");
  glb->add_option("signatures", files, "Two signature JSON files")->required()->expected(2);

  auto* sup = app.add_subcommand("superimpose", "Superimpose generic signatures and build the canonical graph");
  sup->add_option("signatures", files, "Generic signature JSON files")->required()->expected(1, 64);
  sup->add_option("--svg", svg, "Write the arrangement as SVG");
  sup->add_option("--json", json_out, "Write the arrangement as JSON");

  auto* tr = app.add_subcommand("trace", "Signature of a concrete polynomial");
  auto* copt = tr->add_option("--coeffs", coeffs, "Monic coefficients, highest degree first");
  auto* popt = tr->add_option("--poly", poly_file, "Polynomial JSON file");
  copt->excludes(popt);
  tr->add_option("--svg", svg, "Write the traced drawing as SVG");

  auto* survey = app.add_subcommand("survey", "Signatures over generic cells of critical values (CSV)");
  survey->add_option("--n", n, "Degree")->required()->check(CLI::Range(2, 6));
  survey->add_option("--cell", cell, "One cell such as AxC (default: every generic cell)");
  survey->add_option("--samples", samples, "Samples per cell")->check(CLI::PositiveNumber);

  auto* nerve = app.add_subcommand("nerve", "Nerve of the cover by maximal stars");
  nerve->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 7));
  nerve->add_flag("--homology", homology_flag, "Print integral homology");
  nerve->add_option("--json", json_out, "Write the nerve as JSON");

  auto* render = app.add_subcommand("render", "Draw a signature");
  render->add_option("signature", files, "Signature JSON file")->required()->expected(1);
  render->add_option("--svg", svg, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) {
      auto sigs = signatures_at(n, codim);
      if (count)
        std::cout << sigs.size() << "\n";
      else
        for (const auto& s : sigs) std::cout << s.encode() << "\n";
    } else if (*orbits) {
      auto os = orbit_decompose(signatures_at(n, codim));
      std::cout << os.size() << " orbits\n";
      for (const auto& o : os) std::cout << o.size << " " << o.representative.encode() << "\n";
    } else if (*moves) {
      Signature s = read_signature(files[0]);
      auto list = smoothings ? enumerate_smoothings(s) : enumerate_contractions(s);
      for (const auto& [mv, t] : list)
        std::cout << move_to_json(mv) << " -> codim " << codimension(t) << " " << t.encode() << "\n";
    } else if (*poset) {
      int top = poset->count("--codim") ? codim : 2 * (n - 1);
      auto p = build_poset(n, top, limits());
      std::cout << (dot ? poset_to_dot(p) : poset_to_json(p)) << "\n";
    } else if (*glb) {
      Signature a = read_signature(files[0]), b = read_signature(files[1]);
      auto p = build_poset(a.n(), 2 * (a.n() - 1), limits());
      auto r = greatest_lower_bound(p, p.index(a), p.index(b));
      std::cout << (r ? p.nodes[*r].encode() : std::string("none")) << "\n";
    } else if (*sup) {
      std::vector<GenericSignature> gs;
      for (const auto& f : files) gs.push_back(read_generic(f));
      Arrangement arr = superimpose(gs, seed);
      CanonicalGraph g = canonical_graph(arr);
      bool ok = compatible(arr);
      std::cout << "compatible: " << (ok ? "yes" : "no") << "\n";
      auto s = ok ? graph_signature(g) : std::nullopt;
      std::cout << "common incident: " << (s ? s->encode() : std::string("none")) << "\n";
      if (!g.failure.empty()) std::cout << "graph: " << g.failure << "\n";
      if (!svg.empty()) spit(svg, arrangement_svg(arr, &g));
      if (!json_out.empty()) spit(json_out, arrangement_json(arr));
    } else if (*tr) {
      if (coeffs.empty() && poly_file.empty()) throw CLI::RequiredError("--coeffs or --poly");
      Polynomial p = Polynomial::parse(coeffs.empty() ? slurp(poly_file) : coeffs);
      TraceResult r = trace(p);
      std::cout << r.signature.encode() << "\n";
      std::cout << "codim " << codimension(r.signature) << " sigma " << sigma_sequence(critical_values(p)).to_string()
                << "\n";
      if (!svg.empty()) spit(svg, drawing_svg(r));
    } else if (*survey) {
      FiberBase base = collect_sheets(n, seed);
      std::vector<SigmaSequence> cells;
      if (cell.empty())
        cells = generic_cells(n);
      else
        cells.push_back(parse_cell(n, cell));
      std::vector<SurveyResult> results;
      for (std::size_t i = 0; i < cells.size(); ++i) results.push_back(fiber_survey(base, cells[i], samples, seed + i));
      std::cout << survey_csv(results);
    } else if (*nerve) {
      auto p = build_poset(n, 2 * (n - 1), limits());
      auto c = build_nerve(build_cover(p));
      if (homology_flag) {
        auto h = homology(c);
        for (std::size_t k = 0; k < h.size(); ++k) std::cout << "H" << k << "=" << h[k].to_string() << "\n";
      } else {
        std::cout << "vertices " << c.vertex_count << ", dimension " << c.dimension() << "\n";
      }
      if (!json_out.empty()) spit(json_out, nerve_to_json(c));
    } else if (*render) {
      spit(svg, signature_svg(read_signature(files[0])));
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (json_errors) {
      nlohmann::json j{{"error", e.what()}};
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  }
  return 0;
}
