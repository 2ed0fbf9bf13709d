// Command-line front end: diagram export, loop certification, bounded
// search, family verification, and polynomial classification.
//
// Exit codes: 0 success, 1 ran but a verification failed, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "safzero/json_io.hpp"

using namespace safzero;

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  os << text;
  return 0;
}

// Comma-separated integer coefficients, constant term first,
// e.g. "-1,5,-6,1" for x^3-6x^2+5x-1.
ZPoly parse_poly_arg(const std::string& s) {
  std::vector<Int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.emplace_back(tok);
  if (c.empty()) throw std::invalid_argument("empty polynomial");
  return ZPoly{std::move(c)};
}

// "2..10" or a single integer
std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int k = std::stoi(s);
    return {k, k};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

int cmd_diagram(const std::string& start, const std::string& format,
                const std::string& out) {
  RauzyDiagram dia(parse_permutation(start));
  if (format == "dot") return emit(dia.to_dot(), out);
  json j;
  j["version"] = "v1";
  j["start"] = start;
  j["size"] = dia.size();
  json verts = json::array(), edges = json::array();
  for (int i = 0; i < dia.size(); ++i) {
    verts.push_back(dia.vertex(i).str());
    edges.push_back({dia.successor(i, 0), dia.successor(i, 1)});
  }
  j["vertices"] = std::move(verts);
  j["successors"] = std::move(edges);
  return emit(j.dump(2) + "\n", out);
}

int cmd_certify(const std::string& start, const std::string& word,
                bool saf_tensor, const std::string& out) {
  LoopWord loop{parse_permutation(start), parse_word(word)};
  try {
    auto c = certify(loop, saf_tensor);
    return emit(certificate_to_json(c).dump(2) + "\n", out);
  } catch (const std::runtime_error& e) {
    json j{{"version", "v1"}, {"error", e.what()}};
    int rc = emit(j.dump(2) + "\n", out);
    return rc != 0 ? rc : 1;
  }
}

int cmd_search(const std::string& start, int max_len, bool saf_zero_only,
               bool saf_tensor, int jobs, const std::string& out) {
  auto base = parse_permutation(start);
  RauzyDiagram dia(base);
  std::function<bool(const PseudoAnosovCertificate&)> filter;
  if (saf_zero_only)
    filter = [](const PseudoAnosovCertificate& c) { return c.saf_zero_thm1; };
  auto certs = search_loops(dia, base, max_len, filter, jobs, saf_tensor);
  json j;
  j["version"] = "v1";
  j["start"] = start;
  j["max_len"] = max_len;
  j["count"] = certs.size();
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(certificate_to_json(c));
  j["certificates"] = std::move(arr);
  return emit(j.dump(2) + "\n", out);
}

int cmd_family(const std::string& name, const std::string& krange,
               const std::string& format, const std::string& out) {
  std::vector<FamilyCheck> checks;
  if (name == "catalog") {
    for (const auto& e : fixed_catalog())
      checks.push_back(verify_catalog_entry(e));
  } else {
    auto [klo, khi] = parse_range(krange);
    if (klo < family_min_k(name))
      throw std::invalid_argument("k below family minimum");
    for (int k = klo; k <= khi; ++k) checks.push_back(verify_family(name, k));
  }
  bool all_pass = true;
  std::string text;
  if (format == "csv") {
    std::ostringstream os;
    os << "family,k,word_len,charpoly_ok,matrix_ok,saf_zero,dilatation_minpoly\n";
    for (const auto& r : checks) {
      os << r.family << "," << r.k << "," << r.word_len << ","
         << (r.charpoly_ok ? 1 : 0) << ",";
      if (r.matrix_ok.has_value()) os << (*r.matrix_ok ? 1 : 0);
      os << "," << (r.saf_zero ? 1 : 0) << "," << r.dilatation_minpoly.str()
         << "\n";
      all_pass = all_pass && r.pass();
    }
    text = os.str();
  } else {
    json j;
    j["version"] = "v1";
    json arr = json::array();
    for (const auto& r : checks) {
      arr.push_back(family_check_to_json(r));
      all_pass = all_pass && r.pass();
    }
    j["checks"] = std::move(arr);
    j["all_pass"] = all_pass;
    text = j.dump(2) + "\n";
  }
  int rc = emit(text, out);
  if (rc != 0) return rc;
  return all_pass ? 0 : 1;
}

int cmd_classify(const std::string& poly, const std::string& out) {
  ZPoly p = parse_poly_arg(poly);
  json j;
  j["version"] = "v1";
  j["poly"] = poly_to_json(p);
  j["unit"] = is_unit(p);
  j["reciprocal"] = is_reciprocal(p);
  bool irr = is_irreducible_over_Q(p);
  j["irreducible"] = irr;
  if (irr) {
    j["pisot"] = is_pisot(p);
    j["bi_perron"] = is_bi_perron(p);
  }
  if (is_reciprocal(p)) {
    j["sympl_irred"] = symplectically_irreducible(p);
    if (p.degree() % 2 == 0) {
      auto h = homological_criterion(p);
      j["homological_criterion"] = {{"pass", h.pass}, {"reason", h.reason}};
    }
  }
  auto rc = unit_disk_count(p);
  j["unit_circle_roots"] = {{"inside", rc.inside}, {"on", rc.on},
                            {"outside", rc.outside}};
  return emit(j.dump(2) + "\n", out);
}

int cmd_realize(const std::string& poly, const std::string& out) {
  ZPoly p = parse_poly_arg(poly);
  json j;
  j["version"] = "v1";
  j["poly"] = poly_to_json(p);
  try {
    ZPoly r = realize_bi_perron(p);
    auto h = homological_criterion(r);
    j["realization"] = poly_to_json(r);
    j["homological_criterion"] = {{"pass", h.pass}, {"reason", h.reason}};
    int rc = emit(j.dump(2) + "\n", out);
    if (rc != 0) return rc;
    return h.pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    j["error"] = e.what();
    int rc = emit(j.dump(2) + "\n", out);
    return rc != 0 ? rc : 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Rauzy-Veech induction, pseudo-Anosov certificates, and "
               "SAF classification"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand name
  std::string format = "json", out, start, word, name = "alpha", krange = "2..10",
              poly;
  int max_len = 8, jobs = 1, seed = 0;
  bool saf_tensor = false, saf_zero_only = false;
  app.add_option("--format", format, "json|csv|dot")->capture_default_str();
  app.add_option("--out", out, "write output to a file instead of stdout");
  app.add_option("--jobs", jobs, "worker threads for search")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized corpora");

  auto* diagram = app.add_subcommand("diagram", "export a Rauzy diagram");
  diagram->add_option("--start", start, "start permutation")->required();

  auto* certify_cmd = app.add_subcommand("certify", "certify a single loop");
  certify_cmd->add_option("--start", start)->required();
  certify_cmd->add_option("--word", word, "move word, groups like (0^3) allowed")
      ->required();
  certify_cmd->add_flag("--saf-tensor", saf_tensor,
                        "also compute the exact SAF tensor");

  auto* search = app.add_subcommand("search", "enumerate and certify loops");
  search->add_option("--start", start)->required();
  search->add_option("--max-len", max_len, "maximum loop length")->required();
  search->add_flag("--saf-zero", saf_zero_only, "keep SAF-zero loops only");
  search->add_flag("--saf-tensor", saf_tensor);

  auto* family = app.add_subcommand("family", "verify family identities");
  auto* verify = family->add_subcommand("verify");
  family->require_subcommand(1);
  verify->add_option("--name", name, "rho|alpha|beta|gamma|delta|catalog")
      ->required();
  verify->add_option("--k", krange, "k or a range like 2..10");

  auto* classify = app.add_subcommand("classify", "classify a monic polynomial");
  classify->add_option("--poly", poly,
                       "integer coefficients, constant first, e.g. -1,5,-6,1")
      ->required();

  auto* realize = app.add_subcommand("realize",
                                     "reciprocal realization of a bi-Perron unit");
  realize->add_option("--poly", poly, "integer coefficients, constant first")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (diagram->parsed()) return cmd_diagram(start, format, out);
    if (certify_cmd->parsed()) return cmd_certify(start, word, saf_tensor, out);
    if (search->parsed())
      return cmd_search(start, max_len, saf_zero_only, saf_tensor, jobs, out);
    if (family->parsed()) return cmd_family(name, krange, format, out);
    if (classify->parsed()) return cmd_classify(poly, out);
    if (realize->parsed()) return cmd_realize(poly, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
