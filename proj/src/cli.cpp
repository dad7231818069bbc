#include "discarr/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "discarr/charpoly.hpp"
#include "discarr/conegeom.hpp"
#include "discarr/discriminantal.hpp"
#include "discarr/errors.hpp"
#include "discarr/fixtures.hpp"
#include "discarr/io.hpp"
#include "discarr/lattice.hpp"
#include "discarr/matroid.hpp"

namespace discarr::cli {

namespace {

using io::json;

Arrangement load_arrangement(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::parse_arrangement(io::read_file(arg));
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return load_fixture(arg).arrangement;
  throw ParseError("", "no such file or fixture: " + arg);
}

SubsetFamily load_family(const std::string& arg, std::size_t n, std::size_t k) {
  SubsetFamily f = io::parse_family(io::read_file(arg), n, k);
  if (f.k == 0) {
    if (f.members.empty()) throw ParseError("", "cannot infer k from an empty family; pass --k");
    f.k = f.members.front().size() - 1;
  }
  if (f.n == 0)
    for (const auto& s : f.members)
      for (auto e : s) f.n = std::max(f.n, e);
  validate_family(f);
  return f.canonical();
}

json poly_json(const CharPoly& chi) {
  json coeffs = json::array();
  for (const auto& c : chi.coeffs) coeffs.push_back(c.get_str());
  return coeffs;
}

std::string vector_str(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

// --- command bodies -------------------------------------------------------

int cmd_disc_build(const std::string& path, bool table, std::ostream& out) {
  const Arrangement h = load_arrangement(path);
  const DiscArrangement d = build_disc(h.coeffs());
  if (table) {
    for (const auto& r : d.rows()) out << std::left << std::setw(12) << format_subset(r.subset) << vector_str(r.normal) << "\n";
    return kOk;
  }
  json j;
  j["n"] = d.n();
  j["m"] = d.m();
  json subsets = json::array(), normals = json::array();
  for (const auto& r : d.rows()) {
    subsets.push_back(io::to_json(r.subset));
    normals.push_back(io::to_json(r.normal));
  }
  j["subsets"] = std::move(subsets);
  j["normals"] = std::move(normals);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_chi(const std::string& path, bool disc, bool oracle, unsigned threads, bool as_json, std::ostream& out,
            std::ostream& err) {
  const Arrangement h = load_arrangement(path);
  std::vector<RatVector> normals;
  std::size_t dim;
  if (disc) {
    normals = build_disc(h.coeffs()).normals();
    dim = h.n();
  } else {
    for (std::size_t i = 0; i < h.n(); ++i) normals.push_back(h.coeffs().row_vector(i));
    dim = h.m();
  }
  WhitneyOptions opts;
  opts.threads = threads;
  const CharPoly chi = whitney_char_poly(normals, opts);
  const mpz_class cones = count_cones(chi, dim);

  bool agree = true;
  std::optional<CharPoly> flats_chi;
  std::optional<mpz_class> dr;
  if (oracle) {
    flats_chi = char_poly_via_flats(normals);
    dr = count_cones_deletion_restriction(normals);
    agree = *flats_chi == chi && *dr == cones;
  }
  if (as_json) {
    json j;
    j["dimension"] = dim;
    j["hyperplanes"] = normals.size();
    j["chi"] = chi.str();
    j["coefficients"] = poly_json(chi);
    j["cones"] = cones.get_str();
    if (oracle) {
      j["oracle"] = {{"flats_chi", flats_chi->str()},
                     {"deletion_restriction_cones", dr->get_str()},
                     {"agree", agree}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "chi: " << chi.str() << "\n";
    out << "cones: " << cones.get_str() << "\n";
    if (oracle) {
      out << "flats oracle: " << flats_chi->str() << "\n";
      out << "deletion-restriction cones: " << dr->get_str() << "\n";
    }
  }
  if (!agree) {
    err << "oracles disagree\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_very_generic(const std::string& path, std::ostream& out) {
  const Arrangement h = load_arrangement(path);
  const auto cert = is_very_generic(h.coeffs());
  json j;
  j["verdict"] = cert.verdict;
  j["witness"] = cert.witness ? io::to_json(cert.witness->members) : json(nullptr);
  if (cert.witness) {
    j["witness_size"] = cert.witness->size();
    j["witness_rank"] = cert.witness_rank;
  }
  j["collections_checked"] = cert.collections_checked;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_lattice_p(std::size_t n, std::size_t k, bool chi, bool list, bool as_json, std::ostream& out) {
  const PPoset p = enumerate_P(n, k);
  std::vector<std::size_t> per_rank;
  for (auto r : p.poset.rank) {
    if (per_rank.size() <= r) per_rank.resize(r + 1);
    ++per_rank[r];
  }
  const CharPoly poly = p.poset.char_poly(n);
  if (as_json) {
    json j;
    j["n"] = n;
    j["k"] = k;
    j["size"] = p.elements.size();
    j["rank_sizes"] = per_rank;
    j["chi"] = poly.str();
    j["cones"] = count_cones(poly, n).get_str();
    if (list) {
      json elems = json::array();
      for (const auto& f : p.elements) elems.push_back(io::to_json(f.members));
      j["elements"] = std::move(elems);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (chi) {
    out << poly.str() << "\n";
    return kOk;
  }
  out << "P(" << n << "," << k << "): " << p.elements.size() << " elements\n";
  for (std::size_t r = 0; r < per_rank.size(); ++r) out << "  rank " << r << ": " << per_rank[r] << "\n";
  if (list)
    for (std::size_t i = 0; i < p.elements.size(); ++i)
      out << p.poset.rank[i] << "  " << format_family(p.elements[i].members) << "\n";
  return kOk;
}

int cmd_closure(const std::string& path, std::size_t n, std::size_t k, bool as_json, std::ostream& out) {
  const SubsetFamily f = load_family(path, n, k);
  std::size_t passes = 0;
  const auto c = closure(f, &passes);
  if (as_json) {
    json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["closure"] = io::to_json(c.members);
    j["rank"] = dilworth_rank(c);
    j["passes"] = passes;
    out << j.dump(2) << "\n";
  } else {
    out << format_family(c.members) << "\n";
    out << "rank " << dilworth_rank(c) << ", " << passes << " pass" << (passes == 1 ? "" : "es") << "\n";
  }
  return kOk;
}

int cmd_sigma(const std::string& path, std::size_t n, std::size_t k, bool as_json, std::ostream& out) {
  const SubsetFamily d = load_family(path, n, k);
  const auto sets = concurrency_sets(d);
  const auto base = base_collection(d);
  if (as_json) {
    json j;
    j["n"] = d.n;
    j["k"] = d.k;
    j["concurrency_sets"] = io::to_json(sets.members);
    j["base_collection"] = io::to_json(base.members);
    out << j.dump(2) << "\n";
  } else {
    out << "concurrency sets: " << format_family(sets.members) << "\n";
    out << "base collection: " << format_family(base.members) << "\n";
  }
  return kOk;
}

int cmd_iso_check(const std::string& path, bool as_json, std::ostream& out) {
  const Arrangement h = load_arrangement(path);
  const auto cert = is_very_generic(h.coeffs());
  const IsoReport r = iso_check(h.coeffs());
  if (as_json) {
    json j;
    j["very_generic"] = cert.verdict;
    j["p_size"] = r.p_size;
    j["l_size"] = r.l_size;
    j["bijective"] = r.bijective;
    j["order_preserving"] = r.order_preserving;
    j["order_reflecting"] = r.order_reflecting;
    j["dims_match"] = r.dims_match;
    j["isomorphism"] = r.ok();
    out << j.dump(2) << "\n";
  } else {
    out << "very generic: " << (cert.verdict ? "true" : "false") << "\n";
    out << "|P| = " << r.p_size << ", |L| = " << r.l_size << "\n";
    out << "bijective: " << r.bijective << ", order preserving: " << r.order_preserving
        << ", order reflecting: " << r.order_reflecting << ", dimensions match: " << r.dims_match << "\n";
    out << "isomorphism: " << (r.ok() ? "yes" : "no") << (cert.verdict ? "" : " (not asserted: A is not very generic)")
        << "\n";
  }
  return cert.verdict && !r.ok() ? kCheckFailed : kOk;
}

int cmd_facets(const std::string& path, unsigned threads, bool as_json, std::ostream& out) {
  const Arrangement h = load_arrangement(path);
  const DiscArrangement d = build_disc(h.coeffs());
  const SignVector sigma = sign_vector(d, h.constants());
  const auto recs = facet_records(d, sigma, threads);
  if (as_json) {
    json j;
    j["signs"] = sigma.signs;
    json facets = json::array();
    for (const auto& r : recs)
      if (r.facet) facets.push_back({{"subset", io::to_json(r.subset)}, {"witness", io::to_json(*r.witness)}});
    j["facets"] = std::move(facets);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "signs: " << sigma.str() << "\n";
  std::size_t count = 0;
  for (const auto& r : recs) {
    if (!r.facet) continue;
    ++count;
    out << std::left << std::setw(12) << format_subset(r.subset) << "witness " << vector_str(*r.witness) << "\n";
  }
  out << count << " facets\n";
  return kOk;
}

int cmd_cells(const std::string& path, bool as_json, std::ostream& out) {
  const Arrangement h = load_arrangement(path);
  const auto cells = simplex_cells(h);
  if (as_json) {
    json arr = json::array();
    for (const auto& c : cells) {
      json verts = json::array();
      for (const auto& v : c.vertices) verts.push_back(io::to_json(v));
      arr.push_back({{"hyperplanes", io::to_json(c.hyperplanes)}, {"vertices", std::move(verts)}});
    }
    out << json{{"cells", std::move(arr)}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& c : cells) {
    out << std::left << std::setw(12) << format_subset(c.hyperplanes);
    for (const auto& v : c.vertices) out << ' ' << vector_str(v);
    out << "\n";
  }
  out << cells.size() << " simplex cells\n";
  return kOk;
}

int cmd_report(const std::string& path, unsigned threads, bool as_json, std::ostream& out) {
  const Arrangement h = load_arrangement(path);
  const auto recs = correspondence_report(h, threads);
  std::size_t cell_only = 0, facet_only = 0;
  for (const auto& r : recs) {
    cell_only += r.cell_present && !r.facet;
    facet_only += r.facet && !r.cell_present;
  }
  if (as_json) {
    json arr = json::array();
    for (const auto& r : recs)
      arr.push_back({{"subset", io::to_json(r.subset)}, {"cell", r.cell_present}, {"facet", r.facet}});
    out << json{{"records", std::move(arr)}, {"cell_not_facet", cell_only}, {"facet_not_cell", facet_only}}.dump(2)
        << "\n";
    return kOk;
  }
  out << std::left << std::setw(12) << "subset" << std::setw(7) << "cell" << "facet\n";
  for (const auto& r : recs)
    out << std::setw(12) << format_subset(r.subset) << std::setw(7) << (r.cell_present ? "yes" : "no")
        << (r.facet ? "yes" : "no") << "\n";
  out << "cells without a facet: " << cell_only << "\n";
  out << "facets without a cell: " << facet_only << "\n";
  return kOk;
}

int cmd_svg(const std::string& path, const std::string& target, std::ostream& out) {
  const Arrangement h = load_arrangement(path);
  const std::string svg = render_svg(h, simplex_cells(h));
  if (target.empty() || target == "-") {
    out << svg;
    return kOk;
  }
  std::ofstream f(target);
  if (!(f << svg)) throw std::runtime_error("cannot write " + target);
  return kOk;
}

int cmd_verify_paper(unsigned threads, bool as_json, std::ostream& out) {
  const auto rows = verify_paper(threads);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass();
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"fixture", r.fixture},
                     {"check", r.check},
                     {"expected", r.expected},
                     {"actual", r.actual},
                     {"pass", r.pass()}});
    out << json{{"checks", std::move(arr)}, {"pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      out << (r.pass() ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << r.fixture << std::setw(22) << r.check
          << r.actual;
      if (!r.pass()) out << "  (expected " << r.expected << ")";
      out << "\n";
    }
  }
  return all ? kOk : kCheckFailed;
}

std::string evaluate(const Fixture& f, const std::string& check, unsigned threads) {
  const Arrangement& h = f.arrangement;
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  if (check == "generic") return b(is_generic(h));
  if (check == "cones") {
    WhitneyOptions opts;
    opts.threads = threads;
    return count_cones(whitney_char_poly(build_disc(h.coeffs()), opts), h.n()).get_str();
  }
  if (check == "very-generic") return b(is_very_generic(h.coeffs()).verdict);
  if (check == "very-generic-witness") {
    const auto cert = is_very_generic(h.coeffs());
    return cert.witness ? format_family(cert.witness->members) : "none";
  }
  if (check == "concurrencies") return format_family(concurrency_report(h).sets.members);
  if (check == "in-P") return b(in_P(concurrency_report(h).sets, h.n(), h.m()));
  const auto colon = check.find(':');
  if (colon != std::string::npos) {
    const std::string kind = check.substr(0, colon);
    const std::string target = check.substr(colon + 1);
    if (kind == "cell") {
      for (const auto& c : simplex_cells(h))
        if (format_subset(c.hyperplanes) == target) return "true";
      return "false";
    }
    if (kind == "facet") {
      const DiscArrangement d = build_disc(h.coeffs());
      const SignVector sigma = sign_vector(d, h.constants());
      for (const auto& r : d.rows())
        if (format_subset(r.subset) == target) return b(is_facet(d, sigma, r.subset));
      return "no such row";
    }
  }
  throw std::logic_error("unknown check " + check);
}

}  // namespace

std::vector<CheckRow> verify_paper(unsigned threads) {
  std::vector<CheckRow> rows;
  for (const auto& name : fixture_names()) {
    const Fixture f = load_fixture(name);
    for (const auto& [check, expected] : f.expectations) rows.push_back({name, check, expected, evaluate(f, check, threads)});
  }
  const PPoset p = enumerate_P(6, 2);
  const CharPoly chi = p.poset.char_poly(6);
  rows.push_back({"P(6,2)", "chi", "x^6-20x^5+145x^4-426x^3+300x^2", chi.str()});
  rows.push_back({"P(6,2)", "cones", "892", count_cones(chi, 6).get_str()});
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discriminantal arrangements: construction, cone counts, very-genericity and lattices", "discarr"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string path, target;
  bool table = false, disc = false, oracle = false, as_json = false, chi = false, list = false;
  unsigned threads = 1;
  std::size_t n = 0, k = 0;
  std::function<int()> action;

  auto add_path = [&](CLI::App* c) { c->add_option("arrangement", path, "arrangement JSON file or fixture name")->required(); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "machine-readable output"); };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* disc_cmd = app.add_subcommand("disc", "discriminantal arrangement");
  disc_cmd->require_subcommand(1);
  auto* build = disc_cmd->add_subcommand("build", "print the normals of every M_S");
  add_path(build);
  build->add_flag("--table", table, "plain text instead of JSON");
  build->callback([&] { action = [&] { return cmd_disc_build(path, table, out); }; });

  auto* chi_cmd = app.add_subcommand("chi", "characteristic polynomial and cone count");
  add_path(chi_cmd);
  chi_cmd->add_flag("--disc", disc, "use the discriminantal arrangement instead of the normals");
  chi_cmd->add_flag("--oracle", oracle, "cross-check with the flat lattice and deletion-restriction");
  add_threads(chi_cmd);
  add_json(chi_cmd);
  chi_cmd->callback([&] { action = [&] { return cmd_chi(path, disc, oracle, threads, as_json, out, err); }; });

  auto* matroid_cmd = app.add_subcommand("matroid", "Dilworth matroid tests");
  matroid_cmd->require_subcommand(1);
  auto* vg = matroid_cmd->add_subcommand("very-generic", "decide very-genericity with a witness");
  add_path(vg);
  vg->callback([&] { action = [&] { return cmd_very_generic(path, out); }; });

  auto* lattice_cmd = app.add_subcommand("lattice", "P(n,k), closures and the flats lattice");
  lattice_cmd->require_subcommand(1);
  auto* p_cmd = lattice_cmd->add_subcommand("p", "enumerate P(n,k)");
  p_cmd->add_option("--n", n, "number of hyperplanes")->required();
  p_cmd->add_option("--k", k, "dimension")->required();
  p_cmd->add_flag("--chi", chi, "print only the characteristic polynomial");
  p_cmd->add_flag("--list", list, "list every element");
  add_json(p_cmd);
  p_cmd->callback([&] { action = [&] { return cmd_lattice_p(n, k, chi, list, as_json, out); }; });

  for (const char* name : {"closure", "sigma"}) {
    auto* c = lattice_cmd->add_subcommand(name, std::string(name) == "closure" ? "concurrency closure of a family"
                                                                               : "sets of concurrencies and a base collection");
    c->add_option("family", path, "family JSON file")->required();
    c->add_option("--n", n, "ground set size (default: largest element)");
    c->add_option("--k", k, "k (default: member size - 1)");
    add_json(c);
    const bool is_closure = std::string(name) == "closure";
    c->callback([&, is_closure] {
      action = [&, is_closure] { return is_closure ? cmd_closure(path, n, k, as_json, out) : cmd_sigma(path, n, k, as_json, out); };
    });
  }
  auto* iso = lattice_cmd->add_subcommand("iso-check", "compare P(n,m) with the flats of Disc(A)");
  add_path(iso);
  add_json(iso);
  iso->callback([&] { action = [&] { return cmd_iso_check(path, as_json, out); }; });

  auto* cone_cmd = app.add_subcommand("cone", "cones, facets and simplex cells");
  cone_cmd->require_subcommand(1);
  auto* facets = cone_cmd->add_subcommand("facets", "facets of the cone containing the constants");
  add_path(facets);
  add_threads(facets);
  add_json(facets);
  facets->callback([&] { action = [&] { return cmd_facets(path, threads, as_json, out); }; });
  auto* cells = cone_cmd->add_subcommand("cells", "simplex cells of the arrangement");
  add_path(cells);
  add_json(cells);
  cells->callback([&] { action = [&] { return cmd_cells(path, as_json, out); }; });
  auto* report = cone_cmd->add_subcommand("report", "simplex cells against facets, per subset");
  add_path(report);
  add_threads(report);
  add_json(report);
  report->callback([&] { action = [&] { return cmd_report(path, threads, as_json, out); }; });
  auto* svg = cone_cmd->add_subcommand("svg", "draw a line arrangement with simplex cells shaded");
  add_path(svg);
  svg->add_option("-o,--output", target, "output file (default: stdout)");
  svg->callback([&] { action = [&] { return cmd_svg(path, target, out); }; });

  auto* verify = app.add_subcommand("verify-paper", "run every bundled fixture check");
  add_threads(verify);
  add_json(verify);
  verify->callback([&] { action = [&] { return cmd_verify_paper(threads, as_json, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OnHyperplaneError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace discarr::cli
