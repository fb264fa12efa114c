// nilrigid: command-line front end. Every command prints one JSON document
// on stdout; diagnostics go to stderr. Exit codes: 0 success, 1 usage or
// validation error, 2 resource exhaustion (no verdict).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilrigid/report_json.hpp"

using namespace nilrigid;

namespace {

ParsedAlgebra read_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return algebra_from_json(doc);
  } catch (const ResourceExhausted&) {
    throw;
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void emit(const Json& doc, const std::string& path = "") {
  std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::pair<std::size_t, std::size_t> parse_case(const std::string& text) {
  if (text == "3,4") return {3, 4};
  if (text == "7,0") return {7, 0};
  throw Error("--case must be 3,4 or 7,0");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity of graded 2-step nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string file, method = "auto", copies = "min", out_path, case_text, catalog_cmd, catalog_name;
  std::size_t max_level = kDefaultMaxLevel, max_unknowns = kDefaultMaxUnknowns, r = 0, s = 0, max_dim = 64, m = 0, n = 0, trials = 1;
  std::uint64_t seed = 0;
  bool general = false, dump = false, full = false, decide_flag = false;

  auto* rig = app.add_subcommand("rigidity", "Decide rigid versus infinite type");
  rig->add_option("file", file, "Algebra JSON")->required();
  rig->add_option("--method", method, "auto|ideal|prolong|fast|all");
  rig->add_option("--max-level", max_level, "Prolongation level cap");
  rig->add_option("--max-unknowns", max_unknowns, "Prolongation budget per level");

  auto* pro = app.add_subcommand("prolong", "Tanaka prolongation level dimensions");
  pro->add_option("file", file, "Algebra JSON")->required();
  pro->add_option("--max-level", max_level, "Highest level to compute");
  pro->add_option("--max-unknowns", max_unknowns, "Largest linear system solved for one level");

  auto* j2 = app.add_subcommand("jsquared", "Check the J²-condition");
  j2->add_option("file", file, "Algebra JSON (metric optional)")->required();
  j2->add_flag("--general", general, "Probe the general J²-condition instead");

  auto* ht = app.add_subcommand("htype", "Build the pseudo H-type algebra n^{r,s}");
  ht->add_option("r", r)->required();
  ht->add_option("s", s)->required();
  ht->add_option("--copies", copies, "Module spec such as min, +:2 or +:1,-:1");
  ht->add_option("-o", out_path, "Write the document to this file");
  ht->add_flag("--dump-generators", dump, "Emit the Clifford generators and form");

  auto* t1 = app.add_subcommand("table1", "Minimal admissible module dimensions");
  t1->add_option("--max-dim", max_dim, "Skip modules larger than this");
  t1->add_flag("--full", full, "Compute every entry, up to dimension 256");

  auto* inv = app.add_subcommand("involutions", "Commuting involutions and common eigenspaces");
  inv->add_option("--case", case_text, "3,4 or 7,0")->required();

  auto* cat = app.add_subcommand("catalog", "Built-in algebras");
  cat->add_option("action", catalog_cmd, "list or get")->required()->check(CLI::IsMember({"list", "get"}));
  cat->add_option("name", catalog_name, "Entry name for get");

  auto* rnd = app.add_subcommand("random", "Random algebras from the documented generator");
  rnd->add_option("M", m)->required();
  rnd->add_option("N", n)->required();
  rnd->add_option("--seed", seed)->required();
  rnd->add_option("--trials", trials, "Number of consecutive seeds");
  rnd->add_flag("--decide", decide_flag, "Decide each sample and tally");

  auto* mod = app.add_subcommand("moduli", "Codimension of the generic PSL(n) orbit");
  mod->add_option("M", m)->required();
  mod->add_option("N", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (rig->parsed()) {
      auto pa = read_algebra(file);
      DecideOptions opts;
      opts.method = parse_method(method);
      opts.metric = pa.metric;
      opts.max_level = max_level;
      opts.max_unknowns = max_unknowns;
      emit(verdict_to_json(decide(pa.algebra, opts)));
    } else if (pro->parsed()) {
      auto pa = read_algebra(file);
      ProlongationResult res = prolong(pa.algebra, max_level, max_unknowns);
      if (res.budget_exhausted)
        std::cerr << "nilrigid: stopped before level " << res.level_dims.size() << ", which exceeds "
                  << max_unknowns << " unknowns\n";
      Json doc = prolongation_to_json(res);
      doc["max_level"] = max_level;
      emit(doc);
    } else if (j2->parsed()) {
      auto pa = read_algebra(file);
      MTypeAlgebra a = pa.metric ? MTypeAlgebra(pa.algebra, *pa.metric) : MTypeAlgebra(pa.algebra);
      emit(j2_to_json(general ? j2_general_probe(j_maps(a)) : j2_standard(a)));
    } else if (ht->parsed()) {
      auto spec = parse_copies(copies);
      HTypeAlgebra h = build_htype(r, s, spec);
      Json doc = dump ? htype_generators_to_json(r, s, h)
                      : algebra_to_json(h.algebra.algebra(), &h.algebra.metric());
      if (out_path.empty()) {
        emit(doc);
      } else {
        emit(doc, out_path);
        emit(Json{{"written", out_path}, {"n", h.algebra.algebra().n()}, {"m", h.algebra.algebra().m()},
                  {"composition", h.composition}});
      }
    } else if (t1->parsed()) {
      std::size_t d = full ? std::size_t{256} : max_dim;
      emit(table1_to_json(table1(d), d));
    } else if (inv->parsed()) {
      auto [cr, cs] = parse_case(case_text);
      CliffordRep rep = minimal_admissible(cr, cs);
      auto quads = default_quadruples(cr, cs);
      emit(involutions_to_json(cr, cs, involution_set(rep, quads)));
    } else if (cat->parsed()) {
      if (catalog_cmd == "list") {
        Json list = Json::array();
        for (const auto& e : catalog_all()) list.push_back(catalog_entry_to_json(e));
        emit(Json{{"entries", list}});
      } else {
        if (catalog_name.empty()) throw Error("catalog get needs an entry name");
        CatalogEntry e = catalog_get(catalog_name);
        emit(algebra_to_json(e.algebra, e.htype_metric ? &*e.htype_metric : nullptr));
      }
    } else if (rnd->parsed()) {
      if (trials == 0) throw Error("--trials must be positive");
      if (decide_flag) {
        emit(sample_to_json(m, n, seed, sample_generic(m, n, seed, trials)));
      } else if (trials == 1) {
        emit(algebra_to_json(random_algebra(m, n, seed)));
      } else {
        Json list = Json::array();
        for (std::size_t t = 0; t < trials; ++t) list.push_back(algebra_to_json(random_algebra(m, n, seed + t)));
        emit(Json{{"algebras", list}});
      }
    } else if (mod->parsed()) {
      emit(Json{{"codim", to_string(moduli_codim(m, n))}});
    }
  } catch (const ResourceExhausted& e) {
    std::cerr << "nilrigid: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "nilrigid: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "nilrigid: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
