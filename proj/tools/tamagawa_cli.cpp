#include <tamagawa/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tamagawa;

namespace {

int exit_code(const std::string& code) {
  if (code == "datum_invalid" || code == "domain" || code == "shortage") return 3;
  if (code == "fast_path_unavailable") return 4;
  if (code == "budget") return 5;
  if (code == "overflow") return 6;
  return 1;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Json engine_section(const NormTorusDatum& d, const std::optional<Rational>& predicted) {
  TamagawaReport r = tamagawa_number(d);
  Json j;
  j["group_order"] = d.group.order();
  merge(j, to_json(r));
  if (predicted) {
    j["predicted_tau"] = to_json(*predicted);
    j["agrees"] = *predicted == r.tau;
  }
  return j;
}

void attach_oracle(Json& j, const NormTorusDatum& d, const CohomologyBudget& budget, const std::optional<Rational>& engine_tau) {
  try {
    OracleReport o = ono_tamagawa_oracle(d, budget);
    j["oracle"] = to_json(o);
    if (engine_tau) j["oracle_agrees"] = o.tau == *engine_tau;
  } catch (const BudgetError& e) {
    j["oracle"] = nullptr;
    j["oracle_skipped"] = to_json(e)["error"];
  }
}

Rational tau_of(const Json& j) {
  return Rational(j["tau"]["num"].get<std::int64_t>(), j["tau"]["den"].get<std::int64_t>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tamagawa numbers of norm-type tori from finite group data"};
  app.require_subcommand(1);

  int n = 0;
  std::uint64_t big_p = 0, big_q = 0;
  std::string file;
  std::vector<std::string> files;
  bool with_oracle = false;
  int max_order = CohomologyBudget{}.max_order_degree2;
  std::uint64_t a_max = 0, b_max = 0;
  unsigned threads = 1;
  std::string out_path;

  auto* tau = app.add_subcommand("tau", "Tamagawa number via the transfer formulas")->require_subcommand(1);
  auto* cyc = tau->add_subcommand("cyclotomic", "n-th cyclotomic field");
  cyc->add_option("n", n)->required();
  cyc->add_flag("--oracle", with_oracle, "cross-check with the cohomology oracle");
  auto* q8 = tau->add_subcommand("q8", "quaternion CM field from (P, Q)");
  q8->add_option("P", big_p)->required();
  q8->add_option("Q", big_q)->required();
  q8->add_flag("--oracle", with_oracle, "cross-check with the cohomology oracle");
  auto* dat = tau->add_subcommand("datum", "datum from a JSON file");
  dat->add_option("file", file)->required()->check(CLI::ExistingFile);
  dat->add_flag("--oracle", with_oracle, "cross-check with the cohomology oracle");
  dat->add_option("--max-order", max_order, "largest group order for degree-2 oracle cohomology");
  auto* prod = tau->add_subcommand("product", "product of Galois CM data");
  prod->add_option("files", files)->required()->check(CLI::ExistingFile);

  auto* cls = app.add_subcommand("classify", "structural analysis of a CM datum");
  cls->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* orc = app.add_subcommand("oracle", "bar-resolution cohomology oracle")->require_subcommand(1);
  auto* ver = orc->add_subcommand("verify", "structural checks on a datum");
  ver->add_option("file", file)->required()->check(CLI::ExistingFile);
  ver->add_option("--max-order", max_order, "largest group order for degree-2 oracle cohomology");

  auto* emit = app.add_subcommand("datum", "print a constructed datum as JSON")->require_subcommand(1);
  auto* emit_cyc = emit->add_subcommand("cyclotomic", "n-th cyclotomic field");
  emit_cyc->add_option("n", n)->required();
  auto* emit_q8 = emit->add_subcommand("q8", "quaternion CM field from (P, Q)");
  emit_q8->add_option("P", big_p)->required();
  emit_q8->add_option("Q", big_q)->required();
  auto* emit_dih = emit->add_subcommand("dihedral", "dihedral CM field of degree 2n");
  emit_dih->add_option("n", n)->required();

  auto* lan = app.add_subcommand("landau", "Landau pair search")->require_subcommand(1);
  auto* search = lan->add_subcommand("search", "enumerate pairs p = 1 + 4a^2, q = 1 + p b^2");
  search->add_option("--a-max", a_max)->required();
  search->add_option("--b-max", b_max)->required();
  search->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
  search->add_option("--out", out_path, "write pairs as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CohomologyBudget budget;
  budget.max_order_degree2 = max_order;
  try {
    Json out;
    if (*cyc) {
      FieldDatum f = cyclotomic(n);
      out["kind"] = "cyclotomic";
      out["n"] = n;
      merge(out, engine_section(f.datum, f.predicted_tau));
      if (with_oracle) attach_oracle(out, f.datum, budget, tau_of(out));
    } else if (*q8) {
      Q8Datum f = q8_landau(big_p, big_q);
      out["kind"] = "q8";
      out["P"] = big_p;
      out["Q"] = big_q;
      out["a"] = f.a;
      out["b"] = f.b;
      out["legendre"] = Json::array();
      for (const auto& l : f.legendre) {
        Json e;
        e["q"] = l.prime;
        e["exponent"] = l.exponent;
        e["symbol"] = l.symbol;
        out["legendre"].push_back(e);
      }
      merge(out, engine_section(f.field.datum, f.field.predicted_tau));
      if (with_oracle) attach_oracle(out, f.field.datum, budget, tau_of(out));
    } else if (*dat) {
      NormTorusDatum d = load_datum(file);
      out["kind"] = "datum";
      try {
        merge(out, engine_section(d, std::nullopt));
        if (with_oracle) attach_oracle(out, d, budget, tau_of(out));
      } catch (const FastPathUnavailable& e) {
        if (!with_oracle) throw;
        out["group_order"] = d.group.order();
        out["fast_path"] = to_json(e)["error"];
        attach_oracle(out, d, budget, std::nullopt);
      }
    } else if (*prod) {
      std::vector<NormTorusDatum> factors;
      for (const auto& f : files) factors.push_back(load_datum(f));
      out["kind"] = "product";
      merge(out, to_json(product_tamagawa(factors)));
    } else if (*cls) {
      NormTorusDatum d = load_datum(file);
      if (!d.iota) throw ConstructionError("classify needs a datum with iota");
      const FiniteGroup& g = d.group;
      const int iota = *d.iota;
      out["kind"] = "classify";
      out["group_order"] = g.order();
      out["iota"] = iota;
      out["density"] = to_json(density_bound(g, iota));
      out["imaginary_quadratic"] = to_json(imaginary_quadratic_count(g, iota));
      out["abelian"] = g.is_abelian() ? to_json(abelian_classifier(g, iota)) : Json(nullptr);
      out["split"] = nullptr;
      if (center(g).contains(iota) && iota_complement(g, iota)) {
        try {
          out["split"] = to_json(split_classifier(g, iota, d.decomposition_groups));
        } catch (const BudgetError& e) {
          out["split_skipped"] = to_json(e)["error"];
        }
      }
      out["dihedral"] = nullptr;
      int rotation = 0;
      if (auto m = dihedral_parameter(g, &rotation); m && *m % 2 == 0 && g.pow(rotation, *m / 2) == iota)
        out["dihedral"] = to_json(dihedral_cm(*m));
    } else if (*ver) {
      NormTorusDatum d = load_datum(file);
      auto checks = verify_structure(d, budget);
      bool all = true;
      for (const auto& c : checks)
        if (c.applicable && !c.holds) all = false;
      out["kind"] = "verify";
      out["group_order"] = d.group.order();
      out["all_applicable_hold"] = all;
      out["checks"] = to_json(checks);
    } else if (*emit_cyc) {
      out = datum_to_json(cyclotomic(n).datum);
    } else if (*emit_q8) {
      out = datum_to_json(q8_landau(big_p, big_q).field.datum);
    } else if (*emit_dih) {
      out = datum_to_json(dihedral_cm(n).datum);
    } else if (*search) {
      LandauSearchResult r = landau_search(a_max, b_max, threads);
      if (!out_path.empty()) {
        std::ofstream csv(out_path);
        if (!csv) throw ConstructionError("cannot open output file", {{"path", out_path}});
        csv << "a,p,b,q\n";
        for (const auto& p : r.pairs) csv << to_csv_line(p) << "\n";
      }
      out["kind"] = "landau_search";
      merge(out, to_json(r));
    }
    std::cout << dump(out);
    return 0;
  } catch (const Error& e) {
    std::cout << dump(to_json(e));
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cout << dump(to_json(InternalError(e.what())));
    return 1;
  }
}
