#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "morse/cancellation.hpp"
#include "morse/document.hpp"
#include "morse/homology.hpp"

using namespace morse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

Json morse_json(const MorseVector& m) {
  Json j = Json::object();
  for (int d = -1; d <= m.max_dim(); ++d) j[std::to_string(d)] = m.at(d);
  return j;
}

Json betti_json(const BettiVector& b) {
  Json j = Json::object();
  for (int d = -1; d <= b.max_dim(); ++d) j[std::to_string(d)] = b.at(d);
  return j;
}

std::string label_string(const LabelledPoset& lp, const Chain& c) {
  std::string s;
  for (const auto& l : lp.chain_labels(c)) s += (s.empty() ? "" : " ") + format_label(l);
  return s;
}

LabelledPoset random_poset(int ranks, int width, unsigned seed) {
  if (ranks < 1 || width < 1 || ranks * width > 200) throw Error("random poset parameters out of range");
  std::mt19937 rng(seed);
  std::vector<std::vector<std::string>> levels(ranks);
  std::vector<std::string> ids{"b"};
  for (int r = 0; r < ranks; ++r) {
    const int w = std::uniform_int_distribution<int>(1, width)(rng);
    for (int k = 0; k < w; ++k) {
      levels[r].push_back("r" + std::to_string(r + 1) + "_" + std::to_string(k));
      ids.push_back(levels[r].back());
    }
  }
  ids.push_back("t");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& v : levels.front()) covers.emplace_back("b", v);
  for (const auto& v : levels.back()) covers.emplace_back(v, "t");
  std::bernoulli_distribution coin(0.5);
  for (int r = 0; r + 1 < ranks; ++r) {
    std::set<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < levels[r].size(); ++a)
      for (std::size_t b = 0; b < levels[r + 1].size(); ++b)
        if (coin(rng)) edges.emplace(a, b);
    for (std::size_t a = 0; a < levels[r].size(); ++a)
      edges.emplace(a, std::uniform_int_distribution<int>(0, levels[r + 1].size() - 1)(rng));
    for (std::size_t b = 0; b < levels[r + 1].size(); ++b)
      edges.emplace(std::uniform_int_distribution<int>(0, levels[r].size() - 1)(rng), b);
    for (const auto& [a, b] : edges) covers.emplace_back(levels[r][a], levels[r + 1][b]);
  }
  Poset p = Poset::build(ids, covers, "b", "t");
  std::vector<Label> labels;
  for (const auto& [lo, hi] : p.covers()) labels.push_back({hi});
  return {std::move(p), EdgeLabelling(std::move(labels))};
}

struct Loaded {
  PosetDocument doc;
  LabelledPoset lp;
};

Loaded load_poset(const std::string& path) {
  Loaded l{PosetDocument::parse(read_file(path)), {}};
  l.lp = l.doc.to_poset();
  return l;
}

Json lexmorse_json(const LabelledPoset& lp, const LexMorseResult& lm) {
  const Poset& p = lp.poset;
  const FacePoset& fp = lm.face_poset;
  Json facets = Json::array();
  for (std::size_t j = 0; j < lm.facets.size(); ++j) {
    const auto& sys = lm.systems[j];
    Json f;
    f["index"] = j;
    f["labels"] = label_string(lp, lm.facets[j]);
    Json msis = Json::array();
    for (const auto& r : sys.msis) msis.push_back({r.lo, r.hi});
    f["msis"] = msis;
    f["critical_ranks"] = sys.critical ? Json(*sys.critical) : Json(nullptr);
    facets.push_back(f);
  }
  Json crit = Json::array();
  for (CellId c : critical_cells(fp, lm.matching)) {
    Json cj;
    cj["cell"] = cell_ids(p, fp, c);
    cj["dim"] = fp.dim(c);
    if (fp.size() > 0 && c < static_cast<int>(lm.piece.size()))
      cj["facet_labels"] = label_string(lp, lm.facets[lm.facet_of(c)]);
    crit.push_back(cj);
  }
  Json out;
  out["facets"] = facets;
  out["critical_cells"] = crit;
  out["morse_numbers"] = morse_json(morse_numbers(fp, lm.matching));
  out["matching_size"] = lm.matching.size();
  out["acyclic"] = is_acyclic(fp, lm.matching).acyclic;
  return out;
}

CancellationReport run_cancel(const Loaded& l, const LexMorseResult& lm, Strategy s,
                              const std::string& pairs_path) {
  const FacePoset& fp = lm.face_poset;
  switch (s) {
    case Strategy::pm_greedy: return cancel_pm_greedy(fp, lm.matching);
    case Strategy::explicit_pairs: {
      if (pairs_path.empty()) throw Error("explicit-pairs needs --pairs");
      return cancel_explicit_pairs(
          fp, lm.matching, MatchingDocument::parse(read_file(pairs_path)).to_pairs(l.lp.poset, fp));
    }
    case Strategy::boolean_ne: {
      const auto crit = critical_cells(fp, lm.matching);
      if (l.doc.family == "pd") {
        const PdPoset pd = pd_poset(l.doc.params.at("n").get<int>(), l.doc.params.at("q").get<int>());
        if (PosetDocument::from_poset(pd.lp).elements != l.doc.elements)
          throw Error("document does not match the generated PD poset");
        return cancel_boolean_families(fp, lm.matching,
                                       boolean_families(crit, pd_family(pd, l.lp, lm)));
      }
      if (l.doc.family == "pisn")
        return cancel_boolean_families(fp, lm.matching,
                                       boolean_families(crit, pi_family(l.lp, lm)));
      throw Error("boolean-ne needs a pd or pisn poset document");
    }
  }
  throw Error("unknown strategy");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Morse matchings on order complexes of finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned seed = 1;
  app.add_option("--seed", seed, "Seed for randomized helpers");

  auto* gen = app.add_subcommand("gen", "Generate a poset document");
  std::string family, preset, out_path = "-";
  int n = 3, q = 2, width = 3;
  gen->add_option("family", family, "weak | pd | pisn | monoid | random")
      ->required()
      ->check(CLI::IsMember({"weak", "pd", "pisn", "monoid", "random"}));
  gen->add_option("--n", n, "Size parameter (ranks for random)");
  gen->add_option("--q", q, "Field size for pd");
  gen->add_option("--width", width, "Maximum rank width for random");
  gen->add_option("--preset", preset, "Monoid preset")->check(CLI::IsMember({"lex-examp", "two-paths"}));
  gen->add_option("-o,--output", out_path, "Output file");

  auto* lexmorse = app.add_subcommand("lexmorse", "Lexicographic discrete Morse function");
  std::string poset_path, matching_out;
  lexmorse->add_option("poset", poset_path)->required();
  lexmorse->add_option("-o,--output", out_path, "Report file");
  lexmorse->add_option("--matching-out", matching_out, "Write the matching here");

  auto* cancel = app.add_subcommand("cancel", "Cancel critical cells of the lex Morse matching");
  std::string strategy = "pm-greedy", pairs_path;
  cancel->add_option("poset", poset_path)->required();
  cancel->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"boolean-ne", "pm-greedy", "explicit-pairs"}));
  cancel->add_option("--pairs", pairs_path, "Matching document of critical pairs to cancel");
  cancel->add_option("-o,--output", out_path, "Report file");
  cancel->add_option("--matching-out", matching_out, "Write the new matching here");

  auto* verify = app.add_subcommand("verify", "Verify a matching against the oracles");
  std::string matching_path;
  verify->add_option("poset", poset_path)->required();
  verify->add_option("matching", matching_path)->required();
  verify->add_option("-o,--output", out_path, "Report file");

  auto* betti_cmd = app.add_subcommand("betti", "Reduced Betti numbers of the order complex");
  int field = 0;
  betti_cmd->add_option("poset", poset_path)->required();
  betti_cmd->add_option("--field", field, "0 for the rationals or a prime");
  betti_cmd->add_option("-o,--output", out_path, "Report file");

  auto* dot = app.add_subcommand("export-dot", "DOT rendering of a Hasse diagram or of P^M");
  bool pm_flag = false, greedy_flag = false;
  dot->add_option("poset", poset_path)->required();
  dot->add_flag("--pm", pm_flag, "Render P^M of the lex Morse matching");
  dot->add_option("--matching", matching_path, "Use this matching for P^M");
  dot->add_flag("--greedy", greedy_flag, "Highlight the greedy P^M matching");
  dot->add_option("-o,--output", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      Json params = {{"seed", seed}};
      LabelledPoset lp;
      if (family == "weak") {
        params = {{"n", n}};
        lp = weak_order(n);
      } else if (family == "pd") {
        params = {{"n", n}, {"q", q}};
        lp = pd_poset(n, q).lp;
      } else if (family == "pisn") {
        params = {{"n", n}};
        lp = pi_sn_poset(n).lp;
      } else if (family == "monoid") {
        if (preset.empty()) throw Error("monoid needs --preset");
        params = {{"preset", preset}};
        lp = monoid_interval(preset == "lex-examp" ? lex_examp_spec() : two_paths_spec());
      } else {
        params = {{"ranks", n}, {"width", width}, {"seed", seed}};
        lp = random_poset(n, width, seed);
      }
      write_output(out_path, PosetDocument::from_poset(lp, family, params).serialize());
      return kExitOk;
    }

    if (*lexmorse) {
      const Loaded l = load_poset(poset_path);
      const auto lm = lex_morse(l.lp);
      Json rep = make_report("lexmorse", {{"poset", poset_path}, {"family", l.doc.family},
                                          {"family_params", l.doc.params}});
      rep["result"] = lexmorse_json(l.lp, lm);
      if (!matching_out.empty())
        write_output(matching_out,
                     MatchingDocument::from_matching(l.lp.poset, lm.face_poset, lm.matching).serialize());
      write_output(out_path, rep.dump(2) + "\n");
      return kExitOk;
    }

    if (*cancel) {
      const Loaded l = load_poset(poset_path);
      const auto lm = lex_morse(l.lp);
      const auto rep_c = run_cancel(l, lm, strategy_from_string(strategy), pairs_path);
      Json rep = make_report("cancel", {{"poset", poset_path}, {"strategy", strategy},
                                        {"pairs", pairs_path}, {"family", l.doc.family},
                                        {"family_params", l.doc.params}});
      rep["result"] = {{"before", morse_json(rep_c.before)},
                       {"after", morse_json(rep_c.after)},
                       {"rounds", rep_c.rounds.size()},
                       {"cancelled_pairs", rep_c.cancelled_pairs}};
      Json surv = Json::array();
      for (CellId c : critical_cells(lm.face_poset, rep_c.matching))
        surv.push_back(cell_ids(l.lp.poset, lm.face_poset, c));
      rep["result"]["critical_cells"] = surv;
      if (!matching_out.empty())
        write_output(matching_out, MatchingDocument::from_matching(l.lp.poset, lm.face_poset,
                                                                   rep_c.matching)
                                       .serialize());
      write_output(out_path, rep.dump(2) + "\n");
      return kExitOk;
    }

    if (*verify) {
      const Loaded l = load_poset(poset_path);
      const FacePoset fp(order_complex(l.lp.poset));
      const auto mdoc = MatchingDocument::parse(read_file(matching_path));
      Json rep = make_report("verify", {{"poset", poset_path}, {"matching", matching_path}});
      Json checks = Json::array();
      bool all = true;
      Matching m;
      Json bad_pairs = Json::array();
      for (const auto& [lo, hi] : mdoc.pairs) {
        try {
          const CellId a = cell_from_ids(l.lp.poset, fp, lo), b = cell_from_ids(l.lp.poset, fp, hi);
          if (!fp.is_incidence(a, b)) throw Error("matched cells are not incident");
          m.add(a, b);
        } catch (const Error& e) {
          bad_pairs.push_back({{"lower", lo}, {"upper", hi}, {"violation", e.what()}});
        }
      }
      auto check = [&](const std::string& name, bool ok, Json detail = nullptr) {
        all = all && ok;
        Json c = {{"check", name}, {"pass", ok}};
        if (!detail.is_null()) c["detail"] = detail;
        checks.push_back(c);
      };
      check("cells", bad_pairs.empty(), bad_pairs.empty() ? Json(nullptr) : bad_pairs);
      const auto valid = check_matching(fp, m);
      check("matching", valid.valid && bad_pairs.empty(), valid.violations);
      if (valid.valid && bad_pairs.empty()) {
        const auto acyc = is_acyclic(fp, m);
        Json cyc = Json::array();
        for (CellId c : acyc.cycle) cyc.push_back(cell_ids(l.lp.poset, fp, c));
        check("acyclic", acyc.acyclic, acyc.acyclic ? Json(nullptr) : cyc);
        if (acyc.acyclic) {
          const auto mv = morse_numbers(fp, m);
          const auto b = betti(order_complex(l.lp.poset));
          const auto ineq = check_morse_inequalities(mv, b);
          check("morse_inequalities", ineq.pass(), ineq.failures);
          const long long mu = mobius(l.lp.poset), mu_m = mobius_from_morse(mv);
          check("mobius", mu == mu_m, {{"poset", mu}, {"morse", mu_m}});
          const auto f = realize_morse_function(fp, m);
          check("realization", induced_matching(fp, f) == m && is_discrete_morse_function(fp, f));
          rep["morse_numbers"] = morse_json(mv);
          rep["betti"] = betti_json(b);
        }
      }
      rep["checks"] = checks;
      rep["pass"] = all;
      write_output(out_path, rep.dump(2) + "\n");
      return all ? kExitOk : kExitFail;
    }

    if (*betti_cmd) {
      const Loaded l = load_poset(poset_path);
      const Field f = field == 0 ? Field::rationals() : Field::prime(field);
      const auto cc = chain_complex(order_complex(l.lp.poset));
      Json rep = make_report("betti", {{"poset", poset_path}, {"field", field}});
      rep["betti"] = betti_json(betti(cc, f));
      rep["euler_characteristic"] = euler_characteristic(cc);
      rep["mobius"] = mobius(l.lp.poset);
      rep["boundary_squared_zero"] = !boundary_squared_violation(cc).has_value();
      write_output(out_path, rep.dump(2) + "\n");
      return kExitOk;
    }

    if (*dot) {
      const Loaded l = load_poset(poset_path);
      if (!pm_flag) {
        write_output(out_path, hasse_dot(l.lp));
        return kExitOk;
      }
      const auto lm = lex_morse(l.lp);
      const Matching m = matching_path.empty()
                             ? lm.matching
                             : MatchingDocument::parse(read_file(matching_path))
                                   .to_matching(l.lp.poset, lm.face_poset);
      const auto pm = build_pm(lm.face_poset, m);
      const Matching styled = greedy_flag ? greedy_pm_matching(pm, lm.face_poset) : Matching{};
      write_output(out_path, pm_dot(l.lp.poset, lm.face_poset, pm, styled));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
