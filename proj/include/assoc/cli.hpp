// Command-line front end: run() parses arguments, dispatches to the library
// and streams the result. Exit codes: 0 success, 1 check failure (witness on
// standard output), 2 usage or input error.
#pragma once

#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "io.hpp"
#include "kposet.hpp"
#include "rectify.hpp"
#include "tamari.hpp"

namespace assoc::cli {

/// Words on the command line: the text form ("(x1x2)x3", "0" for the empty
/// word) or the JSON tree form.
inline ParenWord read_word(const std::string& s) {
  const auto p = s.find_first_not_of(" \t");
  if (p != std::string::npos && (s[p] == '[' || s[p] == '{')) return word_from_json(nlohmann::json::parse(s));
  if (s == "0") return ParenWord::zero();
  return parse(s);
}

inline LObject read_binary(const std::string& s) {
  StableTree t = to_tree(read_word(s));
  require_binary(t, "--binary");
  return t;
}

inline nlohmann::json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline nlohmann::json doc(nlohmann::json j) {
  j["schema"] = kSchemaVersion;
  return j;
}

/// Hasse diagram (covering relations only) as DOT or JSON.
inline void write_hasse(std::ostream& out, const std::string& name, const std::vector<std::string>& labels,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges, const std::string& format) {
  if (format == "dot") {
    out << "digraph " << name << " {\n";
    for (std::size_t i = 0; i < labels.size(); ++i) out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
    for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return;
  }
  nlohmann::json es = nlohmann::json::array();
  for (const auto& [a, b] : edges) es.push_back({a, b});
  out << doc({{"name", name}, {"nodes", labels}, {"edges", es}}).dump() << '\n';
}

inline int report(std::ostream& out, const CheckReport& r, nlohmann::json extra = nlohmann::json::object()) {
  nlohmann::json j = r.to_json();
  for (auto& [k, v] : extra.items()) j[k] = v;
  out << doc(j).dump() << '\n';
  return r.ok ? 0 : 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associahedral operads, Tamari orders and A_n-monoidal coherence", "assoc"};
  app.require_subcommand(1);

  int m = 4, a = 1, b = 1, c = 1, max_total = 5, max_len = 4, bound = 6, emit = 4, max_m = 3, samples = 1000,
      max_dim = 4;
  std::optional<int> filtration, n_opt;
  std::uint64_t seed = 1;
  std::string format = "text", word, outer, binary, input;
  std::vector<std::string> arg_words;
  bool tamari = false, poset = false, lambda = false, generation = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the objects of K_m");
  enumerate_cmd->add_option("--m", m, "Arity")->required();
  enumerate_cmd->add_option("--filtration", filtration, "Keep trees with at most N inputs per node");
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* fvector_cmd = app.add_subcommand("fvector", "Cell counts by dimension and Euler characteristic");
  fvector_cmd->add_option("--m", m)->required();
  fvector_cmd->add_option("--filtration", filtration);
  fvector_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* compose_cmd = app.add_subcommand("compose", "Operad composition gamma(outer; args)");
  compose_cmd->add_option("--outer", outer)->required();
  compose_cmd->add_option("--args", arg_words)->expected(0, -1);
  compose_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of K_m, or of L_m with --tamari");
  hasse_cmd->add_option("--m", m)->required();
  hasse_cmd->add_option("--filtration", filtration);
  hasse_cmd->add_flag("--tamari", tamari);
  hasse_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->required();

  auto* lambda_cmd = app.add_subcommand("lambda", "Right-comb binarization of a word");
  lambda_cmd->add_option("--word", word)->required();
  lambda_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* fiber_cmd = app.add_subcommand("fiber", "Preimage of a binary word under Lambda");
  fiber_cmd->add_option("--binary", binary)->required();
  fiber_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* project_cmd = app.add_subcommand("project", "The projection pi_{a,b,c}");
  project_cmd->add_option("--word", word)->required();
  project_cmd->add_option("--a", a)->required();
  project_cmd->add_option("--b", b)->required();
  project_cmd->add_option("--c", c)->required();
  project_cmd->add_flag("--tamari", tamari, "Project a binary word in L_m");

  auto* check_cmd = app.add_subcommand("check", "Exhaustive checks");
  check_cmd->require_subcommand(1);
  auto* check_operad = check_cmd->add_subcommand("operad", "Unit, associativity and monotonicity of gamma");
  check_operad->add_option("--max-total", max_total);
  auto* check_tamari = check_cmd->add_subcommand("tamari", "Poset, Lambda or generation checks on L_m");
  check_tamari->add_option("--m", m)->required();
  auto* which = check_tamari->add_option_group("which");
  which->add_flag("--poset", poset);
  which->add_flag("--lambda", lambda);
  which->add_flag("--generation", generation);
  which->require_option(1);
  auto* check_embedding_cmd = check_cmd->add_subcommand("embedding", "The pi_{a,b,c} embeddings of K_m and L_m");
  check_embedding_cmd->add_option("--m", m)->required();
  auto* check_coherence = check_cmd->add_subcommand("coherence", "A_n axioms of a JSON structure");
  check_coherence->add_option("--input", input)->required();
  check_coherence->add_option("--bound", bound);
  check_coherence->add_option("--n", n_opt);
  auto* check_cube = check_cmd->add_subcommand("cube", "Commutativity of a cube, or the cubical lemma on samples");
  auto* cube_src = check_cube->add_option_group("source");
  cube_src->add_option("--input", input);
  cube_src->add_option("--random", samples, "Number of random cube samples");
  cube_src->require_option(1);
  check_cube->add_option("--seed", seed);
  check_cube->add_option("--max-dim", max_dim)->check(CLI::Range(2, 5));
  auto* check_rectify_cmd = check_cmd->add_subcommand("rectify", "Laws of MC and of the rooted-tree bimodule");
  check_rectify_cmd->add_option("--input", input)->required();
  check_rectify_cmd->add_option("--max-len", max_len);
  check_rectify_cmd->add_option("--max-total", max_total, "Bound for the bimodule laws");

  auto* directed_cmd = app.add_subcommand("from-directed", "A_infinity structure from a directed monoidal category");
  directed_cmd->add_option("--input", input)->required();
  directed_cmd->add_option("--bound", bound);
  directed_cmd->add_option("--emit-arity", emit, "Largest arity written to the output tables");

  auto* theta_cmd = app.add_subcommand("build-theta", "Object values of the K-action");
  theta_cmd->add_option("--input", input)->required();
  theta_cmd->add_option("--max-m", max_m);

  auto* rectify_cmd = app.add_subcommand("rectify", "Rectification MC");
  rectify_cmd->require_subcommand(1);
  auto* demo_cmd = rectify_cmd->add_subcommand("demo", "Objects, hom-set sizes and verification of MC");
  demo_cmd->add_option("--input", input)->required();
  demo_cmd->add_option("--max-len", max_len);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  // CLI11 splits "[a,b]" into several values; a trailing space keeps JSON trees whole.
  for (std::string& s : rev)
    if (s.size() > 1 && s.front() == '[' && s.back() == ']') s += ' ';
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*enumerate_cmd) {
      nlohmann::json words = nlohmann::json::array();
      for (const ParenWord& w : enumerate(m))
        if (in_filtration(w, filtration)) {
          if (format == "json")
            words.push_back(render(w));
          else
            out << render(w) << '\n';
        }
      if (format == "json") out << doc({{"m", m}, {"words", words}}).dump() << '\n';
      return 0;
    }
    if (*fvector_cmd) {
      const FVector f = f_vector(m, filtration);
      if (format == "json") {
        out << doc({{"m", m}, {"filtration", filtration ? nlohmann::json(*filtration) : nlohmann::json()},
                    {"f", f.counts}, {"euler", f.euler}})
                   .dump()
            << '\n';
      } else {
        for (std::size_t d = 0; d < f.counts.size(); ++d) out << (d ? " " : "") << f.counts[d];
        out << "\neuler " << f.euler << '\n';
      }
      return 0;
    }
    if (*compose_cmd) {
      std::vector<ParenWord> ws;
      for (const std::string& s : arg_words) ws.push_back(read_word(s));
      const ParenWord r = gamma(read_word(outer), ws);
      if (format == "json")
        out << doc({{"result", to_json(r)}, {"render", render(r)}}).dump() << '\n';
      else
        out << (r.length() == 0 ? "0" : render(r)) << '\n';
      return 0;
    }
    if (*hasse_cmd) {
      std::vector<std::string> labels;
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      if (tamari) {
        TamariPoset p(m);
        std::map<std::string, std::size_t> at;
        for (const LObject& t : p.objects()) {
          at[lkey(t)] = labels.size();
          labels.push_back(render(t));
        }
        for (std::size_t i = 0; i < p.size(); ++i)
          for (const LObject& up : rotation_covers(p.objects()[i])) edges.emplace_back(i, at.at(lkey(up)));
        write_hasse(out, "L" + std::to_string(m), labels, edges, format);
      } else {
        std::vector<ParenWord> ws;
        std::map<std::string, std::size_t> at;
        for (const ParenWord& w : enumerate(m))
          if (in_filtration(w, filtration)) {
            at[canonical_key(w)] = ws.size();
            ws.push_back(w);
            labels.push_back(render(w));
          }
        for (std::size_t i = 0; i < ws.size(); ++i)
          for (const ParenWord& up : upper_covers(ws[i])) {
            auto it = at.find(canonical_key(up));
            if (it != at.end()) edges.emplace_back(i, it->second);
          }
        write_hasse(out, "K" + std::to_string(m), labels, edges, format);
      }
      return 0;
    }
    if (*lambda_cmd) {
      const ParenWord w = read_word(word);
      const LObject l = lambda_obj(w);
      if (format == "json")
        out << doc({{"word", render(w)}, {"lambda", render(l)}}).dump() << '\n';
      else
        out << render(l) << '\n';
      return 0;
    }
    if (*fiber_cmd) {
      const LObject t = read_binary(binary);
      nlohmann::json fs = nlohmann::json::array();
      for (const ParenWord& w : fiber(t)) fs.push_back(render(w));
      const std::string lo = render(min_preimage(t)), hi = render(max_preimage(t));
      if (format == "json") {
        out << doc({{"binary", render(t)}, {"fiber", fs}, {"min", lo}, {"max", hi}}).dump() << '\n';
      } else {
        for (const auto& f : fs) out << f.get<std::string>() << '\n';
        out << "min " << lo << "\nmax " << hi << '\n';
      }
      return 0;
    }
    if (*project_cmd) {
      if (tamari)
        out << render(project_abc(read_binary(word), a, b, c)) << '\n';
      else
        out << render(project_abc(read_word(word), a, b, c)) << '\n';
      return 0;
    }
    if (*check_operad) return report(out, check_operad_laws(max_total), {{"max_total", max_total}});
    if (*check_tamari) {
      if (poset) return report(out, check_poset(m), {{"m", m}, {"check", "poset"}});
      if (lambda) return report(out, check_lambda(m), {{"m", m}, {"check", "lambda"}});
      return report(out, check_generation(m), {{"m", m}, {"check", "generation"}});
    }
    if (*check_embedding_cmd) return report(out, check_embedding(m), {{"m", m}});
    if (*check_coherence) {
      AnData d = an_from_json(read_file(input));
      if (check_coherence->count("--bound")) d.bound = bound;
      if (n_opt) d.n = n_opt;
      return report(out, check_an_axioms(d), {{"bound", d.bound}});
    }
    if (*check_cube) {
      if (!input.empty()) {
        auto [cat, cube] = cube_from_json(read_file(input));
        const CubeVerdict v = check_cube_commutes(cat, cube);
        CheckReport r;
        r.instances = 1;
        if (!v.all_paths_equal) r.fail("cube does not commute", {{"faces_ok", v.faces_ok}});
        return report(out, r, {{"faces_ok", v.faces_ok}, {"all_paths_equal", v.all_paths_equal}});
      }
      std::mt19937_64 rng(seed);
      CheckReport r;
      std::uint64_t faces_ok = 0;
      for (int i = 0; i < samples && r.ok; ++i) {
        const int d = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim - 1));
        CubeSample s = random_cube_sample(rng, d);
        const CubeVerdict v = check_cube_commutes(s.cat, s.cube);
        ++r.instances;
        if (v.faces_ok) ++faces_ok;
        if (v.faces_ok && !v.all_paths_equal) r.fail("faces commute but paths differ", {{"sample", i}, {"seed", seed}});
      }
      return report(out, r, {{"samples", samples}, {"faces_ok", faces_ok}});
    }
    if (*check_rectify_cmd) {
      MCat mc(theta_from_an(an_from_json(read_file(input))), max_len);
      CheckReport r = check_rectify(mc);
      if (r.ok) {
        CheckReport bim = check_bimodule_laws(max_total);
        bim.instances += r.instances;
        r = bim;
      }
      return report(out, r, {{"max_len", max_len}});
    }
    if (*directed_cmd) {
      const DirectedData dd = directed_from_json(read_file(input));
      const CheckReport hyp = check_directed(dd);
      if (!hyp.ok) return report(out, hyp, {{"stage", "hypotheses"}});
      const AnData an = ainfty_from_directed(dd, std::nullopt, bound);
      const CheckReport ax = check_an_axioms(an);
      const CheckReport ids = check_directed_identities(an);
      CheckReport all;
      all.instances = hyp.instances + ax.instances + ids.instances;
      if (!ax.ok) all.fail("axioms: " + ax.failure, ax.witness);
      if (!ids.ok) all.fail("identities: " + ids.failure, ids.witness);
      return report(out, all, {{"hypotheses", hyp.to_json()}, {"axioms", ax.to_json()}, {"identities", ids.to_json()},
                               {"data", to_json(an, emit)}});
    }
    if (*theta_cmd) {
      const AnData d = an_from_json(read_file(input));
      const KAlgebra k = theta_from_an(d);
      const FinCat& C = *d.cat;
      nlohmann::json rows = nlohmann::json::object();
      for (int i = 0; i <= std::min(max_m, k.max_arity()); ++i)
        for (const ParenWord& w : enumerate(i)) {
          const StableTree t = to_tree(w);
          if (detail::max_valence(t) > k.max_arity()) continue;
          const ObjFn f = k.on_objects(t);
          nlohmann::json vals = nlohmann::json::array();
          detail::for_each_index_tuple(i, C.num_objects(), [&](std::span<const int> ix) {
            vals.push_back({detail::names(C, ix), C.object_name(f(ix))});
            return true;
          });
          rows[i == 0 ? "0" : render(w)] = vals;
        }
      out << doc({{"theta", rows}}).dump() << '\n';
      return 0;
    }
    if (*demo_cmd) {
      MCat mc(theta_from_an(an_from_json(read_file(input))), max_len);
      const auto objs = mc.objects();
      nlohmann::json homs = nlohmann::json::array(), names = nlohmann::json::array();
      for (const SeqObject& x : objs) names.push_back(to_json(mc, x));
      for (const SeqObject& x : objs)
        for (const SeqObject& y : objs) {
          const std::size_t count = mc.hom(x, y).size();
          if (count) homs.push_back({{"source", to_json(mc, x)}, {"target", to_json(mc, y)}, {"count", count}});
        }
      const CheckReport laws = check_rectify(mc);
      const CheckReport strict = check_e_strict(mc);
      return report(out, laws,
                    {{"objects", names}, {"homs", homs}, {"laws", laws.to_json()}, {"e_strict", strict.to_json()}});
    }
  } catch (const HypothesisError& e) {
    return report(out, e.report, {{"stage", "hypotheses"}});
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace assoc::cli
