#pragma once

// Command dispatch for the `simplex` tool. Output is JSON lines on `out`,
// diagnostics go to `err`.
//
// Exit codes: 0 success or proved equal, 1 failure, 2 unknown, 64 usage.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplex/adjunction.hpp"
#include "simplex/delta.hpp"
#include "simplex/error.hpp"
#include "simplex/lg_coherence.hpp"
#include "simplex/models.hpp"
#include "simplex/monad.hpp"
#include "simplex/rewrite.hpp"
#include "simplex/syntax.hpp"

namespace simplex::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_unknown = 2;
inline constexpr int exit_usage = 64;

inline constexpr std::size_t default_budget = 100'000;

class usage_error : public error {
 public:
  using error::error;
};

namespace detail {

class Emitter {
 public:
  Emitter(std::ostream& out, bool pretty) : out_(out), pretty_(pretty) {}
  void operator()(const json& j) const { out_ << (pretty_ ? j.dump(2) : j.dump()) << '\n'; }

 private:
  std::ostream& out_;
  bool pretty_;
};

inline FinPoset read_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open poset file " + path);
  FinPoset p = json::parse(in).get<FinPoset>();
  if (p.size() > default_max_poset_size) {
    throw model_error("poset has " + std::to_string(p.size()) + " elements; the limit is " +
                      std::to_string(default_max_poset_size));
  }
  return p;
}

/// Posets to check: the one in `path`, or every poset with at most max_size elements.
inline std::vector<FinPoset> poset_sample(const std::string& path, std::size_t max_size) {
  if (!path.empty()) return {read_poset(path)};
  if (max_size > 4) throw usage_error("--max-size is at most 4");
  std::vector<FinPoset> out;
  for (std::size_t n = 0; n <= max_size; ++n)
    for (auto& p : all_posets(n)) out.push_back(std::move(p));
  return out;
}

inline std::size_t budget_from_env() {
  const char* raw = std::getenv("SIMPLEX_BUDGET");
  if (raw == nullptr || *raw == '\0') return default_budget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument("budget");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw usage_error(std::string("SIMPLEX_BUDGET must be a positive integer, got ") + raw);
  }
}

inline Orientation orientation_from(const std::vector<std::string>& flips) {
  Orientation o;
  for (const auto& name : flips) {
    auto kind = kind_from_name(name);
    bool found = false;
    for (std::size_t j = 0; kind && j < lax_kinds.size(); ++j) {
      if (lax_kinds[j] == *kind) {
        o.flipped[j] = true;
        found = true;
      }
    }
    if (!found) throw usage_error("--flip takes lax cells (etaeta, etamu, mumu, mueta), got " + name);
  }
  return o;
}

inline std::vector<std::string> flipped_names(const Orientation& o) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < lax_kinds.size(); ++j)
    if (o.flipped[j]) out.emplace_back(kind_name(lax_kinds[j]));
  return out;
}

inline TwoCellTerm parse_valid_term(const std::string& text) {
  auto t = parse_term(text);
  if (auto d = validate_term(t)) throw boundary_error("invalid term: " + *d);
  return t;
}

inline json result_json(const EqualityResult& r) {
  json j{{"verdict", r.verdict == Verdict::equal ? "equal" : "unknown"},
         {"reason", r.reason},
         {"depth", r.depth},
         {"nodes", r.nodes}};
  if (r.witness) j["witness"] = *r.witness;
  json proof = json::array();
  for (const auto& s : r.proof) proof.push_back(json{{"move", s.move}, {"term", to_string(s.term)}});
  j["proof"] = proof;
  return j;
}

/// Runs a check over several posets and folds the outcomes by name.
class CheckTally {
 public:
  void add(const NamedCheck& c) {
    auto [it, inserted] = index_.try_emplace(c.name, rows_.size());
    if (inserted) rows_.push_back({c.name, true, 0, ""});
    auto& row = rows_[it->second];
    ++row.posets;
    if (!c.holds && row.holds) {
      row.holds = false;
      row.detail = c.detail;
    }
  }
  void emit(const Emitter& emit, const char* key) const {
    for (const auto& r : rows_) {
      json j{{key, r.name}, {"holds", r.holds}, {"posets", r.posets}};
      if (!r.detail.empty()) j["detail"] = r.detail;
      emit(j);
    }
  }
  bool all() const {
    for (const auto& r : rows_)
      if (!r.holds) return false;
    return true;
  }
  std::size_t holding() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.holds ? 1 : 0;
    return n;
  }

 private:
  struct Row {
    std::string name;
    bool holds;
    std::size_t posets;
    std::string detail;
  };
  std::vector<Row> rows_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial category, lax-Gray monad calculus, and their models", "simplex"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::function<int(const detail::Emitter&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& about,
                  std::function<int(const detail::Emitter&)> run) {
    auto* sub = parent->add_subcommand(name, about);
    sub->callback([&action, run] { action = run; });
    return sub;
  };

  // delta
  auto* delta = app.add_subcommand("delta", "Finite ordinals and monotone maps")->require_subcommand(1);
  std::size_t m = 0, n = 0, limit = 100'000;
  std::string map_text, map_text2;

  auto* hc = leaf(delta, "hom-count", "Number of monotone maps m -> n", [&](const detail::Emitter& emit) {
    emit(json{{"count", hom_count(m, n)}});
    return exit_ok;
  });
  hc->add_option("m", m)->required();
  hc->add_option("n", n)->required();

  auto* en = leaf(delta, "enumerate", "Every monotone map m -> n, one per line", [&](const detail::Emitter& emit) {
    if (hom_count(m, n) > limit) throw resource_limit_error("more than " + std::to_string(limit) + " maps");
    for (const auto& f : enumerate_homs(m, n)) emit(json(f));
    return exit_ok;
  });
  en->add_option("m", m)->required();
  en->add_option("n", n)->required();
  en->add_option("--limit", limit, "Refuse to list more maps than this");

  auto* fa = leaf(delta, "factorize", "Canonical degeneracy/face factorization", [&](const detail::Emitter& emit) {
    const auto f = parse_map(map_text);
    const auto fac = factorize(f);
    const auto word = make_word(f.dom(), fac.to_word());
    emit(json{{"map", f},
              {"degeneracies", fac.degeneracies},
              {"faces", fac.faces},
              {"word", to_string(word)},
              {"gens", word.gens}});
    return exit_ok;
  });
  fa->add_option("map", map_text, "Map literal, e.g. (0,0,1)->2")->required();

  auto* co = leaf(delta, "compose", "g after f", [&](const detail::Emitter& emit) {
    const auto h = compose_maps(parse_map(map_text), parse_map(map_text2));
    emit(json{{"map", h}, {"text", print_map(h)}});
    return exit_ok;
  });
  co->add_option("g", map_text)->required();
  co->add_option("f", map_text2)->required();

  // mnd
  auto* mnd = app.add_subcommand("mnd", "The monad (1, eta, mu) in the simplicial category")->require_subcommand(1);
  leaf(mnd, "verify", "Check the three monad laws", [&](const detail::Emitter& emit) {
    bool ok = true;
    for (const auto& l : verify_monad_laws_delta()) {
      emit(json{{"law", l.name}, {"holds", l.holds}, {"lhs", l.lhs}, {"rhs", l.rhs}});
      ok = ok && l.holds;
    }
    return ok ? exit_ok : exit_failure;
  });

  // lg
  auto* lg = app.add_subcommand("lg", "The free lax-Gray monad calculus")->require_subcommand(1);
  std::string term_text, term_text2;
  std::size_t max_n = 3, depth = 4;
  std::optional<std::size_t> budget;
  std::vector<std::string> flips;

  auto* bd = leaf(lg, "boundary", "Domain and codomain of a cell or term", [&](const detail::Emitter& emit) {
    std::optional<GenTwoCell> cell;
    try {
      cell = parse_cell(term_text);
    } catch (const parse_error&) {
    }
    if (cell) {
      require_valid(*cell);
      const auto b = gen_boundary(*cell);
      emit(json{{"cell", *cell}, {"dom", b.dom}, {"cod", b.cod}, {"dom_text", to_string(b.dom)},
                {"cod_text", to_string(b.cod)}});
    } else {
      const auto t = detail::parse_valid_term(term_text);
      emit(json{{"term", to_string(t)}, {"dom", t.dom}, {"cod", t.cod}, {"dom_text", to_string(t.dom)},
                {"cod_text", to_string(t.cod)}});
    }
    return exit_ok;
  });
  bd->add_option("cell", term_text, "A cell such as a{2,1}, or a term")->required();

  auto* ca = leaf(lg, "check-axioms", "Chain both sides of every axiom instance", [&](const detail::Emitter& emit) {
    const auto o = detail::orientation_from(flips);
    const auto report = check_axiom_boundaries(max_n, o);
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
      emit(json{{"axiom", axiom_name(c.name)}, {"shift_n", c.shift_n}, {"shift_i", c.shift_i}, {"ok", c.ok},
                {"message", c.message}});
      passed += c.ok ? 1 : 0;
    }
    emit(json{{"instances", report.checks.size()}, {"passed", passed}, {"flipped", detail::flipped_names(o)}});
    return report.ok() ? exit_ok : exit_failure;
  });
  ca->add_option("--max-n", max_n, "Largest shift_n");
  ca->add_option("--flip", flips, "Reverse the orientation of these lax cells");

  auto* pr = leaf(lg, "project", "Images of a term's boundaries in the simplicial category",
                  [&](const detail::Emitter& emit) {
                    const auto t = detail::parse_valid_term(term_text);
                    const auto [d, c] = project_to_delta(t);
                    emit(json{{"dom", d}, {"cod", c}, {"equal", d == c}});
                    return d == c ? exit_ok : exit_failure;
                  });
  pr->add_option("term", term_text)->required();

  auto* eq = leaf(lg, "equal", "Bounded search for a rewriting proof", [&](const detail::Emitter& emit) {
    const auto t1 = parse_term(term_text);
    const auto t2 = parse_term(term_text2);
    const std::size_t nodes = budget ? *budget : detail::budget_from_env();
    try {
      const auto r = bounded_equal(t1, t2, {depth, nodes});
      emit(detail::result_json(r));
      return r.verdict == Verdict::equal ? exit_ok : exit_unknown;
    } catch (const resource_limit_error& e) {
      emit(json{{"verdict", "unknown"}, {"reason", "budget-exhausted"}, {"nodes", nodes}, {"detail", e.what()}});
      return exit_unknown;
    }
  });
  eq->add_option("t1", term_text)->required();
  eq->add_option("t2", term_text2)->required();
  eq->add_option("--depth", depth, "Total number of moves allowed");
  eq->add_option("--budget", budget, "Node budget; overrides SIMPLEX_BUDGET");

  leaf(lg, "orientation-audit", "Which lax-cell orientations chain all five axioms", [&](const detail::Emitter& emit) {
    const auto audit = orientation_audit();
    std::size_t chaining = 0;
    for (const auto& oc : audit.outcomes) {
      json chains = json::object();
      for (std::size_t k = 0; k < all_axioms.size(); ++k) chains[std::string(axiom_name(all_axioms[k]))] = oc.chains[k];
      emit(json{{"flipped", detail::flipped_names(oc.orientation)}, {"chains", chains}, {"all", oc.all_chain()}});
      chaining += oc.all_chain() ? 1 : 0;
    }
    emit(json{{"orientations", audit.outcomes.size()}, {"chaining_all", chaining},
              {"shipped_unique", audit.shipped_is_unique()}});
    return audit.shipped_is_unique() ? exit_ok : exit_failure;
  });

  // adj
  auto* adj = app.add_subcommand("adj", "Adjunctions and the monad they induce")->require_subcommand(1);
  std::string model_name = "strict-poset", poset_path;
  std::size_t max_size = 3;
  bool mutate = false, printed_u = false;

  auto* dv = leaf(adj, "derive", "Derive the monad and evaluate it in a model", [&](const detail::Emitter& emit) {
    const auto d = derive_monad();
    emit(json{{"cell", "T"}, {"image", d.t}});
    emit(json{{"cell", "eta"}, {"image", d.unit}});
    emit(json{{"cell", "mu"}, {"image", d.mult}});
    emit(json{{"cell", "a"}, {"image", d.a}});
    emit(json{{"cell", "p"}, {"image", d.p}});
    emit(json{{"cell", "q"}, {"image", d.q}});
    emit(json{{"derived_boundaries", d.checks.size()}, {"consistent", d.consistent()}});

    bool ok = d.consistent();
    std::size_t axioms_passed = 0;
    if (model_name == "strict-poset") {
      detail::CheckTally structure, axioms;
      for (const auto& p : detail::poset_sample(poset_path, max_size)) {
        const auto r = check_derived_in_model(StrictAdjunctionModel{mutate}, p);
        for (const auto& c : r.structure) structure.add(c);
        for (const auto& c : r.axioms) axioms.add(c);
      }
      structure.emit(emit, "check");
      axioms.emit(emit, "axiom");
      ok = ok && structure.all() && axioms.all();
      axioms_passed = axioms.holding();
    } else if (model_name == "delta-self") {
      const auto checks = check_axioms_in_model(DeltaSelfModel{mutate}, ordinal{0}, 3);
      for (const auto& c : checks) {
        json j{{"axiom", c.name}, {"holds", c.holds}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        emit(j);
        axioms_passed += c.holds ? 1 : 0;
      }
      const auto laws = check_monad_laws(DeltaSelfModel{mutate}, ordinal{0});
      for (const auto& c : laws) emit(json{{"check", c.name}, {"holds", c.holds}});
      ok = ok && all_hold(checks) && all_hold(laws);
    } else {
      throw usage_error("unknown model " + model_name);
    }
    emit(json{{"model", model_name}, {"axioms_passed", axioms_passed}, {"ok", ok}});
    return ok ? exit_ok : exit_failure;
  });
  dv->add_option("--model", model_name, "strict-poset or delta-self");
  dv->add_option("--poset", poset_path, "Poset JSON file; default is every poset up to --max-size");
  dv->add_option("--max-size", max_size, "Largest poset checked when no file is given");
  dv->add_flag("--mutate", mutate, "Use a deliberately wrong counit (or multiplication)");

  auto* ax = leaf(adj, "axioms", "The two adjunction axioms as chained terms", [&](const detail::Emitter& emit) {
    const auto axioms = build_adjunction_axioms({printed_u ? UCodomain::printed : UCodomain::reconciled});
    for (const auto& a : axioms) {
      emit(json{{"axiom", a.name}, {"lhs", a.lhs}, {"rhs", a.rhs}, {"boundaries_match", a.lhs.dom == a.rhs.dom &&
                                                                                         a.lhs.cod == a.rhs.cod}});
    }
    return exit_ok;
  });
  ax->add_flag("--printed-u", printed_u, "Read u's codomain as printed (does not typecheck)");

  // model
  auto* model = app.add_subcommand("model", "Concrete monads")->require_subcommand(1);

  auto* la = leaf(model, "laws", "Lift monad laws on finite posets", [&](const detail::Emitter& emit) {
    detail::CheckTally tally;
    for (const auto& p : detail::poset_sample(poset_path, max_size))
      for (const auto& c : check_lift_monad_laws(p, mutate)) tally.add(c);
    tally.emit(emit, "law");
    emit(json{{"ok", tally.all()}});
    return tally.all() ? exit_ok : exit_failure;
  });
  la->add_option("--poset", poset_path, "Poset JSON file; default is every poset up to --max-size");
  la->add_option("--max-size", max_size, "Largest poset checked when no file is given");
  la->add_flag("--mutate", mutate, "Use a deliberately wrong multiplication");

  auto* ev = leaf(model, "eval", "Evaluate a term in a strict model", [&](const detail::Emitter& emit) {
    const auto t = detail::parse_valid_term(term_text);
    if (model_name == "strict-poset") {
      const FinPoset p = poset_path.empty() ? FinPoset::chain(2) : detail::read_poset(poset_path);
      const auto image = evaluate_term(t, LiftPosetModel{mutate}, p);
      emit(json{{"model", model_name}, {"base", p}, {"term", to_string(t)}, {"image", image}, {"identity", true}});
    } else if (model_name == "delta-self") {
      const auto image = evaluate_term(t, DeltaSelfModel{mutate}, ordinal{0});
      emit(json{{"model", model_name}, {"term", to_string(t)}, {"image", image}, {"identity", true}});
    } else {
      throw usage_error("unknown model " + model_name);
    }
    return exit_ok;
  });
  ev->add_option("term", term_text)->required();
  ev->add_option("--model", model_name, "strict-poset or delta-self");
  ev->add_option("--poset", poset_path, "Poset JSON file for strict-poset; default is the 2-chain");
  ev->add_flag("--mutate", mutate, "Use a deliberately wrong multiplication");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    return action(detail::Emitter(out, pretty));
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const parse_error& e) {
    err << "syntax error: " << e.what() << '\n';
    return exit_usage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace simplex::cli
