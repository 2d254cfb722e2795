#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace newmac {

namespace {

struct GlobalOpts {
  std::string input;
  bool json = false;
  bool assert_failures = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::string width;
};

void add_globals(CLI::App* cmd, GlobalOpts& g) {
  cmd->add_option("--input", g.input,
                  "JSON input: inline document (starts with '{') or a file path");
  cmd->add_flag("--json", g.json, "emit the JSON payload instead of plain text");
  cmd->add_flag("--assert", g.assert_failures,
                "exit 1 when the checked property fails");
  cmd->add_option("--seed", g.seed, "RNG seed (required for search)");
  cmd->add_option("--samples", g.samples, "sample budget for search");
  cmd->add_option("--width", g.width, "root isolation width (rational, default 1/1024)");
}

json load_input(const GlobalOpts& g) {
  if (g.input.empty())
    throw DomainError("this subcommand requires --input");
  std::string text;
  if (g.input.front() == '{') {
    text = g.input;
  } else {
    std::ifstream in(g.input);
    if (!in) throw DomainError("cannot open input file '" + g.input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw DomainError("malformed JSON input");
  return doc;
}

Rational width_or_default(const GlobalOpts& g) {
  if (g.width.empty()) return default_isolation_width();
  Rational w = Rational::parse(g.width);
  if (w.sign() <= 0) throw DomainError("--width must be positive");
  return w;
}

std::string vec_text(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::string roots_text(const RootIsolation& iso) {
  std::string out = "[";
  for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
    const auto& e = iso.intervals[i];
    if (i) out += ", ";
    if (e.is_point()) out += e.lo.to_string();
    else out += "(" + e.lo.to_string() + ", " + e.hi.to_string() + ")";
    if (e.multiplicity != 1) out += "^" + std::to_string(e.multiplicity);
  }
  return out + "]";
}

std::string gap_text(const GapReport& r) {
  std::string line =
      "gap = " + r.gap.to_string() + (r.holds ? " (holds)" : " (violated)");
  if (r.theta)
    line += "\ntheta = " + r.theta->to_string() +
            ", margin = " + r.margin.to_string();
  if (r.equality)
    line += "\nequality: " + std::string(to_string(r.equality_cause));
  if (!r.condition_c_verified)
    line += "\nnote: alpha does not satisfy Condition C; no theorem backs this verdict";
  if (r.outside_theorem_range)
    line += "\nnote: k exceeds the theorem's stated range (proof-range evaluation)";
  return line;
}

// One evaluated subcommand: payload, human text, and whether the checked
// property failed (consumed by --assert).
struct Outcome {
  json payload;
  std::string text;
  bool failed = false;
};

Outcome do_sigma(const json& doc) {
  const VariableVector x = x_from_input(doc);
  const auto sig = sigma_all(x);
  if (doc.contains("k")) {
    const long k = long_from_input(doc, "k");
    const Rational v = sigma_at(sig, k);
    return {json{{"k", k}, {"value", to_json(v)}},
            "sigma_" + std::to_string(k) + " = " + v.to_string(), false};
  }
  return {json{{"sigma", to_json(std::span<const Rational>(sig))}},
          "sigma = " + vec_text(sig), false};
}

Outcome do_e_mean(const json& doc) {
  const VariableVector x = x_from_input(doc);
  const long k = long_from_input(doc, "k");
  const Rational v = e_mean(x, k);
  return {json{{"k", k}, {"value", to_json(v)}},
          "E_" + std::to_string(k) + " = " + v.to_string(), false};
}

Outcome do_eval_s(const json& doc) {
  const VariableVector x = x_from_input(doc);
  const AlphaVector a = alpha_from_input(doc);
  const long k = long_from_input(doc, "k");
  const Rational v = S_eval(x, a, k);
  return {json{{"k", k}, {"value", to_json(v)}},
          "S_" + std::to_string(k) + " = " + v.to_string(), false};
}

Outcome do_eval_q(const json& doc) {
  const VariableVector x = x_from_input(doc);
  const AlphaVector a = alpha_from_input(doc);
  const long k = long_from_input(doc, "k");
  const Rational v = Q_eval(x, a, k);
  return {json{{"k", k}, {"value", to_json(v)}},
          "Q_" + std::to_string(k) + " = " + v.to_string(), false};
}

Outcome do_condition_c(const json& doc, const GlobalOpts& g) {
  const AlphaVector a = alpha_from_input(doc);
  const ConditionCReport rep = check_condition_c(a, width_or_default(g));
  std::string text = std::string("Condition C ") +
                     (rep.holds ? "holds" : "fails") +
                     ": f = " + rep.f.to_string();
  if (rep.holds) text += ", roots " + roots_text(rep.roots);
  return {to_json(rep), std::move(text), !rep.holds};
}

Outcome gap_outcome(const GapReport& rep) {
  return {to_json(rep), gap_text(rep), !rep.holds};
}

Outcome do_maclaurin(const json& doc) {
  const VariableVector x = x_from_input(doc);
  const AlphaVector a = alpha_from_input(doc);
  const long k = long_from_input(doc, "k");
  const MaclaurinChainReport rep = maclaurin_chain_S(x, a, k);
  std::string text = std::string("Maclaurin chain ") +
                     (rep.holds ? "holds" : "violated");
  for (const auto& link : rep.links)
    text += "\n  m=" + std::to_string(link.m) + ": gap = " +
            link.report.gap.to_string() +
            (link.report.holds ? " (holds)" : " (violated)");
  return {to_json(rep), std::move(text), !rep.holds};
}

Outcome do_certify(const json& doc) {
  const std::vector<Rational> E = rationals_from_json(require_key(doc, "E"));
  const AlphaVector a = alpha_from_input(doc);
  const long k = long_from_input(doc, "k");
  const auto cert = certify_complex(E, a, k);
  if (!cert)
    return {json{{"complex_roots_certified", false}, {"certificate", nullptr}},
            "no conclusion: S-Newton inequality holds at k = " + std::to_string(k),
            false};
  return {json{{"complex_roots_certified", true}, {"certificate", to_json(*cert)}},
          "complex roots certified: S_" + std::to_string(k) +
              "^2 - S_" + std::to_string(k - 1) + " S_" + std::to_string(k + 1) +
              " = " + cert->gap.to_string() + " < 0, so g = " +
              cert->g.to_string() + " is not real-rooted",
          true};
}

Outcome do_augment(const json& doc) {
  const VariableVector x = x_from_input(doc);
  const std::vector<Rational> beta = rationals_from_json(require_key(doc, "beta"));
  const VariableVector y = augment(x, beta);
  return {json{{"x", to_json(std::span<const Rational>(y.entries()))}},
          "Y = " + vec_text(y.entries()), false};
}

Outcome do_lagrangian(const json& doc) {
  const long n = long_from_input(doc, "n");
  const SpecialLagrangian sl = special_lagrangian_alpha(n);
  return {to_json(sl),
          "k = " + std::to_string(sl.k) + ", s = " + std::to_string(sl.s) +
              ", alpha = " + vec_text(sl.alpha.entries()) +
              ", sign = " + std::to_string(sl.sign),
          false};
}

GapForm form_from_input(const json& doc) {
  if (!doc.contains("target") && !doc.contains("form")) return GapForm::Q;
  const json& j = doc.contains("target") ? doc.at("target") : doc.at("form");
  if (j.is_string()) {
    const std::string v = j.get<std::string>();
    if (v == "S" || v == "S-form") return GapForm::S;
    if (v == "Q" || v == "Q-form") return GapForm::Q;
  }
  throw DomainError("form must be \"S\" or \"Q\", got '" + j.dump() + "'");
}

Outcome do_search(const json& doc, const GlobalOpts& g) {
  SearchConfig cfg{alpha_from_input(doc),
                   long_from_input(doc, "k"),
                   long_from_input(doc, "n"),
                   Natural(1),
                   Natural(12),
                   Natural(12),
                   0,
                   form_from_input(doc)};
  if (g.samples) cfg.samples = Natural(*g.samples);
  else if (doc.contains("samples"))
    cfg.samples = Natural(static_cast<unsigned long>(long_from_input(doc, "samples")));
  else cfg.samples = Natural(1000000ul);
  if (doc.contains("numerator_bound"))
    cfg.numerator_bound =
        Natural(static_cast<unsigned long>(long_from_input(doc, "numerator_bound")));
  if (doc.contains("denominator_bound"))
    cfg.denominator_bound =
        Natural(static_cast<unsigned long>(long_from_input(doc, "denominator_bound")));
  if (g.seed) cfg.seed = *g.seed;
  else if (doc.contains("seed"))
    cfg.seed = static_cast<std::uint64_t>(long_from_input(doc, "seed"));
  else
    throw DomainError("search requires a seed: pass --seed or an input key \"seed\"");

  const auto w = find_counterexample(cfg);
  if (!w)
    return {json{{"found", false}, {"samples", cfg.samples.to_string()}},
            "no witness in " + cfg.samples.to_string() + " samples", false};
  return {json{{"found", true},
               {"witness", to_json(*w)},
               {"sample_index", w->sample_index}},
          "witness at sample " + std::to_string(w->sample_index) + ": x = " +
              vec_text(w->x.entries()) + ", gap = " + w->gap.to_string(),
          true};
}

Outcome do_sweep(const json& doc) {
  const AlphaVector a = alpha_from_input(doc);
  const long k = long_from_input(doc, "k");
  const GapForm form = form_from_input(doc);
  const json& grid_json = require_key(doc, "grid");
  if (!grid_json.is_array())
    throw DomainError("input key 'grid' must be an array of vectors");
  std::vector<VariableVector> grid;
  grid.reserve(grid_json.size());
  for (const auto& row : grid_json)
    grid.emplace_back(rationals_from_json(row));
  const auto reports = sweep_gap(a, k, form, grid);
  json arr = json::array();
  std::string text;
  bool failed = false;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    arr.push_back(to_json(reports[i]));
    if (i) text += "\n";
    text += vec_text(grid[i].entries()) + ": gap = " + reports[i].gap.to_string() +
            (reports[i].holds ? " (holds)" : " (violated)");
    failed = failed || !reports[i].holds;
  }
  if (reports.empty()) text = "empty grid";
  return {json{{"reports", std::move(arr)}}, std::move(text), failed};
}

} // namespace

CommandResult run(const std::vector<std::string>& args) {
  GlobalOpts g;
  CLI::App app{"exact evaluation and verification of Newton-Maclaurin-type "
               "inequalities for combined symmetric functions"};
  app.require_subcommand(0, 1);
  add_globals(&app, g);

  struct Entry {
    CLI::App* cmd;
    std::function<Outcome(const GlobalOpts&)> fn;
  };
  std::vector<Entry> entries;
  auto add = [&](CLI::App* parent, const std::string& name, const char* desc,
                 std::function<Outcome(const GlobalOpts&)> fn) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    add_globals(cmd, g);
    entries.push_back({cmd, std::move(fn)});
    return cmd;
  };

  add(&app, "sigma", "elementary symmetric polynomials of x",
      [&](const GlobalOpts& go) { return do_sigma(load_input(go)); });
  add(&app, "e-mean", "normalized symmetric mean E_k(x)",
      [&](const GlobalOpts& go) { return do_e_mean(load_input(go)); });
  add(&app, "eval-s", "combined mean S_{k;s}(x) = E_k + sum alpha_i E_{k-i}",
      [&](const GlobalOpts& go) { return do_eval_s(load_input(go)); });
  add(&app, "eval-q", "combined form Q_{k;s}(x) = sigma_k + sum alpha_i sigma_{k-i}",
      [&](const GlobalOpts& go) { return do_eval_q(load_input(go)); });
  add(&app, "condition-c", "decide whether f(t) = t^s + alpha_1 t^{s-1} + ... is real-rooted",
      [&](const GlobalOpts& go) { return do_condition_c(load_input(go), go); });
  add(&app, "gap-e", "classic Newton gap E_k^2 - E_{k-1}E_{k+1}",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        return gap_outcome(newton_gap_E(x_from_input(doc), long_from_input(doc, "k")));
      });
  add(&app, "gap-sigma", "theta-form Newton gap on raw sigma_k",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        return gap_outcome(sigma_gap(x_from_input(doc), long_from_input(doc, "k")));
      });
  add(&app, "gap-s", "Newton gap for S_{k;s}",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        return gap_outcome(newton_gap_S(x_from_input(doc), alpha_from_input(doc),
                                        long_from_input(doc, "k")));
      });
  add(&app, "gap-q", "theta-form Newton gap for Q_{k;s}",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        return gap_outcome(q_gap(x_from_input(doc), alpha_from_input(doc),
                                 long_from_input(doc, "k")));
      });
  add(&app, "maclaurin", "Maclaurin chain S_1 >= S_2^{1/2} >= ... >= S_k^{1/k}",
      [&](const GlobalOpts& go) { return do_maclaurin(load_input(go)); });
  add(&app, "chain-s", "generalized Newton inequality S_l S_{k-1} >= S_{l-1} S_k",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        return gap_outcome(general_newton_S(x_from_input(doc), alpha_from_input(doc),
                                            long_from_input(doc, "l"),
                                            long_from_input(doc, "k")));
      });
  add(&app, "chain-q", "generalized Newton inequality for Q with telescoped theta",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        return gap_outcome(general_newton_Q(x_from_input(doc), alpha_from_input(doc),
                                            long_from_input(doc, "l"),
                                            long_from_input(doc, "k")));
      });
  add(&app, "certify-complex", "certify complex roots from an S-Newton violation",
      [&](const GlobalOpts& go) { return do_certify(load_input(go)); });

  CLI::App* construct = app.add_subcommand(
      "construct", "proof-machinery polynomials P1, P2, P3 and their checks");
  construct->require_subcommand(1);
  add_globals(construct, g);
  add(construct, "p1", "P1 = P'/n from x",
      [&](const GlobalOpts& go) {
        const Polynomial p = build_P1(x_from_input(load_input(go)));
        return Outcome{json{{"p1", to_json(p)}}, "P1 = " + p.to_string(), false};
      });
  add(construct, "p2", "companion P2 with P = t*P1 - P2",
      [&](const GlobalOpts& go) {
        const Polynomial p = build_P2(x_from_input(load_input(go)));
        return Outcome{json{{"p2", to_json(p)}}, "P2 = " + p.to_string(), false};
      });
  add(construct, "p3", "P3 = P2 + b*P1",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        const Polynomial p =
            build_P3(x_from_input(doc), rational_from_json(require_key(doc, "b")));
        return Outcome{json{{"p3", to_json(p)}}, "P3 = " + p.to_string(), false};
      });
  add(construct, "decompose", "verify P = t*P1 - P2 exactly",
      [&](const GlobalOpts& go) {
        const bool ok = verify_P_decomposition(x_from_input(load_input(go)));
        return Outcome{json{{"holds", ok}},
                       std::string("P = t*P1 - P2: ") + (ok ? "verified" : "FAILED"),
                       !ok};
      });
  add(construct, "interlace", "verify the roots of P1 and P2 interlace",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        const InterlacingReport rep =
            verify_interlacing(x_from_input(doc), width_or_default(go));
        std::string text = rep.interlaced ? "interlacing verified" : "interlacing FAILED";
        text += "\n  P1 roots: " + roots_text(rep.p1_roots);
        text += "\n  P2 roots: " + roots_text(rep.p2_roots);
        return Outcome{to_json(rep), std::move(text), !rep.interlaced};
      });
  add(construct, "p3-real", "verify P3 = P2 + b*P1 is real-rooted",
      [&](const GlobalOpts& go) {
        const json doc = load_input(go);
        const RealRootednessReport rep = verify_P3_real_rooted(
            x_from_input(doc), rational_from_json(require_key(doc, "b")),
            width_or_default(go));
        std::string text = rep.real_rooted ? "P3 is real-rooted" : "P3 has complex roots";
        text += ", roots " + roots_text(rep.roots);
        return Outcome{to_json(rep), std::move(text), !rep.real_rooted};
      });

  add(&app, "augment", "Y = (beta_1..beta_s, x_1..x_n) with sigma_k(Y) = Q_{k;s}(x)",
      [&](const GlobalOpts& go) { return do_augment(load_input(go)); });
  add(&app, "lagrangian", "special-Lagrangian alpha for n variables",
      [&](const GlobalOpts& go) { return do_lagrangian(load_input(go)); });
  add(&app, "search", "randomized counterexample search (requires a seed)",
      [&](const GlobalOpts& go) { return do_search(load_input(go), go); });
  add(&app, "sweep", "evaluate the chosen gap over a grid of vectors",
      [&](const GlobalOpts& go) { return do_sweep(load_input(go)); });

  CommandResult result;
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("newmac");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    result.json_mode = g.json;
    if (e.get_exit_code() == 0) {
      result.status = 0;
      result.text = app.help();
      result.payload = json{{"help", app.help()}};
      return result;
    }
    result.status = 2;
    result.text = std::string("error: ") + e.what();
    result.payload = json{{"error", e.what()}};
    return result;
  }

  result.json_mode = g.json;
  const Entry* chosen = nullptr;
  for (const auto& e : entries)
    if (e.cmd->parsed()) chosen = &e;
  if (chosen == nullptr) {
    result.status = 2;
    result.text = "error: missing subcommand\n" + app.help();
    result.payload = json{{"error", "missing subcommand"}};
    return result;
  }

  try {
    Outcome out = chosen->fn(g);
    result.payload = std::move(out.payload);
    result.text = std::move(out.text);
    result.status = (out.failed && g.assert_failures) ? 1 : 0;
  } catch (const DomainError& e) {
    result.status = 2;
    result.text = std::string("error: ") + e.what();
    result.payload = json{{"error", e.what()}};
  } catch (const HypothesisError& e) {
    result.status = 3;
    result.text = std::string("hypothesis error: ") + e.what();
    result.payload = json{{"error", e.what()}};
  }
  return result;
}

} // namespace newmac
