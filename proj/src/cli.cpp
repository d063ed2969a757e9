#include "amo/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "amo/config.hpp"
#include "amo/dependence.hpp"
#include "amo/errors.hpp"
#include "amo/sampling.hpp"

namespace amo::cli {

namespace {

using json = nlohmann::ordered_json;

// Serialize doubles with 12 significant digits, the documented output
// precision of every scalar result.
double sig12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Full-precision form for sample streams, where byte-identical replay
// matters more than readability.
std::string csv_number_exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number()) return csv_number(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// One flat object: JSON on a single line, or a two-line CSV.
void emit_object(std::ostream& out, OutputFormat format, const json& obj) {
  if (format == OutputFormat::json) {
    out << obj.dump() << "\n";
    return;
  }
  std::string header, row;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += it.key();
    row += csv_field(it.value());
  }
  out << header << "\n" << row << "\n";
}

// Array of flat objects sharing the same keys.
void emit_rows(std::ostream& out, OutputFormat format, const json& rows) {
  if (format == OutputFormat::json) {
    out << rows.dump() << "\n";
    return;
  }
  if (rows.empty()) return;
  std::string header;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    if (!header.empty()) header += ',';
    header += it.key();
  }
  out << header << "\n";
  for (const auto& obj : rows) {
    std::string row;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!row.empty()) row += ',';
      row += csv_field(it.value());
    }
    out << row << "\n";
  }
}

struct Options {
  std::string config_path;
  // Model/run flags funnel through apply_config_entry as (key, raw string);
  // CLI11 stores into `value` and we keep declaration order.
  struct Override {
    std::string key;
    std::string value;
    CLI::Option* opt = nullptr;
  };
  std::vector<Override> overrides;

  RunConfig materialize() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    for (const auto& o : overrides)
      if (o.opt->count() > 0) apply_config_entry(cfg, o.key, o.value);
    return cfg;
  }
};

void add_model_flags(CLI::App& app, Options& opts) {
  opts.overrides.reserve(16);
  auto add = [&](const std::string& flag, const std::string& key,
                 const std::string& help) {
    opts.overrides.push_back({key, "", nullptr});
    auto& slot = opts.overrides.back();
    slot.opt = app.add_option(flag, slot.value, help);
  };
  app.add_option("--config", opts.config_path,
                 "key = value config file; explicit flags override it");
  add("--generator", "generator", "exponential|clayton|gumbel|frank");
  add("--theta", "theta", "generator parameter");
  add("--d1", "d1",
      "linear|log_shift|sqrt_complement|sqrt_simple|table1");
  add("--alpha1", "alpha1", "first distortion parameter");
  add("--d2", "d2",
      "linear|log_shift|sqrt_complement|sqrt_simple|table1");
  add("--alpha2", "alpha2", "second distortion parameter");
  add("--hazard3", "hazard3", "systemic hazard: identity|scaled");
  add("--lambda3", "lambda3", "rate for hazard3 = scaled");
  add("--seed", "seed", "RNG seed");
  add("--samples", "samples", "default sample count");
  add("--format", "format", "json|csv");
  add("--abs-tol", "abs_tol", "inversion absolute tolerance override");
  add("--rel-tol", "rel_tol", "inversion relative tolerance override");
  add("--quad-target", "quad_target", "quadrature error target override");
}

json tau_object(const AmoCopula& c) {
  TauResult r = kendall_tau(c);
  json obj;
  obj["tau_G"] = sig12(kendall_tau_base(c.generator()));
  obj["tau_AMO"] = sig12(r.value);
  obj["method"] =
      r.method == TauMethod::closed_form ? "closed_form" : "quadrature";
  return obj;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Archimedean-based Marshall-Olkin copulas: evaluation, "
               "dependence measures, singular component, exact sampling"};
  app.require_subcommand(1);

  Options opts;
  add_model_flags(app, opts);

  double eval_u = 0.0, eval_v = 0.0;
  auto* eval = app.add_subcommand("eval", "evaluate C(u,v)");
  eval->add_option("--u", eval_u, "first coordinate")->required();
  eval->add_option("--v", eval_v, "second coordinate")->required();

  int frontier_points = 0;
  auto* frontier =
      app.add_subcommand("frontier", "tabulate the frontier curve as CSV");
  frontier->add_option("--points", frontier_points, "number of u values")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* tau = app.add_subcommand("tau", "Kendall's tau, base and full model");

  std::vector<double> kendall_ts;
  int kendall_grid = 0;
  auto* kendall =
      app.add_subcommand("kendall", "Kendall distribution function values");
  auto* kendall_t_opt =
      kendall->add_option("--t", kendall_ts, "evaluation points in [0,1]");
  kendall->add_option("--grid", kendall_grid, "tabulate N points as CSV")
      ->excludes(kendall_t_opt)
      ->check(CLI::PositiveNumber);

  auto* tail = app.add_subcommand("tail", "tail-dependence report");

  int singular_grid = 0;
  auto* singular =
      app.add_subcommand("singular", "singular-component mass and curve");
  singular->add_option("--grid", singular_grid,
                       "also tabulate N points of the singular part as CSV")
      ->check(CLI::PositiveNumber);

  double joint_t1 = 0.0, joint_t2 = 0.0;
  auto* joint = app.add_subcommand("joint", "distribution-scale values");
  joint->add_option("--t1", joint_t1, "first failure horizon")->required();
  joint->add_option("--t2", joint_t2, "second failure horizon")->required();

  std::string sample_n, sample_out;
  auto* sample = app.add_subcommand("sample", "draw pairs, stream CSV");
  sample->add_option("--n", sample_n, "sample count (overrides --samples)");
  sample->add_option("--out", sample_out,
                     "write the CSV here instead of stdout");

  std::string equiv_a, equiv_b;
  auto* equiv =
      app.add_subcommand("equiv", "decide whether two configs give one copula");
  equiv->add_option("--config-a", equiv_a, "first model config file")
      ->required();
  equiv->add_option("--config-b", equiv_b, "second model config file")
      ->required();

  auto* table1 = app.add_subcommand(
      "table1", "reference dependence table for the built-in generators");

  for (auto* sub : {eval, frontier, tau, kendall, tail, singular, joint,
                    sample, equiv, table1})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (eval->parsed()) {
      RunConfig cfg = opts.materialize();
      AmoCopula c = build_copula(cfg);
      json obj;
      obj["u"] = sig12(eval_u);
      obj["v"] = sig12(eval_v);
      obj["value"] = sig12(c.evaluate(eval_u, eval_v));
      emit_object(out, cfg.format, obj);
    } else if (frontier->parsed()) {
      RunConfig cfg = opts.materialize();
      AmoCopula c = build_copula(cfg);
      out << "u,h\n";
      for (int j = 0; j < frontier_points; ++j) {
        double u = frontier_points == 1
                       ? 0.5
                       : static_cast<double>(j) / (frontier_points - 1);
        out << csv_number(u) << "," << csv_number(c.frontier(u)) << "\n";
      }
    } else if (tau->parsed()) {
      RunConfig cfg = opts.materialize();
      AmoCopula c = build_copula(cfg);
      emit_object(out, cfg.format, tau_object(c));
    } else if (kendall->parsed()) {
      RunConfig cfg = opts.materialize();
      AmoCopula c = build_copula(cfg);
      if (kendall_grid > 0) {
        out << "t,K_G,K_AMO\n";
        for (int j = 1; j <= kendall_grid; ++j) {
          double t = static_cast<double>(j) / (kendall_grid + 1);
          out << csv_number(t) << ","
              << csv_number(kendall_function_base(c.generator(), t)) << ","
              << csv_number(kendall_function(c, t)) << "\n";
        }
      } else {
        if (kendall_ts.empty())
          throw ConfigError("kendall: pass --t values or --grid N");
        json rows = json::array();
        for (double t : kendall_ts) {
          json obj;
          obj["t"] = sig12(t);
          obj["K_G"] = sig12(kendall_function_base(c.generator(), t));
          obj["K_AMO"] = sig12(kendall_function(c, t));
          rows.push_back(std::move(obj));
        }
        emit_rows(out, cfg.format, rows);
      }
    } else if (tail->parsed()) {
      RunConfig cfg = opts.materialize();
      AmoCopula c = build_copula(cfg);
      TailReport r = tail_parameters(c);
      json obj;
      obj["lower"] = r.lower ? json(sig12(*r.lower)) : json(nullptr);
      obj["upper"] = r.upper ? json(sig12(*r.upper)) : json(nullptr);
      obj["lower_branch"] = r.lower_branch;
      obj["upper_branch"] = r.upper_branch;
      emit_object(out, cfg.format, obj);
    } else if (singular->parsed()) {
      RunConfig cfg = opts.materialize();
      AmoCopula c = build_copula(cfg);
      double mass = c.singular_mass();
      if (singular_grid > 0) {
        JointModel m = representative_joint_model(c);
        // Cover the margin up to its 99.9th percentile.
        double top = invert_monotone([&](double t) { return m.k1(t); },
                                     c.generator().inverse(1e-3));
        out << "t,singular_component\n";
        for (int j = 1; j <= singular_grid; ++j) {
          double t = top * static_cast<double>(j) / singular_grid;
          out << csv_number(t) << "," << csv_number(m.singular_component(t))
              << "\n";
        }
        json obj;
        obj["mass"] = sig12(mass);
        err << obj.dump() << "\n";
      } else {
        json obj;
        obj["mass"] = sig12(mass);
        emit_object(out, cfg.format, obj);
      }
    } else if (joint->parsed()) {
      RunConfig cfg = opts.materialize();
      JointModel m = build_joint_model(cfg);
      double s = m.joint_survival(joint_t1, joint_t2);
      double s1 = m.margin_survival(1, joint_t1);
      double s2 = m.margin_survival(2, joint_t2);
      json obj;
      obj["t1"] = sig12(joint_t1);
      obj["t2"] = sig12(joint_t2);
      obj["survival"] = sig12(s);
      obj["margin1"] = sig12(s1);
      obj["margin2"] = sig12(s2);
      obj["both_failed"] = sig12(1.0 - s1 - s2 + s);
      emit_object(out, cfg.format, obj);
    } else if (sample->parsed()) {
      RunConfig cfg = opts.materialize();
      if (!sample_n.empty()) apply_config_entry(cfg, "samples", sample_n);
      JointModel m = build_joint_model(cfg);
      RngStream rng(cfg.seed);
      std::vector<SamplePair> batch = sample_batch(m, cfg.samples, rng);

      std::ofstream file;
      std::ostream* csv = &out;
      if (!sample_out.empty()) {
        file.open(sample_out);
        if (!file)
          throw ConfigError("cannot open output file '" + sample_out + "'");
        csv = &file;
      }
      *csv << "m1,m2,u,v,simultaneous\n";
      std::size_t ties = 0;
      for (const auto& p : batch) {
        *csv << csv_number_exact(p.m1) << "," << csv_number_exact(p.m2) << ","
             << csv_number_exact(p.u) << "," << csv_number_exact(p.v) << ","
             << (p.simultaneous ? 1 : 0) << "\n";
        if (p.simultaneous) ++ties;
      }
      json summary;
      summary["n"] = batch.size();
      summary["seed"] = cfg.seed;
      summary["empirical_tau"] = sig12(empirical_tau(batch));
      summary["tie_frequency"] =
          sig12(static_cast<double>(ties) / batch.size());
      (sample_out.empty() ? err : out) << summary.dump() << "\n";
    } else if (equiv->parsed()) {
      RunConfig cfg = opts.materialize();
      AmoCopula a = build_copula(parse_config_file(equiv_a));
      AmoCopula b = build_copula(parse_config_file(equiv_b));
      EquivalenceResult r = equivalence_check(a, b);
      json obj;
      obj["equivalent"] = r.equivalent;
      if (r.equivalent) {
        obj["scale"] = sig12(r.scale);
      } else {
        obj["witness_u"] = sig12(r.witness_u);
        obj["witness_v"] = sig12(r.witness_v);
        obj["witness_gap"] = sig12(r.witness_gap);
      }
      obj["max_copula_gap"] = sig12(r.max_copula_gap);
      emit_object(out, cfg.format, obj);
    } else if (table1->parsed()) {
      RunConfig cfg = opts.materialize();
      const std::pair<GeneratorTag, double> models[] = {
          {GeneratorTag::clayton, 2.0},
          {GeneratorTag::gumbel, 1.8},
          {GeneratorTag::frank, 4.0},
      };
      json rows = json::array();
      for (auto [tag, theta] : models) {
        Generator g = make_generator(tag, theta);
        Distortion d1 = make_distortion(DistortionTag::table1);
        Distortion d2 = make_distortion(DistortionTag::table1);
        AmoCopula c(std::move(g), std::move(d1), std::move(d2));
        json obj;
        obj["generator"] = generator_name(tag);
        obj["theta"] = sig12(theta);
        json taus = tau_object(c);
        for (auto it = taus.begin(); it != taus.end(); ++it)
          obj[it.key()] = it.value();
        rows.push_back(std::move(obj));
      }
      emit_rows(out, cfg.format, rows);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const BadParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const DomainMismatch& e) {
    err << "model mismatch: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedGenerator& e) {
    err << "unsupported model: " << e.what() << "\n";
    return 2;
  } catch (const TooFewSamples& e) {
    err << "too few samples: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace amo::cli
