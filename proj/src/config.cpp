#include "amo/config.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "amo/errors.hpp"

namespace amo {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double x = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    std::uint64_t x = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a non-negative integer: '" + value + "'");
  }
}

GeneratorTag parse_generator(const std::string& key,
                             const std::string& value) {
  if (value == "exponential") return GeneratorTag::exponential;
  if (value == "clayton") return GeneratorTag::clayton;
  if (value == "gumbel") return GeneratorTag::gumbel;
  if (value == "frank") return GeneratorTag::frank;
  throw ConfigError(key + ": unknown generator '" + value + "'");
}

DistortionTag parse_distortion(const std::string& key,
                               const std::string& value) {
  if (value == "linear") return DistortionTag::linear;
  if (value == "log_shift") return DistortionTag::log_shift;
  if (value == "sqrt_complement") return DistortionTag::sqrt_complement;
  if (value == "sqrt_simple") return DistortionTag::sqrt_simple;
  if (value == "table1") return DistortionTag::table1;
  throw ConfigError(key + ": unknown distortion '" + value + "'");
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "generator") {
    cfg.generator = parse_generator(key, value);
  } else if (key == "theta") {
    cfg.theta = parse_double(key, value);
  } else if (key == "d1") {
    cfg.d1 = parse_distortion(key, value);
  } else if (key == "alpha1") {
    cfg.alpha1 = parse_double(key, value);
  } else if (key == "d2") {
    cfg.d2 = parse_distortion(key, value);
  } else if (key == "alpha2") {
    cfg.alpha2 = parse_double(key, value);
  } else if (key == "hazard3") {
    if (value == "identity")
      cfg.h3 = H3Kind::identity;
    else if (value == "scaled")
      cfg.h3 = H3Kind::scaled;
    else
      throw ConfigError("hazard3: expected identity or scaled, got '" + value +
                        "'");
  } else if (key == "lambda3") {
    cfg.lambda3 = parse_double(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_uint(key, value);
  } else if (key == "samples") {
    cfg.samples = static_cast<std::size_t>(parse_uint(key, value));
  } else if (key == "format") {
    if (value == "json")
      cfg.format = OutputFormat::json;
    else if (value == "csv")
      cfg.format = OutputFormat::csv;
    else
      throw ConfigError("format: expected json or csv, got '" + value + "'");
  } else if (key == "abs_tol") {
    cfg.abs_tol = parse_double(key, value);
    if (cfg.abs_tol <= 0.0) throw ConfigError("abs_tol: must be positive");
  } else if (key == "rel_tol") {
    cfg.rel_tol = parse_double(key, value);
    if (cfg.rel_tol <= 0.0) throw ConfigError("rel_tol: must be positive");
  } else if (key == "quad_target") {
    cfg.quad_target = parse_double(key, value);
    if (cfg.quad_target <= 0.0)
      throw ConfigError("quad_target: must be positive");
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

RunConfig parse_config_text(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    apply_config_entry(cfg, key, value);
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config_text(in);
}

Generator build_generator(const RunConfig& cfg) {
  if (cfg.generator == GeneratorTag::exponential)
    return make_generator(GeneratorTag::exponential);
  if (!cfg.theta) throw ConfigError("theta: required for " +
                                    generator_name(cfg.generator));
  double theta = *cfg.theta;
  switch (cfg.generator) {
    case GeneratorTag::clayton:
      if (theta <= -0.5 || theta == 0.0)
        throw ConfigError("theta: clayton needs theta in (-1/2,0) u (0,inf)");
      break;
    case GeneratorTag::gumbel:
      if (theta < 1.0) throw ConfigError("theta: gumbel needs theta >= 1");
      break;
    case GeneratorTag::frank:
      if (theta <= 0.0) throw ConfigError("theta: frank needs theta > 0");
      break;
    default:
      break;
  }
  return make_generator(cfg.generator, theta);
}

namespace {

Distortion build_one_distortion(DistortionTag tag,
                                const std::optional<double>& alpha,
                                const std::string& field, double domain_end) {
  if (tag == DistortionTag::table1) {
    if (alpha)
      throw ConfigError(field + ": table1 takes no parameter");
    return make_distortion(tag, std::nullopt, domain_end);
  }
  if (!alpha)
    throw ConfigError(field + ": required for " + distortion_name(tag));
  if (tag == DistortionTag::linear) {
    if (*alpha <= 0.0 || *alpha >= 1.0)
      throw ConfigError(field + ": linear needs alpha in (0,1)");
  } else if (*alpha <= 0.0) {
    throw ConfigError(field + ": needs alpha > 0");
  }
  return make_distortion(tag, alpha, domain_end);
}

}  // namespace

AmoCopula build_copula(const RunConfig& cfg) {
  Generator g = build_generator(cfg);
  double end = g.domain_end();
  Distortion d1 = build_one_distortion(cfg.d1, cfg.alpha1, "alpha1", end);
  Distortion d2 = build_one_distortion(cfg.d2, cfg.alpha2, "alpha2", end);
  return AmoCopula(std::move(g), std::move(d1), std::move(d2));
}

HazardFn build_h3(const RunConfig& cfg) {
  if (cfg.h3 == H3Kind::identity) return identity_hazard();
  if (cfg.lambda3 <= 0.0) throw ConfigError("lambda3: needs lambda > 0");
  return scaled_hazard(cfg.lambda3);
}

JointModel build_joint_model(const RunConfig& cfg) {
  Generator g = build_generator(cfg);
  double end = g.domain_end();
  Distortion d1 = build_one_distortion(cfg.d1, cfg.alpha1, "alpha1", end);
  Distortion d2 = build_one_distortion(cfg.d2, cfg.alpha2, "alpha2", end);
  HazardTriple h = hazards_from_distortions(d1, d2, build_h3(cfg));
  return JointModel(std::move(g), std::move(h));
}

std::string generator_name(GeneratorTag tag) {
  switch (tag) {
    case GeneratorTag::exponential: return "exponential";
    case GeneratorTag::clayton: return "clayton";
    case GeneratorTag::gumbel: return "gumbel";
    case GeneratorTag::frank: return "frank";
    case GeneratorTag::custom: break;
  }
  return "custom";
}

std::string distortion_name(DistortionTag tag) {
  switch (tag) {
    case DistortionTag::linear: return "linear";
    case DistortionTag::log_shift: return "log_shift";
    case DistortionTag::sqrt_complement: return "sqrt_complement";
    case DistortionTag::sqrt_simple: return "sqrt_simple";
    case DistortionTag::table1: return "table1";
    case DistortionTag::custom: break;
  }
  return "custom";
}

}  // namespace amo
