#ifndef AMO_CONFIG_HPP
#define AMO_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "amo/copula.hpp"
#include "amo/hazard.hpp"

namespace amo {

enum class H3Kind { identity, scaled };
enum class OutputFormat { json, csv };

// One run's model and execution settings. Parsed from `key = value` lines
// and/or CLI flags; flags win.
struct RunConfig {
  GeneratorTag generator = GeneratorTag::clayton;
  std::optional<double> theta;

  DistortionTag d1 = DistortionTag::linear;
  std::optional<double> alpha1;
  DistortionTag d2 = DistortionTag::linear;
  std::optional<double> alpha2;

  H3Kind h3 = H3Kind::identity;
  double lambda3 = 1.0;

  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  OutputFormat format = OutputFormat::json;

  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double quad_target = 1e-8;
};

// Parse `key = value` text ('#' comments, blank lines ignored). Throws
// ConfigError naming the offending key on unknown keys or bad values.
RunConfig parse_config_text(std::istream& in);
RunConfig parse_config_file(const std::string& path);

// Apply one key=value assignment (shared by file parser and tests).
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);

// Builders; validate presence/range of parameters, throwing ConfigError
// with the field name.
Generator build_generator(const RunConfig& cfg);
AmoCopula build_copula(const RunConfig& cfg);
HazardFn build_h3(const RunConfig& cfg);
JointModel build_joint_model(const RunConfig& cfg);

std::string generator_name(GeneratorTag tag);
std::string distortion_name(DistortionTag tag);

}  // namespace amo

#endif
