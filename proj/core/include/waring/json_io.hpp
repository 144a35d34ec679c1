#pragma once

#include <string>

#include "waring/instances.hpp"
#include "waring/lemmas.hpp"
#include "waring/rank.hpp"
#include "waring/sac.hpp"

namespace waring {

/// JSON encoders. Rationals are encoded as strings ("p" or "p/q") to stay
/// exact; forms are encoded as their canonical text (see print_form), with
/// variables below x_vars named x<i> and the rest y<j>. All output is
/// deterministic (ordered keys, canonical term order).
std::string to_json(const Rational& r);
std::string to_json(const Form& f, std::size_t x_vars);
std::string to_json(const Decomposition& d);
std::string to_json(const RankCertificate& c, std::size_t x_vars);
std::string to_json(const PointSet& z);
std::string to_json(const LinearSubspace& s);
std::string to_json(const LemmaVerdict& v);
std::string to_json(const SacReport& r, const VariableSplit& split);
std::string to_json(const SacInstance& inst);
std::string to_json(const CelineConfig& cfg);
std::string to_json(const ResidConfig& cfg);
std::string to_json(const SkewConfig& cfg);
std::string to_json(const Add2Config& cfg);

/// Decoders; throw std::invalid_argument on malformed input.
PointSet point_set_from_json(const std::string& text);
CelineConfig celine_config_from_json(const std::string& text);
ResidConfig resid_config_from_json(const std::string& text);
SkewConfig skew_config_from_json(const std::string& text);
Add2Config add2_config_from_json(const std::string& text);

}  // namespace waring
