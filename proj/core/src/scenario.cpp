// SPDX-License-Identifier: Apache-2.0
#include "hetnet/scenario.hpp"

#include <fmt/format.h>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string_view>

#include "hetnet/errors.hpp"

namespace hetnet {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + key);
  }
  return value;
}

struct Field {
  std::string section;
  std::string key;
  std::function<void(Scenario&, const std::string&)> set;
  std::function<std::string(const Scenario&)> get;

  std::string path() const { return section + "." + key; }
};

template <typename Access>
Field number_field(std::string section, std::string key, Access access) {
  Field f{std::move(section), std::move(key), {}, {}};
  const std::string path = f.path();
  f.set = [access, path](Scenario& s, const std::string& v) {
    auto& ref = access(s);
    ref = parse_number<std::remove_reference_t<decltype(ref)>>(path, v);
  };
  f.get = [access](const Scenario& s) { return fmt::format("{}", access(s)); };
  return f;
}

#define HETNET_NUMBER(section, key, member) \
  number_field(section, key, [](auto& s) -> auto& { return s.member; })

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> t = {
        HETNET_NUMBER("layout", "isd_m", isd_m),
        HETNET_NUMBER("layout", "picos_per_sector", picos_per_sector),
        HETNET_NUMBER("layout", "users_per_sector", users_per_sector),
        HETNET_NUMBER("layout", "min_pico_macro_distance_m", placement.min_pico_macro_m),
        HETNET_NUMBER("layout", "min_pico_pico_distance_m", placement.min_pico_pico_m),
        HETNET_NUMBER("layout", "user_seed_radius_m", placement.seed_radius_m),
        HETNET_NUMBER("layout", "min_user_bs_distance_m", placement.min_user_bs_m),

        HETNET_NUMBER("radio", "macro_pl_intercept_db", radio.macro_pl_intercept_db),
        HETNET_NUMBER("radio", "macro_pl_slope_db", radio.macro_pl_slope_db),
        HETNET_NUMBER("radio", "pico_pl_intercept_db", radio.pico_pl_intercept_db),
        HETNET_NUMBER("radio", "pico_pl_slope_db", radio.pico_pl_slope_db),
        HETNET_NUMBER("radio", "macro_shadowing_sigma_db", radio.macro_shadowing_db),
        HETNET_NUMBER("radio", "pico_shadowing_sigma_db", radio.pico_shadowing_db),
        HETNET_NUMBER("radio", "macro_rx_gain_db", radio.macro_rx_gain_db),
        HETNET_NUMBER("radio", "pico_rx_gain_db", radio.pico_rx_gain_db),
        HETNET_NUMBER("radio", "penetration_loss_db", radio.penetration_loss_db),
        HETNET_NUMBER("radio", "antenna_theta_3db_deg", radio.theta_3db_deg),
        HETNET_NUMBER("radio", "antenna_max_attenuation_db", radio.max_attenuation_db),
        HETNET_NUMBER("radio", "macro_rs_power_dbm", radio.macro_rs_power_dbm),
        HETNET_NUMBER("radio", "pico_rs_power_dbm", radio.pico_rs_power_dbm),
        HETNET_NUMBER("radio", "noise_psd_dbm_hz", noise.psd_dbm_hz),
        HETNET_NUMBER("radio", "noise_figure_db", noise.noise_figure_db),
        HETNET_NUMBER("radio", "rb_bandwidth_hz", noise.rb_bandwidth_hz),
        HETNET_NUMBER("radio", "total_data_rbs", sched.total_rbs),
        HETNET_NUMBER("radio", "rbs_per_user", sched.rbs_per_user),
        HETNET_NUMBER("radio", "max_ue_power_dbm", pmax_dbm),

        HETNET_NUMBER("power", "p0_dbm", p0_dbm),

        HETNET_NUMBER("selection", "max_passes", max_passes),

        HETNET_NUMBER("campaign", "drops", drops),
        HETNET_NUMBER("campaign", "seed", seed),
        HETNET_NUMBER("campaign", "workers", workers),
    };
    t.push_back({"power", "alphas",
                 [](Scenario& s, const std::string& v) { s.alphas = parse_alpha_list(v); },
                 [](const Scenario& s) { return fmt::format("{}", fmt::join(s.alphas, ", ")); }});
    t.push_back({"selection", "strategies",
                 [](Scenario& s, const std::string& v) { s.strategies = parse_strategy_list(v); },
                 [](const Scenario& s) {
                   std::vector<std::string> labels;
                   for (const auto& st : s.strategies) labels.push_back(st.label());
                   return fmt::format("{}", fmt::join(labels, ", "));
                 }});
    t.push_back({"power", "pl_basis",
                 [](Scenario& s, const std::string& v) {
                   s.pl_basis = parse_pl_basis(std::string(trim(v)));
                 },
                 [](const Scenario& s) { return std::string(pl_basis_name(s.pl_basis)); }});
    t.push_back({"radio", "block_policy",
                 [](Scenario& s, const std::string& v) {
                   s.block_policy = parse_block_policy(std::string(trim(v)));
                 },
                 [](const Scenario& s) { return std::string(block_policy_name(s.block_policy)); }});
    t.push_back({"campaign", "output_dir",
                 [](Scenario& s, const std::string& v) { s.output_dir = std::string(trim(v)); },
                 [](const Scenario& s) { return s.output_dir; }});
    return t;
  }();
  return table;
}

#undef HETNET_NUMBER

}  // namespace

std::vector<StrategyConfig> Scenario::default_strategies() {
  return parse_strategy_list("rsrp, pl, cre6, interference");
}

std::vector<StrategyConfig> parse_strategy_list(const std::string& text) {
  std::vector<StrategyConfig> out;
  for (const std::string& item : split_list(text)) out.push_back(StrategyConfig::parse(item));
  if (out.empty()) throw ConfigError("strategy list is empty");
  return out;
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_number<double>("alpha", item));
  if (out.empty()) throw ConfigError("alpha list is empty");
  return out;
}

Scenario parse_scenario(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  Scenario s;
  std::set<std::string> seen;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) {
      throw ConfigError("key '" + section + "' must be inside a [section]");
    }
    for (const auto& [key, value] : body) {
      const std::string path = section + "." + key;
      const auto& table = fields();
      const auto it = std::find_if(table.begin(), table.end(),
                                   [&](const Field& f) { return f.path() == path; });
      if (it == table.end()) throw ConfigError("unknown config key '" + path + "'");
      if (!seen.insert(path).second) throw ConfigError("duplicate config key '" + path + "'");
      it->set(s, value.data());
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_config(const Scenario& scenario) {
  std::string out;
  for (const char* section : {"layout", "radio", "power", "selection", "campaign"}) {
    if (!out.empty()) out += "\n";
    out += fmt::format("[{}]\n", section);
    for (const Field& f : fields()) {
      if (f.section == section) out += f.key + " = " + f.get(scenario) + "\n";
    }
  }
  return out;
}

std::vector<std::string> validate(const Scenario& s) {
  std::vector<std::string> warnings;
  if (!(s.isd_m > 0.0)) throw ConfigError("layout.isd_m must be positive");
  if (s.users_per_sector < s.picos_per_sector) {
    throw ConfigError("layout.users_per_sector must be at least layout.picos_per_sector");
  }
  if (s.drops < 1) throw ConfigError("campaign.drops must be at least 1");
  if (s.sched.rbs_per_user < 1 || s.sched.rbs_per_user > s.sched.total_rbs) {
    throw ConfigError("radio.rbs_per_user must lie in [1, radio.total_data_rbs]");
  }
  if (s.alphas.empty()) throw ConfigError("power.alphas is empty");
  if (s.strategies.empty()) throw ConfigError("selection.strategies is empty");
  std::set<double> alphas;
  for (double a : s.alphas) {
    if (!validate_alpha(a)) {
      warnings.push_back(fmt::format("alpha {} is not one of the standard values", a));
    }
    if (!alphas.insert(a).second) throw ConfigError(fmt::format("alpha {} listed twice", a));
  }
  std::set<std::string> labels;
  for (const auto& st : s.strategies) {
    if (!labels.insert(st.label()).second) {
      throw ConfigError("strategy '" + st.label() + "' listed twice");
    }
  }
  if (!(s.radio.macro_rs_power_dbm > s.radio.pico_rs_power_dbm)) {
    warnings.push_back("macro reference power does not exceed pico reference power");
  }
  return warnings;
}

}  // namespace hetnet
