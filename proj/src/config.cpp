#include "hookvert/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hookvert {

Budget load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  Budget budget;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                               ": expected key=value");
    const std::string key = trimmed.substr(0, eq);
    const std::uint64_t value = std::stoull(trimmed.substr(eq + 1));
    if (key == "max_group_order")
      budget.max_group_order = value;
    else if (key == "subgroup_lattice_odd")
      budget.subgroup_lattice_odd = value;
    else if (key == "subgroup_lattice_p2")
      budget.subgroup_lattice_p2 = value;
    else if (key == "max_higman_order")
      budget.max_higman_order = value;
    else if (key == "max_dim")
      budget.max_dim = value;
    else
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
  }
  return budget;
}

Budget resolve_budget(const std::string& config_flag) {
  if (!config_flag.empty()) return load_config(config_flag);
  if (const char* env = std::getenv("HOOKVERT_CONFIG"); env && *env)
    return load_config(env);
  return Budget{};
}

}  // namespace hookvert
