#ifndef HOOKVERT_CONFIG_HPP
#define HOOKVERT_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hookvert {

/// Raised when a computation would exceed a configured budget. The CLI maps
/// this to exit code 2.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size limits for the enumeration-driven algorithms. Overridable from a
/// key=value config file (see load_config).
struct Budget {
  /// Largest group order that may be enumerated element by element.
  std::uint64_t max_group_order = 10000;
  /// Largest |P| admitted to full subgroup-lattice enumeration, for odd p
  /// and for p = 2.
  std::uint64_t subgroup_lattice_odd = 81;
  std::uint64_t subgroup_lattice_p2 = 16;
  /// Largest |G| admitted to the relative-projectivity (vertex) search.
  std::uint64_t max_higman_order = 720;
  /// Largest module dimension.
  std::uint64_t max_dim = 1024;

  std::uint64_t subgroup_lattice(long p) const {
    return p == 2 ? subgroup_lattice_p2 : subgroup_lattice_odd;
  }
};

/// Parse `key=value` lines ('#' starts a comment). Unknown keys are errors.
/// Recognized keys: max_group_order, subgroup_lattice_odd,
/// subgroup_lattice_p2, max_higman_order, max_dim.
Budget load_config(const std::string& path);

/// Budget from --config path, HOOKVERT_CONFIG, or defaults, in that order.
Budget resolve_budget(const std::string& config_flag);

}  // namespace hookvert

#endif
