// Black-box checks of the hookvert CLI: exact output for the printed
// constructions, exit-code contract, JSON determinism, config handling.
// Usage: cli_tests <path-to-hookvert-binary>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "subprocess.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::printf("[ ok ] %s\n", what.c_str());
  } else {
    std::printf("[FAIL] %s\n", what.c_str());
    ++failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <hookvert binary>\n");
    return 2;
  }
  const std::string cli = argv[1];
  using hookvert::testing::run_command;

  {
    const auto r = run_command(cli + " group sylow-n --p 3 --n 51 --json");
    expect(r.exit_code == 0, "group sylow-n exits 0");
    const auto j = nlohmann::json::parse(r.output);
    expect(j.at("shape") == "P_3×P_3×P_9×P_9×P_27",
           "P_51 factor shape");
    expect(j.at("order_factored") == "3^23", "P_51 order 3^23");
    expect(j.at("group").at("degree") == 51, "degree 51");
  }

  {
    const auto r = run_command(cli + " group sylow-tower --p 3 --d 2 --json");
    const auto j = nlohmann::json::parse(r.output);
    expect(j.at("group").at("generators") ==
               nlohmann::json({"(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)"}),
           "tower generators of P_9");
  }

  {
    const auto r = run_command(cli + " group sylow-tower --p 3 --d 1");
    expect(r.output.find("(1,2,3)") != std::string::npos &&
               r.output.find("order: 3^1 = 3") != std::string::npos,
           "P_3 prints (1,2,3) and order 3");
  }

  {
    const auto r = run_command(cli + " verify lemma-4.3 --p 3 --n 12 --json");
    expect(r.exit_code == 0, "verify exits 0 on success");
    const auto j = nlohmann::json::parse(r.output);
    expect(j.at("ok") == true && j.at("failures").empty(),
           "lemma-4.3 JSON reports ok");
    const auto again =
        run_command(cli + " verify lemma-4.3 --p 3 --n 12 --json");
    expect(r.output == again.output, "verify JSON is byte-identical on rerun");
  }

  {
    const auto r = run_command(cli + " verify lemma-0.0");
    expect(r.exit_code == 2, "unknown suite exits 2");
  }

  {
    const auto r = run_command(cli + " group nonsense --p 3");
    expect(r.exit_code == 2, "unknown group kind exits 2");
  }

  {
    const auto r = run_command(cli + " vertex --p 2 --n 7 --r 1");
    expect(r.exit_code == 2, "vertex beyond the budget exits 2");
    expect(r.output.find("brauer") != std::string::npos,
           "budget message points to the brauer command");
  }

  {
    const auto r = run_command(
        cli + " brauer --p 3 --n 12 --r 0 --group E:1,1 --json");
    const auto j = nlohmann::json::parse(r.output);
    expect(j.at("dim_quotient") == 1, "r = 0 hook module has M(P) = F");
  }

  {
    const auto r = run_command(
        cli + " brauer --p 3 --n 12 --module natural-perm --group E:1,1 --json");
    const auto j = nlohmann::json::parse(r.output);
    expect(j.at("dim_quotient") == 0,
           "natural module of S_12 has M(E(1,1)) = 0");
  }

  {
    const auto r = run_command(cli +
                               " brauer --p 3 --n 12 --r 2 --group "
                               "\"(1,2,3);(4,5,6)(7,8,9)(10,11,12)\" --json");
    expect(r.exit_code == 0, "explicit generator group spec parses");
    const auto j = nlohmann::json::parse(r.output);
    expect(j.at("dim_fixed").get<int>() > 0, "explicit group has fixed points");
  }

  {
    const auto r = run_command(
        cli + " brauer --p 3 --n 12 --r 2 --group E:1,1 --certificate e "
              "--expect-theorem --json");
    expect(r.exit_code == 0, "--expect-theorem passes in the right regime");
    const auto bad = run_command(
        cli + " brauer --p 3 --n 9 --r 2 --group P:9 --certificate e "
              "--expect-theorem");
    expect(bad.exit_code == 2, "--expect-theorem rejects n = 9 (9 ≢ 3 mod 9)");
  }

  {
    const std::string config = "/tmp/hookvert_test_config";
    std::ofstream out(config);
    out << "# tight lattice budget\nsubgroup_lattice_odd = 3\n";
    out.close();
    const auto r = run_command(cli + " --config " + config +
                               " verify lemma-3.8 --p 3");
    expect(r.exit_code == 2, "config-tightened budget exits 2");
    const auto via_env = run_command("HOOKVERT_CONFIG=" + config + " " + cli +
                                     " verify lemma-3.8 --p 3");
    expect(via_env.exit_code == 2, "HOOKVERT_CONFIG is honored");
    std::remove(config.c_str());
  }

  if (failures == 0) std::printf("all CLI checks passed\n");
  return failures == 0 ? 0 : 1;
}
