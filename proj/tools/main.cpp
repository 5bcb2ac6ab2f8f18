// Experiment driver: runs one verification experiment from a JSON config and
// writes a CSV trace plus a JSON summary.
//
//   hankelmu <experiment> --config cfg.json [--out DIR] [--max-n 16384]
//            [--tol 1e-9] [--format csv|json]
//
// Exit codes: 0 = ran with verdicts, 2 = hypothesis refusal, 3 = numeric
// failure.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankelmu/errors.hpp"
#include "hankelmu/harness.hpp"

namespace {

std::vector<int> ladder_up_to(int top) {
  std::vector<int> v;
  for (int n = 16; n <= top; n *= 2) v.push_back(n);
  if (v.empty()) v.push_back(top);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hilbert operator experiments"};
  std::string experiment, config_path, out_dir = ".", format = "csv";
  int max_n = 0;
  double tol = 0.0;
  app.add_option("experiment", experiment,
                 "thdec|lemmom|thhlao|logcond|widom|admissible|moments|carleson|apply")
      ->required();
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--max-n", max_n, "override the top of the size ladder");
  app.add_option("--tol", tol, "override the numeric tolerance");
  app.add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config " << config_path << "\n";
      return 2;
    }
    nlohmann::json raw = nlohmann::json::parse(in);
    raw["experiment"] = experiment;
    if (max_n > 0) {
      raw["sizes"] = ladder_up_to(max_n);
    }
    if (tol > 0.0) raw["tol"] = tol;

    const auto cfg = hankelmu::parse_config(raw);
    const auto rep = hankelmu::run_experiment(cfg);

    std::filesystem::create_directories(out_dir);
    const auto base = std::filesystem::path(out_dir) / rep.experiment;
    if (format == "csv") {
      std::ofstream csv(base.string() + ".csv", std::ios::binary);
      csv << rep.to_csv();
    }
    std::ofstream js(base.string() + ".json", std::ios::binary);
    js << rep.to_json().dump(2) << "\n";

    for (const auto& [k, v] : rep.verdicts)
      std::cout << k << ": " << v << "\n";
    return 0;
  } catch (const hankelmu::RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const hankelmu::DivergenceError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const hankelmu::IntegrabilityError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "refused: bad config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
}
