#include "lrferm/sweep.hpp"

#include <sstream>

#include <yaml-cpp/yaml.h>

#include "lrferm/io.hpp"

namespace lrferm {

void SweepConfig::validate() const {
  if (alphas.empty() || mus.empty() || betas.empty() || Ls.empty())
    throw InvalidArgument("sweep grids must be nonempty");
  for (int L : Ls)
    if (L < 2) throw InvalidArgument("sweep L values must be >= 2");
  for (double a : alphas)
    if (!(a > 0.0)) throw InvalidArgument("sweep alpha values must be positive");
  if (window && (window->l_min < 1 || window->l_min >= window->l_max))
    throw InvalidArgument("fit window needs 1 <= l_min < l_max");
}

namespace {

template <class T>
std::vector<T> read_list(const YAML::Node& node) {
  std::vector<T> out;
  if (node.IsSequence()) {
    for (const auto& item : node) out.push_back(item.as<T>());
  } else {
    out.push_back(node.as<T>());
  }
  return out;
}

}  // namespace

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path.string());
  } catch (const YAML::Exception& e) {
    throw InvalidArgument("cannot read sweep config '" + path.string() + "': " + e.what());
  }
  SweepConfig c;
  try {
    if (root["alpha"]) c.alphas = read_list<double>(root["alpha"]);
    if (root["mu"]) c.mus = read_list<double>(root["mu"]);
    if (root["L"]) c.Ls = read_list<int>(root["L"]);
    if (root["beta"]) {
      c.betas.clear();
      for (const auto& s : read_list<std::string>(root["beta"])) c.betas.push_back(parse_beta(s));
    }
    if (root["boundary"]) c.boundary = parse_boundary(root["boundary"].as<std::string>());
    if (root["window"]) {
      FitWindow w;
      w.l_min = root["window"]["l_min"].as<int>();
      w.l_max = root["window"]["l_max"].as<int>();
      c.window = w;
    }
    if (root["output_dir"]) c.output_dir = root["output_dir"].as<std::string>();
    if (root["threads"]) c.threads = root["threads"].as<unsigned>();
    if (root["seed"]) c.seed = root["seed"].as<std::uint64_t>();
    if (root["keep_going"]) c.keep_going = root["keep_going"].as<bool>();
    if (root["epsilon"]) c.epsilon = root["epsilon"].as<double>();
  } catch (const YAML::Exception& e) {
    throw InvalidArgument("malformed sweep config '" + path.string() + "': " + e.what());
  }
  c.validate();
  return c;
}

std::vector<GridPoint> build_grid(const SweepConfig& config) {
  config.validate();
  std::vector<GridPoint> grid;
  for (int L : config.Ls)
    for (double alpha : config.alphas)
      for (double mu : config.mus)
        for (const auto& beta : config.betas) {
          GridPoint g;
          g.L = L;
          g.alpha = alpha;
          g.mu = mu;
          g.beta = beta;
          g.boundary = config.boundary;
          g.window = config.window;
          grid.push_back(g);
        }
  return grid;
}

std::string profiles_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  CsvWriter csv(out, "profiles", {"L", "alpha", "mu", "beta", "l", "corr"});
  for (const auto& row : rows) {
    if (!row.error.empty()) continue;
    const auto& g = row.point;
    const std::string beta = format_beta(g.beta);
    for (const auto& p : row.profile.points) {
      if (!(p.value >= kCorrelationFloor)) continue;
      csv.field(g.L).field(g.alpha).field(g.mu).field(beta).field(p.l).field(p.value);
      csv.end_row();
    }
  }
  return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  CsvWriter csv(out, "summary", {"alpha", "mu", "beta", "L", "nu", "rms_residual", "excluded_bound", "pass"});
  for (const auto& row : rows) {
    const auto& g = row.point;
    csv.field(g.alpha).field(g.mu).field(format_beta(g.beta)).field(g.L);
    if (row.fit) {
      csv.field(row.fit->nu).field(row.fit->rms_residual);
    } else {
      csv.field("nan").field("nan");
    }
    csv.field(row.excluded_bound).field(row.pass);
    csv.end_row();
  }
  return out.str();
}

SweepOutcome run_sweep(const SweepConfig& config) {
  SweepOutcome outcome;
  SummaryOptions opt;
  opt.threads = config.threads;
  opt.epsilon = config.epsilon;
  outcome.rows = nu_summary(build_grid(config), opt);
  for (const auto& row : outcome.rows)
    if (!row.error.empty()) ++outcome.failures;
  outcome.profiles_path = config.output_dir / "profiles.csv";
  outcome.summary_path = config.output_dir / "summary.csv";
  write_text_file(outcome.profiles_path, profiles_csv(outcome.rows));
  write_text_file(outcome.summary_path, summary_csv(outcome.rows));
  return outcome;
}

}  // namespace lrferm
