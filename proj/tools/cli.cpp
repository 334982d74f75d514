#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "qfock/qhermite.hpp"
#include "qfock/report.hpp"
#include "qfock/spaces.hpp"
#include "qfock/special.hpp"
#include "qfock/suites.hpp"
#include "qfock/transforms.hpp"

namespace qfock::cli {
namespace {

// Raised for configurations that parse but violate an invariant (exit 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

nlohmann::json quaternion_json(const Quaternion& q) { return {q.w, q.x1, q.x2, q.x3}; }

std::string csv_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_quaternion(const Quaternion& q) {
  return csv_real(q.w) + ',' + csv_real(q.x1) + ',' + csv_real(q.x2) + ',' + csv_real(q.x3);
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

  bool has(const std::string& key) const { return p_.count(key) > 0; }

  const std::string& str(const std::string& key) const {
    const auto it = p_.find(key);
    if (it == p_.end()) throw ConfigError("missing --" + key);
    return it->second;
  }
  std::string str(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
  }
  int index(const std::string& key, int fallback = -1) const {
    if (!has(key)) {
      if (fallback < 0) throw ConfigError("missing --" + key);
      return fallback;
    }
    const int v = to_int(key, str(key));
    if (v < 0 || v > kMaxDegree)
      throw ConfigError("--" + key + " must lie in [0, " + std::to_string(kMaxDegree) + "]");
    return v;
  }
  double real(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(str(key), &used);
      if (used != str(key).size() || !std::isfinite(v)) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("--" + key + " expects a real number, got '" + str(key) + "'");
    }
  }
  double positive(const std::string& key, double fallback) const {
    const double v = real(key, fallback);
    if (!(v > 0.0)) throw ConfigError("--" + key + " must be positive");
    return v;
  }
  Quaternion quaternion(const std::string& key) const {
    try {
      return parse_quaternion(str(key));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError("--" + key + ": " + e.what());
    }
  }
  std::pair<int, int> index_pair(const std::string& key) const {
    const std::string& s = str(key);
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ConfigError("--" + key + " expects m,n");
    const int m = to_int(key, s.substr(0, comma));
    const int n = to_int(key, s.substr(comma + 1));
    if (m < 0 || n < 0 || m > kMaxDegree || n > kMaxDegree)
      throw ConfigError("--" + key + " indices must lie in [0, " + std::to_string(kMaxDegree) + "]");
    return {m, n};
  }

 private:
  static int to_int(const std::string& key, const std::string& s) {
    try {
      std::size_t used = 0;
      const long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return static_cast<int>(v);
    } catch (const std::exception&) {
      throw ConfigError("--" + key + " expects an integer, got '" + s + "'");
    }
  }
  const std::map<std::string, std::string>& p_;
};

struct Emitted {
  std::string text;
  int status = kPass;
};

// Overrides each suite accepts; anything else is a usage error.
const std::map<std::string, std::vector<std::string>>& verify_overrides() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"orthogonality", {"max-index", "tol"}},
      {"routes", {"max-index", "tol", "samples", "seed"}},
      {"landau", {}},
      {"kernel", {"max-index", "tol", "samples", "seed"}},
      {"reproduction", {"max-index", "tol"}},
      {"bargmann", {"tol", "samples", "seed"}},
      {"wigner", {"max-index", "tol"}},
      {"divergence", {}},
      {"genfn", {"max-index", "tol", "samples", "seed"}},
      {"cross-slice", {"samples", "seed"}},
      {"all", {}},
  };
  return table;
}

std::uint64_t parse_count(const Params& p, const std::string& key) {
  const std::string& s = p.str(key);
  try {
    std::size_t used = 0;
    if (!s.empty() && s.front() == '-') throw std::invalid_argument("");
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("--" + key + " expects a non-negative integer, got '" + s + "'");
  }
}

VerificationReport run_verify_suite(const std::string& name, const Params& p) {
  const auto entry = verify_overrides().find(name);
  if (entry == verify_overrides().end()) throw ConfigError("unknown suite '" + name + "'");
  for (const char* key : {"max-index", "tol", "samples", "seed"})
    if (p.has(key) && std::find(entry->second.begin(), entry->second.end(), key) == entry->second.end())
      throw ConfigError("--" + std::string(key) + " does not apply to suite '" + name + "'");

  auto samples = [&](std::size_t& target) {
    if (p.has("samples")) {
      target = static_cast<std::size_t>(parse_count(p, "samples"));
      if (target == 0) throw ConfigError("--samples must be positive");
    }
  };
  auto seed = [&](std::uint64_t& target) {
    if (p.has("seed")) target = parse_count(p, "seed");
  };
  auto index = [&](int& target) {
    if (p.has("max-index")) target = p.index("max-index");
  };
  auto tol = [&](double& target) { target = p.positive("tol", target); };

  if (name == "orthogonality") {
    OrthogonalityParams s;
    index(s.max_index);
    tol(s.tol);
    return orthogonality_suite(s);
  }
  if (name == "routes") {
    RoutesParams s;
    index(s.max_index);
    tol(s.tol);
    samples(s.samples);
    seed(s.seed);
    return routes_suite(s);
  }
  if (name == "kernel") {
    KernelParams s;
    index(s.max_m);
    tol(s.tol_closed);
    if (p.has("tol")) s.tol_diagonal = s.tol_closed;
    samples(s.samples);
    seed(s.seed);
    return kernel_suite(s);
  }
  if (name == "reproduction") {
    ReproductionParams s;
    if (p.has("max-index")) s.max_a = s.max_level = p.index("max-index");
    tol(s.tol);
    return reproduction_suite(s);
  }
  if (name == "bargmann") {
    BargmannParams s;
    tol(s.tol_fit);
    samples(s.bound_samples);
    seed(s.seed);
    return bargmann_suite(s);
  }
  if (name == "wigner") {
    WignerParams s;
    index(s.max_index);
    tol(s.tol_spread);
    return wigner_suite(s);
  }
  if (name == "genfn") {
    GenFnParams s;
    index(s.max_m);
    tol(s.tol);
    samples(s.samples);
    seed(s.seed);
    return genfn_suite(s);
  }
  if (name == "cross-slice") {
    CrossSliceParams s;
    samples(s.samples);
    seed(s.seed);
    return cross_slice_suite(s);
  }
  return run_suite(name);
}

Emitted cmd_verify(const Params& p, OutputFormat fmt) {
  const VerificationReport report = run_verify_suite(p.str("suite"), p);
  return {fmt == OutputFormat::json ? report.to_json() + "\n" : report.to_csv(),
          report.passed() ? kPass : kNumericFailure};
}

Emitted cmd_eval(const Params& p, OutputFormat fmt) {
  const auto [m, n] = p.index_pair("qhermite");
  const Quaternion q = p.quaternion("q");
  const std::string route = p.str("route", "recurrence");
  Quaternion v;
  if (route == "direct")
    v = qhermite_direct(m, n, q);
  else if (route == "polar")
    v = qhermite_polar(m, n, q).value;
  else if (route == "recurrence")
    v = qhermite_recurrence(m, n, q);
  else
    throw ConfigError("--route must be direct, polar or recurrence");
  if (fmt == OutputFormat::csv)
    return {"m,n,route,w,x1,x2,x3\n" + std::to_string(m) + "," + std::to_string(n) + "," + route + "," +
            csv_quaternion(v) + "\n"};
  nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                      {"command", "eval"},
                      {"m", m},
                      {"n", n},
                      {"route", route},
                      {"q", quaternion_json(q)},
                      {"value", quaternion_json(v)}};
  return {j.dump(2) + "\n"};
}

Emitted cmd_kernel(const Params& p, OutputFormat fmt) {
  const int m = p.index("m");
  const Quaternion q = p.quaternion("q");
  const Quaternion qp = p.quaternion("qprime");
  const std::string form = p.str("form", "closed");
  const int terms = p.index("terms", 60);
  Quaternion v;
  if (form == "closed")
    v = kernel_closed(m, q, qp);
  else if (form == "series")
    v = kernel_series(m, q, qp, terms);
  else
    throw ConfigError("--form must be closed or series");
  if (fmt == OutputFormat::csv)
    return {"m,form,w,x1,x2,x3\n" + std::to_string(m) + "," + form + "," + csv_quaternion(v) + "\n"};
  nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                      {"command", "kernel"},
                      {"m", m},
                      {"form", form},
                      {"q", quaternion_json(q)},
                      {"qprime", quaternion_json(qp)},
                      {"value", quaternion_json(v)}};
  if (form == "series") j["terms"] = terms;
  return {j.dump(2) + "\n"};
}

Emitted cmd_bargmann(const Params& p, OutputFormat fmt) {
  if (p.has("constants")) {
    const int top = p.index("max-index", 5);
    if (top > kMaxBargmannLevel) throw ConfigError("--max-index exceeds the Bargmann level cap");
    std::vector<Quaternion> points = decomposition_points();
    const std::string csv = fitted_constants_csv(top, top, points);
    if (fmt == OutputFormat::csv) return {csv};
    nlohmann::json rows = nlohmann::json::array();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::vector<std::string> columns;
    for (std::istringstream header(line); std::getline(header, line, ',');) columns.push_back(line);
    while (std::getline(in, line)) {
      nlohmann::json row = nlohmann::json::object();
      std::istringstream fields(line);
      std::string field;
      for (std::size_t c = 0; c < columns.size() && std::getline(fields, field, ','); ++c)
        row[columns[c]] = c < 2 ? nlohmann::json(std::stoi(field)) : nlohmann::json(std::stod(field));
      rows.push_back(std::move(row));
    }
    return {nlohmann::json{{"schema_version", kReportSchemaVersion}, {"command", "bargmann"}, {"rows", rows}}.dump(2) +
            "\n"};
  }
  const int m = p.index("m");
  if (m > kMaxBargmannLevel) throw ConfigError("--m exceeds the Bargmann level cap");
  const int n = p.index("n");
  const Quaternion q = p.quaternion("q");
  const Quaternion v = bargmann_transform(m, RealLineFunction::hermite(n), q);
  const Quaternion expected = qhermite(m, n, q) * bargmann_basis_constant(m, n);
  if (fmt == OutputFormat::csv)
    return {"m,n,w,x1,x2,x3,expected_w,expected_x1,expected_x2,expected_x3\n" + std::to_string(m) + "," +
            std::to_string(n) + "," + csv_quaternion(v) + "," + csv_quaternion(expected) + "\n"};
  nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                      {"command", "bargmann"},
                      {"m", m},
                      {"n", n},
                      {"q", quaternion_json(q)},
                      {"value", quaternion_json(v)},
                      {"basis_image", quaternion_json(expected)}};
  return {j.dump(2) + "\n"};
}

Emitted cmd_wigner(const Params& p, OutputFormat fmt) {
  const int m = p.index("m");
  const int n = p.index("n");
  const double x = p.real("x", 0.0);
  const double y = p.real("y", 0.0);
  ImaginaryUnit unit;
  if (p.has("unit")) {
    try {
      unit = ImaginaryUnit::from(p.quaternion("unit"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("--unit: ") + e.what());
    }
  }
  const Quaternion v = fourier_wigner(RealLineFunction::hermite(m), RealLineFunction::hermite(n), unit, x, y);
  const Quaternion q = from_slice(x, y, unit);
  const Quaternion half = fw_hermite_closed(m, n, q, WignerGaussian::as_stated);
  const Quaternion quarter = fw_hermite_closed(m, n, q, WignerGaussian::as_derived);
  if (fmt == OutputFormat::csv)
    return {"m,n,x,y,w,x1,x2,x3\n" + std::to_string(m) + "," + std::to_string(n) + "," +
            csv_real(x) + "," + csv_real(y) + "," + csv_quaternion(v) + "\n"};
  nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                      {"command", "wigner"},
                      {"m", m},
                      {"n", n},
                      {"x", x},
                      {"y", y},
                      {"unit", quaternion_json(unit.quaternion())},
                      {"value", quaternion_json(v)},
                      {"closed_half_gaussian", quaternion_json(half)},
                      {"closed_quarter_gaussian", quaternion_json(quarter)}};
  return {j.dump(2) + "\n"};
}

Emitted cmd_table(const Params& p, OutputFormat fmt) {
  const int top = p.index("max-index", 4);
  const Quaternion q = p.quaternion("q");
  std::ostringstream csv;
  nlohmann::json rows = nlohmann::json::array();
  csv << "m,n,w,x1,x2,x3\n";
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= top; ++n) {
      const Quaternion v = qhermite(m, n, q);
      csv << m << ',' << n << ',' << csv_quaternion(v) << '\n';
      rows.push_back({{"m", m}, {"n", n}, {"value", quaternion_json(v)}});
    }
  if (fmt == OutputFormat::csv) return {csv.str()};
  return {nlohmann::json{{"schema_version", kReportSchemaVersion},
                         {"command", "table"},
                         {"q", quaternion_json(q)},
                         {"rows", rows}}
              .dump(2) +
          "\n"};
}

}  // namespace

Quaternion parse_quaternion(const std::string& text) {
  double c[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t pos = 0;
  int count = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (count == 4) throw std::invalid_argument("quaternion has more than 4 components: '" + text + "'");
    try {
      std::size_t used = 0;
      c[count] = std::stod(field, &used);
      if (used != field.size() || !std::isfinite(c[count])) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad quaternion component '" + field + "' in '" + text + "'");
    }
    ++count;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return {c[0], c[1], c[2], c[3]};
}

int parse(int argc, const char* const* argv, CliConfig& config, std::ostream& out, std::ostream& err) {
  CLI::App app{"qfock: quaternionic Hermite polynomials, Fock-space kernels and transforms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--outfile", config.outfile, "Write the report here instead of stdout");

  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  auto opt = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = false) {
    auto* o = sub->add_option("--" + name, values[sub->get_name() + "/" + name], help);
    if (required) o->required();
    return o;
  };

  auto* eval = app.add_subcommand("eval", "Evaluate H_{m,n}(q, qbar)");
  opt(eval, "qhermite", "Index pair m,n", true);
  opt(eval, "q", "Quaternion w,x1,x2,x3", true);
  opt(eval, "route", "direct, polar or recurrence");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  opt(verify, "suite", "Suite name or 'all'", true);
  opt(verify, "max-index", "Largest index");
  opt(verify, "tol", "Tolerance");
  opt(verify, "samples", "Random sample count");
  opt(verify, "seed", "Random seed");

  auto* kernel = app.add_subcommand("kernel", "Evaluate the reproducing kernel K_m(q, q')");
  opt(kernel, "m", "Level", true);
  opt(kernel, "q", "Quaternion q", true);
  opt(kernel, "qprime", "Quaternion q'", true);
  opt(kernel, "form", "closed or series");
  opt(kernel, "terms", "Series terms");

  auto* bargmann = app.add_subcommand("bargmann", "Segal-Bargmann image B_m h_n(q), or the fitted constants");
  opt(bargmann, "m", "Level");
  opt(bargmann, "n", "Hermite function index");
  opt(bargmann, "q", "Quaternion q");
  opt(bargmann, "max-index", "Largest m and n for --constants");
  bargmann->add_flag("--constants", flags["bargmann/constants"], "Emit the fitted-constant table");

  auto* wigner = app.add_subcommand("wigner", "Fourier-Wigner transform V_I(h_m, h_n)(x + I y)");
  opt(wigner, "m", "Index of the first Hermite function", true);
  opt(wigner, "n", "Index of the second Hermite function", true);
  opt(wigner, "x", "Real coordinate");
  opt(wigner, "y", "Imaginary coordinate");
  opt(wigner, "unit", "Imaginary unit direction 0,a,b,c (default i)");

  auto* table = app.add_subcommand("table", "Table of H_{m,n}(q) for m, n <= max-index");
  opt(table, "max-index", "Largest index");
  opt(table, "q", "Quaternion q", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  config.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
  for (CLI::App* sub : app.get_subcommands()) {
    config.command = sub->get_name();
    for (const CLI::Option* o : sub->get_options()) {
      if (o->count() == 0 || o->get_name() == "--help") continue;
      const std::string name = o->get_name().substr(2);
      const std::string key = config.command + "/" + name;
      if (flags.count(key))
        config.params[name] = "true";
      else
        config.params[name] = values[key];
    }
  }
  return kPass;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const std::map<std::string, std::function<Emitted(const Params&, OutputFormat)>> commands = {
      {"eval", cmd_eval},         {"verify", cmd_verify}, {"kernel", cmd_kernel},
      {"bargmann", cmd_bargmann}, {"wigner", cmd_wigner}, {"table", cmd_table},
  };
  const auto it = commands.find(config.command);
  if (it == commands.end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return kUsageError;
  }
  Emitted result;
  try {
    result = it->second(Params(config.params), config.output);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\nRun 'qfock " << config.command << " --help' for usage.\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\nRun 'qfock " << config.command << " --help' for usage.\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
  if (config.outfile.empty()) {
    out << result.text;
  } else {
    std::ofstream file(config.outfile, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.outfile << "\n";
      return kUsageError;
    }
    file << result.text;
  }
  return result.status;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  const int status = parse(argc, argv, config, out, err);
  if (status != kPass || config.command.empty()) return status;
  return run(config, out, err);
}

}  // namespace qfock::cli
