#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "besselsum/arith.hpp"
#include "besselsum/characters.hpp"
#include "besselsum/identities.hpp"
#include "besselsum/special.hpp"
#include "besselsum/summation.hpp"

namespace besselsum::cli {
namespace {

class InvalidConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Values = std::vector<std::string>;
using RawGrid = std::map<std::string, Values>;
using Point = std::map<std::string, std::string>;
using Task = std::function<std::vector<IdentityReport>()>;

const std::vector<std::string> kGridKeys = {"instance", "case", "k", "q", "a", "chi", "order", "n",
                                            "theta", "x", "s", "z", "t", "t-imag", "y", "y-imag"};
const std::vector<std::string> kScalarKeys = {"tol", "format", "output", "snap",
                                              "switch-j", "switch-i", "jobs", "n-max"};

bool is_grid_key(const std::string& key) {
  return std::find(kGridKeys.begin(), kGridKeys.end(), key) != kGridKeys.end();
}
bool is_scalar_key(const std::string& key) {
  return std::find(kScalarKeys.begin(), kScalarKeys.end(), key) != kScalarKeys.end();
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

Values split_list(std::string text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }
  Values out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

RawGrid read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot read config file '" + path + "'");
  RawGrid grid;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidConfig(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!is_grid_key(key) && !is_scalar_key(key)) {
      throw InvalidConfig(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    Values values = split_list(line.substr(eq + 1));
    if (values.empty()) throw InvalidConfig(path + ":" + std::to_string(line_no) + ": empty value");
    grid[key] = std::move(values);
  }
  return grid;
}

double parse_double(const std::string& text, const std::string& key) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const char* begin = text.data();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw InvalidConfig("invalid number '" + text + "' for " + key);
  }
  return value;
}

std::int64_t parse_int(const std::string& text, const std::string& key) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InvalidConfig("invalid integer '" + text + "' for " + key);
  return value;
}

/// Accepts "a", "bi", "a+bi", "a-bi" (also with j).
Complex parse_complex(std::string text, const std::string& key) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) throw InvalidConfig("empty value for " + key);
  if (text.back() != 'i' && text.back() != 'j') return {parse_double(text, key), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    if ((body[pos] == '+' || body[pos] == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }
  auto imaginary = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double(part, key);
  };
  if (split == std::string::npos) return {0.0, imaginary(body)};
  return {parse_double(body.substr(0, split), key), imaginary(body.substr(split))};
}

Rational parse_rational(const std::string& text, const std::string& key) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw InvalidConfig("invalid fraction '" + text + "' for " + key);
  }
}

// ---------------------------------------------------------------------------
// Targets.

struct PointView {
  const Point& point;

  const std::string& raw(const std::string& key) const {
    const auto it = point.find(key);
    if (it == point.end()) throw InvalidConfig("missing value for " + key);
    return it->second;
  }
  double real(const std::string& key) const { return parse_double(raw(key), key); }
  std::int64_t integer(const std::string& key) const { return parse_int(raw(key), key); }
  Complex complex_with_imag(const std::string& key) const {
    return parse_complex(raw(key), key) + Complex(0.0, real(key + "-imag"));
  }
};

struct EvalSettings {
  double tol = identities::kDefaultTol;
  double snap = summation::kDefaultSnap;
};

struct Target {
  std::string name;
  Values keys;
  Point verify_default;
  std::vector<RawGrid> default_sweep;
  std::function<Values(const PointView&)> relevant;
  std::function<Task(const PointView&, const EvalSettings&)> build;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidConfig(message);
}

Complex checked_half_plane(const PointView& p, const std::string& key) {
  const Complex value = p.complex_with_imag(key);
  require(value.real() > 0.0, key + " must have positive real part");
  return value;
}

std::int64_t checked_odd_prime(const PointView& p) {
  const std::int64_t q = p.integer("q");
  require(q >= 3 && q <= 1000003 && characters::is_prime(q), "q must be an odd prime");
  return q;
}

characters::DirichletCharacter checked_odd_character(const PointView& p) {
  const std::int64_t q = checked_odd_prime(p);
  const std::int64_t index = p.integer("chi");
  require(index >= 0 && index < q - 1, "chi must index a character mod q (0.." + std::to_string(q - 2) + ")");
  auto all = characters::enumerate_characters(q);
  const auto& chi = all[static_cast<std::size_t>(index)];
  require(chi.is_odd() && chi.is_primitive(), "chi must be an odd primitive character");
  return chi;
}

double checked_positive(const PointView& p, const std::string& key) {
  const double value = p.real(key);
  require(value > 0.0, key + " must be positive");
  return value;
}

Values odd_indices(std::int64_t q) {
  Values out;
  for (const auto& chi : characters::odd_characters(q)) out.push_back(std::to_string(chi.index()));
  return out;
}

std::vector<Target> make_targets() {
  std::vector<Target> targets;
  const Values t_keys = {"t", "t-imag"};

  targets.push_back(Target{
      "popov",
      {"k", "z", "t", "t-imag"},
      {{"k", "2"}, {"z", "0.7"}, {"t", "1.3"}, {"t-imag", "0"}},
      {{{"k", {"2", "3", "4", "5", "8"}}, {"z", {"0.3", "0.7", "1.5"}}, {"t", {"0.8", "1.3", "1.0+0.5i"}}}},
      nullptr,
      [](const PointView& p, const EvalSettings& s) -> Task {
        const auto k = p.integer("k");
        require(k >= 2 && k <= 64, "popov needs 2 <= k <= 64");
        const double z = p.real("z");
        require(z >= 0.0, "z must be non-negative");
        const Complex t = checked_half_plane(p, "t");
        return [=] { return std::vector{identities::popov(static_cast<int>(k), z, t, s.tol)}; };
      }});

  targets.push_back(Target{
      "theta",
      {"k", "y", "y-imag"},
      {{"k", "4"}, {"y", "1"}, {"y-imag", "0"}},
      {{{"k", {"1", "2", "4", "8"}}, {"y", {"0.5", "1", "2", "1+1i"}}}},
      nullptr,
      [](const PointView& p, const EvalSettings& s) -> Task {
        const auto k = p.integer("k");
        require(k >= 1 && k <= 64, "theta needs 1 <= k <= 64");
        const Complex y = checked_half_plane(p, "y");
        return [=] { return std::vector{identities::theta(static_cast<int>(k), y, s.tol)}; };
      }});

  targets.push_back(Target{
      "cn",
      {"instance", "k", "q", "chi", "order", "x"},
      {{"instance", "rk"}, {"k", "2"}, {"q", "5"}, {"chi", "1"}, {"order", "0"}, {"x", "10.5"}},
      {{{"instance", {"rk"}}, {"k", {"2"}}, {"order", {"0"}}, {"x", {"5.5", "10.5"}}},
       {{"instance", {"rk"}}, {"k", {"4"}}, {"order", {"1"}}, {"x", {"7.3"}}},
       {{"instance", {"dchi"}}, {"q", {"5"}}, {"chi", {"odd"}}, {"order", {"0"}}, {"x", {"9.7"}}}},
      [](const PointView& p) -> Values {
        if (p.raw("instance") == "dchi") return {"instance", "q", "chi", "order", "x"};
        return {"instance", "k", "order", "x"};
      },
      [](const PointView& p, const EvalSettings& s) -> Task {
        const std::string instance = p.raw("instance");
        require(instance == "rk" || instance == "dchi", "instance must be rk or dchi");
        const double order = p.real("order");
        require(order >= 0.0, "order must be non-negative");
        const double x = checked_positive(p, "x");
        if (instance == "rk") {
          const auto k = p.integer("k");
          require(k >= 1 && k <= 16, "cn with rk needs 1 <= k <= 16");
          return [=] {
            return std::vector{identities::cn(summation::rk_instance(static_cast<int>(k)), order, x, s.tol,
                                              {{"k", k}}, s.snap)};
          };
        }
        const auto chi = checked_odd_character(p);
        return [=] {
          return std::vector{identities::cn(summation::dchi_instance(chi), order, x, s.tol,
                                            {{"modulus", chi.modulus()},
                                             {"chi", static_cast<std::int64_t>(chi.index())}},
                                            s.snap)};
        };
      }});

  targets.push_back(Target{
      "voronoi",
      {"k", "s", "x"},
      {{"k", "2"}, {"s", "1"}, {"x", "6.5"}},
      {{{"k", {"2", "3"}}, {"s", {"0.8", "1"}}, {"x", {"0.5", "6.5"}}}},
      nullptr,
      [](const PointView& p, const EvalSettings& s) -> Task {
        const auto k = p.integer("k");
        require(k >= 2 && k <= 16, "voronoi needs 2 <= k <= 16");
        const double sv = checked_positive(p, "s");
        const double x = checked_positive(p, "x");
        require(std::abs(x - std::round(x)) > summation::kDefaultSnap * x, "voronoi needs a non-integer x");
        return [=] { return std::vector{identities::voronoi(static_cast<int>(k), sv, x, s.tol)}; };
      }});

  targets.push_back(Target{
      "odd-char",
      {"q", "chi", "z", "t", "t-imag"},
      {{"q", "3"}, {"chi", "1"}, {"z", "0.4"}, {"t", "1"}, {"t-imag", "0"}},
      {{{"q", {"3", "5", "7"}}, {"chi", {"odd"}}, {"z", {"0.2", "0.9"}}, {"t", {"1.0", "0.8+0.3i"}}}},
      nullptr,
      [](const PointView& p, const EvalSettings& s) -> Task {
        const auto chi = checked_odd_character(p);
        const double z = checked_positive(p, "z");
        const Complex t = checked_half_plane(p, "t");
        return [=] { return std::vector{identities::odd_char(chi, z, t, s.tol)}; };
      }});

  targets.push_back(Target{
      "sine",
      {"theta", "z", "t", "t-imag"},
      {{"theta", "1/3"}, {"z", "0.5"}, {"t", "1.2"}, {"t-imag", "0"}},
      {{{"theta", {"1/3", "2/7", "1/5"}}, {"z", {"0.3", "0.5"}}, {"t", {"1.0", "1.2"}}},
       {{"theta", {"1/2"}}, {"z", {"0.5"}}, {"t", {"1.0"}}}},
      nullptr,
      [](const PointView& p, const EvalSettings& s) -> Task {
        const Rational theta = parse_rational(p.raw("theta"), "theta");
        require(theta.num > 0 && theta.num < theta.den, "theta must lie in (0, 1)");
        const double z = checked_positive(p, "z");
        const Complex t = checked_half_plane(p, "t");
        return [=] { return std::vector{identities::sine(theta, z, t, s.tol)}; };
      }});

  targets.push_back(Target{
      "reduction",
      {"q", "a", "z", "t", "t-imag"},
      {{"q", "5"}, {"a", "2"}, {"z", "0.4"}, {"t", "1.1"}, {"t-imag", "0"}},
      {{{"q", {"3"}}, {"a", {"1"}}}, {{"q", {"5"}}, {"a", {"2"}}}, {{"q", {"7"}}, {"a", {"3"}}}},
      nullptr,
      [](const PointView& p, const EvalSettings& s) -> Task {
        const auto q = checked_odd_prime(p);
        const auto a = p.integer("a");
        require(a > 0 && a < q, "a must satisfy 0 < a < q");
        const double z = checked_positive(p, "z");
        const Complex t = checked_half_plane(p, "t");
        return [=] { return identities::character_reduction(q, a, z, t, s.tol); };
      }});

  targets.push_back(Target{
      "integrals",
      {"case", "k", "q", "n", "z", "t", "t-imag"},
      {{"case", "single-bessel"}, {"k", "2"}, {"q", "5"}, {"n", "1"}, {"z", "0.7"}, {"t", "1.3"}, {"t-imag", "0"}},
      {{{"case", {"single-bessel"}}, {"k", {"2"}}, {"z", {"0.7"}}, {"t", {"1.3"}}},
       {{"case", {"single-bessel"}}, {"k", {"4"}}, {"z", {"0.5"}}, {"t", {"1.0"}}},
       {{"case", {"single-bessel"}}, {"k", {"8"}}, {"z", {"1.5"}}, {"t", {"0.8"}}},
       {{"case", {"bessel-pair"}}, {"k", {"2"}}, {"n", {"1"}}, {"z", {"0.5"}}, {"t", {"1.0"}}},
       {{"case", {"bessel-pair"}}, {"k", {"3"}}, {"n", {"2"}}, {"z", {"0.3"}}, {"t", {"1.2"}}},
       {{"case", {"bessel-pair"}}, {"k", {"6"}}, {"n", {"3"}}, {"z", {"1.1"}}, {"t", {"0.9"}}},
       {{"case", {"single-bessel-mod"}}, {"q", {"5"}}, {"z", {"0.3"}}, {"t", {"1.1"}}},
       {{"case", {"single-bessel-mod"}}, {"q", {"3"}}, {"z", {"0.4"}}, {"t", {"1.2"}}},
       {{"case", {"single-bessel-mod"}}, {"q", {"7"}}, {"z", {"0.9"}}, {"t", {"1.5"}}},
       {{"case", {"bessel-pair-mod"}}, {"q", {"3"}}, {"n", {"2"}}, {"z", {"0.4"}}, {"t", {"1.2"}}},
       {{"case", {"bessel-pair-mod"}}, {"q", {"5"}}, {"n", {"1"}}, {"z", {"0.3"}}, {"t", {"1.0"}}},
       {{"case", {"bessel-pair-mod"}}, {"q", {"7"}}, {"n", {"4"}}, {"z", {"0.8"}}, {"t", {"1.4"}}}},
      [](const PointView& p) -> Values {
        const std::string& c = p.raw("case");
        const bool modular = c == "single-bessel-mod" || c == "bessel-pair-mod";
        const bool pair = c == "bessel-pair" || c == "bessel-pair-mod";
        Values keys{"case", modular ? "q" : "k"};
        if (pair) keys.push_back("n");
        keys.insert(keys.end(), {"z", "t", "t-imag"});
        return keys;
      },
      [](const PointView& p, const EvalSettings& s) -> Task {
        summation::IntegralCase which;
        try {
          which = summation::parse_integral_case(p.raw("case"));
        } catch (const DomainError& e) {
          throw InvalidConfig(e.what());
        }
        summation::IntegralParams params;
        const bool modular = which == summation::IntegralCase::SingleBesselModular ||
                             which == summation::IntegralCase::BesselPairModular;
        const bool pair = which == summation::IntegralCase::BesselPair ||
                          which == summation::IntegralCase::BesselPairModular;
        if (modular) {
          params.modulus = p.integer("q");
          require(params.modulus >= 1, "q must be positive");
        } else {
          const auto k = p.integer("k");
          require(k >= 2 && k <= 8, "integrals need 2 <= k <= 8");
          params.k = static_cast<int>(k);
        }
        if (pair) {
          params.n = p.integer("n");
          require(params.n >= 1, "n must be >= 1");
        }
        params.z = checked_positive(p, "z");
        const Complex t = p.complex_with_imag("t");
        require(t.imag() == 0.0 && t.real() > 0.0, "integral checks need real t > 0");
        params.t = t.real();
        params.tol = s.tol;
        return [=] { return std::vector{summation::verify_integral_closed_form(which, params)}; };
      }});
  return targets;
}

/// Cartesian product over target.keys (first key slowest). A chi value of
/// "odd" expands to every odd character of the point's modulus.
void expand(const Target& target, const RawGrid& grid, std::size_t depth, Point& current,
            std::vector<Point>& out) {
  if (depth == target.keys.size()) {
    out.push_back(current);
    return;
  }
  const std::string& key = target.keys[depth];
  const auto it = grid.find(key);
  if (it == grid.end()) throw InvalidConfig("missing value for " + key);
  for (const std::string& value : it->second) {
    if (key == "chi" && value == "odd") {
      const PointView view{current};
      for (const std::string& index : odd_indices(checked_odd_prime(view))) {
        current[key] = index;
        expand(target, grid, depth + 1, current, out);
      }
    } else {
      current[key] = value;
      expand(target, grid, depth + 1, current, out);
    }
  }
  current.erase(key);
}

std::vector<Point> expand_target(const Target& target, const std::vector<RawGrid>& grids) {
  std::vector<Point> points;
  for (const RawGrid& grid : grids) {
    Point current;
    expand(target, grid, 0, current, points);
  }
  // Drop keys that do not apply to a point, then duplicates (first wins).
  std::vector<Point> unique;
  std::set<Point> seen;
  for (Point& point : points) {
    if (target.relevant) {
      const Values keep = target.relevant(PointView{point});
      Point reduced;
      for (const auto& key : keep) reduced[key] = point.at(key);
      point = std::move(reduced);
    }
    if (seen.insert(point).second) unique.push_back(point);
  }
  return unique;
}

// ---------------------------------------------------------------------------
// Output.

nlohmann::ordered_json param_value(const ParamValue& value) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, value);
}

ParamList record_params(const IdentityReport& report) {
  ParamList params = report.params;
  params.emplace_back("tail", std::string(report.certified ? "certified" : "estimated"));
  return params;
}

double rounded_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

nlohmann::ordered_json report_json(const IdentityReport& report, double elapsed_ms) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record_params(report)) params[key] = param_value(value);
  nlohmann::ordered_json record;
  record["identity_id"] = report.identity_id;
  record["params"] = params;
  record["lhs_re"] = report.lhs.value.real();
  record["lhs_im"] = report.lhs.value.imag();
  record["rhs_re"] = report.rhs.value.real();
  record["rhs_im"] = report.rhs.value.imag();
  record["residual"] = report.residual;
  record["budget"] = report.budget;
  record["verdict"] = report.pass ? "pass" : "fail";
  record["terms_used"] = report.terms_used;
  record["elapsed_ms"] = rounded_ms(elapsed_ms);
  return record;
}

std::string csv_number(double value) {
  return nlohmann::json(value).dump();
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

const char* kCsvHeader =
    "identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,residual,budget,verdict,terms_used,elapsed_ms";

std::string report_csv(const IdentityReport& report, double elapsed_ms) {
  std::string params;
  for (const auto& [key, value] : record_params(report)) {
    if (!params.empty()) params += ';';
    const auto json = param_value(value);
    params += key + "=" + (json.is_string() ? json.get<std::string>() : json.dump());
  }
  std::ostringstream row;
  row << csv_quote(report.identity_id) << ',' << csv_quote(params) << ','
      << csv_number(report.lhs.value.real()) << ',' << csv_number(report.lhs.value.imag()) << ','
      << csv_number(report.rhs.value.real()) << ',' << csv_number(report.rhs.value.imag()) << ','
      << csv_number(report.residual) << ',' << csv_number(report.budget) << ','
      << (report.pass ? "pass" : "fail") << ',' << report.terms_used << ','
      << csv_number(rounded_ms(elapsed_ms));
  return row.str();
}

// ---------------------------------------------------------------------------

struct RunConfig {
  std::string command;
  std::string target;
  RawGrid grid;
  EvalSettings settings;
  std::string format = "json";
  std::string output;
  special::SwitchPoints switches;
  unsigned jobs = 1;
  std::int64_t n_max = 50;
};

std::string single(const RawGrid& scalars, const std::string& key, const std::string& fallback) {
  const auto it = scalars.find(key);
  if (it == scalars.end()) return fallback;
  if (it->second.size() != 1) throw InvalidConfig(key + " takes a single value");
  return it->second.front();
}

unsigned parse_jobs(const std::string& text, const std::string& source) {
  const auto jobs = parse_int(text, source);
  if (jobs < 1 || jobs > 256) throw InvalidConfig(source + " must be in 1..256");
  return static_cast<unsigned>(jobs);
}

RunConfig make_config(const std::string& command, const std::string& target, const RawGrid& file,
                      const RawGrid& flags) {
  RunConfig config;
  config.command = command;
  config.target = target;
  RawGrid merged = file;
  for (const auto& [key, values] : flags) merged[key] = values;

  for (const auto& [key, values] : merged) {
    if (is_grid_key(key)) config.grid[key] = values;
  }
  config.settings.tol = parse_double(single(merged, "tol", "1e-9"), "tol");
  if (!(config.settings.tol > 0.0)) throw InvalidConfig("tol must be positive");
  config.settings.snap = parse_double(single(merged, "snap", "1e-12"), "snap");
  if (!(config.settings.snap >= 0.0)) throw InvalidConfig("snap must be non-negative");
  config.format = single(merged, "format", "json");
  if (config.format != "json" && config.format != "csv") throw InvalidConfig("format must be json or csv");
  config.output = single(merged, "output", "");
  config.switches.bessel_j = parse_double(single(merged, "switch-j", "30"), "switch-j");
  config.switches.bessel_i = parse_double(single(merged, "switch-i", "30"), "switch-i");
  if (!(config.switches.bessel_j > 0.0) || !(config.switches.bessel_i > 0.0)) {
    throw InvalidConfig("switch points must be positive");
  }
  config.n_max = parse_int(single(merged, "n-max", "50"), "n-max");
  if (config.n_max < 1) throw InvalidConfig("n-max must be >= 1");
  if (merged.count("jobs")) {
    config.jobs = parse_jobs(single(merged, "jobs", "1"), "jobs");
  } else if (const char* env = std::getenv("BESSELSUM_JOBS"); env != nullptr && *env != '\0') {
    config.jobs = parse_jobs(env, "BESSELSUM_JOBS");
  }
  return config;
}

struct Job {
  std::string label;
  Task task;
};

struct Outcome {
  std::vector<IdentityReport> reports;
  double elapsed_ms = 0.0;
  std::string error;
};

std::string describe(const Point& point) {
  std::string text;
  for (const auto& [key, value] : point) text += (text.empty() ? "" : " ") + key + "=" + value;
  return text;
}

std::vector<Job> plan_jobs(const RunConfig& config, const std::vector<Target>& targets) {
  std::vector<const Target*> selected;
  for (const Target& target : targets) {
    if (config.target == "all" || config.target == target.name) selected.push_back(&target);
  }
  if (config.target == "all" && !config.grid.empty()) {
    throw InvalidConfig("'sweep all' runs the default grids and takes no grid values");
  }
  std::vector<Job> jobs;
  for (const Target* target : selected) {
    for (const auto& [key, values] : config.grid) {
      if (std::find(target->keys.begin(), target->keys.end(), key) == target->keys.end()) {
        throw InvalidConfig(target->name + " does not take '" + key + "'");
      }
      if (values.empty()) throw InvalidConfig("empty value list for " + key);
    }
    std::vector<RawGrid> grids;
    if (config.command == "verify") {
      RawGrid grid;
      for (const auto& [key, value] : target->verify_default) grid[key] = {value};
      grids.push_back(grid);
    } else {
      grids = target->default_sweep;
    }
    for (RawGrid& grid : grids) {
      for (const auto& [key, value] : target->verify_default) grid.try_emplace(key, Values{value});
      for (const auto& [key, values] : config.grid) grid[key] = values;
    }
    const std::vector<Point> points = expand_target(*target, grids);
    if (config.command == "verify" && points.size() != 1) {
      throw InvalidConfig("verify evaluates a single point; use sweep for grids");
    }
    for (const Point& point : points) {
      jobs.push_back({target->name + " " + describe(point), target->build(PointView{point}, config.settings)});
    }
  }
  return jobs;
}

std::vector<Outcome> execute(const std::vector<Job>& jobs, unsigned workers) {
  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= jobs.size()) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        outcomes[index].reports = jobs[index].task();
      } catch (const std::exception& e) {
        outcomes[index].error = e.what();
      }
      outcomes[index].elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();
  return outcomes;
}

int run_reports(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<Target> targets = make_targets();
  const std::vector<Job> jobs = plan_jobs(config, targets);
  special::set_default_switch_points(config.switches);
  const std::vector<Outcome> outcomes = execute(jobs, config.jobs);

  bool any_fail = false;
  bool any_error = false;
  if (config.format == "csv") out << kCsvHeader << '\n';
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Outcome& outcome = outcomes[i];
    if (!outcome.error.empty()) {
      any_error = true;
      err << "error: " << jobs[i].label << ": " << outcome.error << '\n';
      continue;
    }
    const double share = outcome.elapsed_ms / static_cast<double>(std::max<std::size_t>(1, outcome.reports.size()));
    for (const IdentityReport& report : outcome.reports) {
      any_fail = any_fail || !report.pass;
      if (config.format == "csv") {
        out << report_csv(report, share) << '\n';
      } else {
        out << report_json(report, share).dump() << '\n';
      }
    }
  }
  out.flush();
  if (any_error) return kExitEvaluationError;
  return any_fail ? kExitFail : kExitPass;
}

// ---------------------------------------------------------------------------
// Tables.

void emit_rows(const RunConfig& config, const Values& header, const std::vector<Values>& rows,
               std::ostream& out) {
  if (config.format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const Values& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return;
  }
  for (const Values& row : rows) {
    nlohmann::ordered_json record;
    for (std::size_t i = 0; i < header.size(); ++i) record[header[i]] = nlohmann::ordered_json::parse(row[i]);
    out << record.dump() << '\n';
  }
}

std::string single_grid(const RunConfig& config, const std::string& key, const std::string& fallback) {
  return single(config.grid, key, fallback);
}

int run_table(const RunConfig& config, std::ostream& out) {
  Values header;
  std::vector<Values> rows;
  if (config.target == "rk") {
    const auto k = parse_int(single_grid(config, "k", "2"), "k");
    if (k < 1 || k > 64) throw InvalidConfig("table rk needs 1 <= k <= 64");
    if (config.n_max > 10000000) throw InvalidConfig("n-max too large");
    const auto table = arith::rk_table(static_cast<int>(k), static_cast<std::size_t>(config.n_max));
    header = {"n", "value"};
    for (std::size_t n = 0; n <= table.size(); ++n) rows.push_back({std::to_string(n), arith::to_string(table.exact(n))});
  } else if (config.target == "dchi") {
    const Point point{{"q", single_grid(config, "q", "5")}, {"chi", single_grid(config, "chi", "1")}};
    const auto chi = checked_odd_character(PointView{point});
    if (config.n_max > 10000000) throw InvalidConfig("n-max too large");
    const auto table = arith::d_chi_table(chi, static_cast<std::size_t>(config.n_max));
    header = {"n", "value_re", "value_im"};
    for (std::size_t n = 1; n <= table.size(); ++n) {
      rows.push_back({std::to_string(n), csv_number(table[n].real()), csv_number(table[n].imag())});
    }
  } else {
    const auto q = parse_int(single_grid(config, "q", "5"), "q");
    if (q < 2 || q > 100003 || !characters::is_prime(q)) throw InvalidConfig("q must be a prime");
    header = {"chi", "n", "value_re", "value_im", "is_odd", "is_primitive"};
    for (const auto& chi : characters::enumerate_characters(q)) {
      for (std::int64_t n = 0; n < q; ++n) {
        const Complex v = chi(n);
        rows.push_back({std::to_string(chi.index()), std::to_string(n), csv_number(v.real()),
                        csv_number(v.imag()), chi.is_odd() ? "true" : "false",
                        chi.is_primitive() ? "true" : "false"});
      }
    }
  }
  emit_rows(config, header, rows, out);
  out.flush();
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Values names;
  for (const Target& target : make_targets()) names.push_back(target.name);
  Values sweep_names = names;
  sweep_names.push_back("all");

  CLI::App app{"Numerical certification of Bessel-series identities"};
  app.name("besselsum");
  app.require_subcommand(1);
  std::string target;
  std::string config_path;
  RawGrid flag_values;
  std::vector<CLI::Option*> value_options;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Flat key = value file (flags override it)");
    for (const auto& key : kGridKeys) {
      value_options.push_back(
          sub->add_option("--" + key, flag_values[key], "Grid values for " + key)->delimiter(','));
    }
    for (const auto& key : kScalarKeys) {
      value_options.push_back(sub->add_option("--" + key, flag_values[key], key));
    }
  };
  auto* verify = app.add_subcommand("verify", "Check one identity at one parameter point");
  verify->add_option("target", target, "Identity")->required()->check(CLI::IsMember(names));
  add_common(verify);
  auto* sweep = app.add_subcommand("sweep", "Check identities over parameter grids");
  sweep->add_option("target", target, "Identity, or 'all' for every default grid")
      ->default_val("all")
      ->check(CLI::IsMember(sweep_names));
  add_common(sweep);
  auto* table = app.add_subcommand("table", "Dump coefficient or character tables");
  table->add_option("target", target, "Table")->required()->check(CLI::IsMember({"rk", "dchi", "characters"}));
  add_common(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalidConfig;
  }

  std::string command = verify->parsed() ? "verify" : sweep->parsed() ? "sweep" : "table";
  RawGrid flags;
  for (const auto& key : kGridKeys) {
    if (!flag_values[key].empty()) flags[key] = flag_values[key];
  }
  for (const auto& key : kScalarKeys) {
    if (!flag_values[key].empty()) flags[key] = flag_values[key];
  }

  try {
    const RawGrid file = config_path.empty() ? RawGrid{} : read_config_file(config_path);
    const RunConfig config = make_config(command, target, file, flags);
    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
      file_out.open(config.output);
      if (!file_out) throw InvalidConfig("cannot write '" + config.output + "'");
      sink = &file_out;
    }
    if (command == "table") return run_table(config, *sink);
    return run_reports(config, *sink, err);
  } catch (const InvalidConfig& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluationError;
  }
}

}  // namespace besselsum::cli
