#include "run_config.hpp"

#include <cstdio>
#include <sstream>

#include "phasepotts/errors.hpp"
#include "phasepotts/serialization.hpp"

namespace phasepotts::cli {

void RunConfig::validate() const {
  if (iterations < 1) throw ParameterError("iterations must be >= 1");
  if (colors != 2 && colors != 4 && colors != 8 && colors != 16) {
    throw ParameterError("colors must be one of 2, 4, 8, 16");
  }
  if (!(lock_tolerance > 0.0 && lock_tolerance < std::numbers::pi / 2)) {
    throw ParameterError("lock_tolerance must lie in (0, pi/2)");
  }
  plan.validate();
}

int RunConfig::stages() const {
  int m = 0;
  while ((1 << m) < colors) ++m;
  return m;
}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ParseError("expected a number, got '" + v + "'", line);
}

std::uint64_t to_uint(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    if (!v.empty() && v[0] != '-') {
      const auto u = std::stoull(v, &used);
      if (used == v.size()) return u;
    }
  } catch (const std::exception&) {
  }
  throw ParseError("expected a non-negative integer, got '" + v + "'", line);
}

}  // namespace

void apply_config_text(RunConfig& c, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
    const auto key = trim(content.substr(0, eq));
    const auto value = trim(content.substr(eq + 1));

    if (key == "coupling") c.dynamics.coupling = to_double(value, line);
    else if (key == "shil") c.dynamics.shil = to_double(value, line);
    else if (key == "sigma") c.dynamics.sigma = to_double(value, line);
    else if (key == "dt") c.dynamics.dt = to_double(value, line);
    else if (key == "t_init") c.plan.t_init = to_double(value, line);
    else if (key == "t_anneal1") c.plan.t_anneal1 = to_double(value, line);
    else if (key == "t_lock1") c.plan.t_lock1 = to_double(value, line);
    else if (key == "t_relax") c.plan.t_relax = to_double(value, line);
    else if (key == "t_anneal2") c.plan.t_anneal2 = to_double(value, line);
    else if (key == "t_lock2") c.plan.t_lock2 = to_double(value, line);
    else if (key == "sigma_relax") c.plan.sigma_relax = to_double(value, line);
    else if (key == "iterations") c.iterations = to_uint(value, line);
    else if (key == "seed") c.master_seed = to_uint(value, line);
    else if (key == "colors") c.colors = static_cast<int>(to_uint(value, line));
    else if (key == "threads") c.threads = to_uint(value, line);
    else if (key == "lock_tolerance") c.lock_tolerance = to_double(value, line);
    else if (key == "output") c.output = value;
    else throw ParseError("unknown key '" + key + "'", line);
  }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  apply_config_text(config, read_text_file(path));
}

std::string format_config(const RunConfig& c) {
  std::ostringstream out;
  char buf[64];
  auto num = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << key << " = " << buf << '\n';
  };
  num("coupling", c.dynamics.coupling);
  num("shil", c.dynamics.shil);
  num("sigma", c.dynamics.sigma);
  num("dt", c.dynamics.dt);
  num("t_init", c.plan.t_init);
  num("t_anneal1", c.plan.t_anneal1);
  num("t_lock1", c.plan.t_lock1);
  num("t_relax", c.plan.t_relax);
  num("t_anneal2", c.plan.t_anneal2);
  num("t_lock2", c.plan.t_lock2);
  num("sigma_relax", c.plan.sigma_relax);
  out << "iterations = " << c.iterations << '\n';
  out << "seed = " << c.master_seed << '\n';
  out << "colors = " << c.colors << '\n';
  out << "threads = " << c.threads << '\n';
  num("lock_tolerance", c.lock_tolerance);
  if (!c.output.empty()) out << "output = " << c.output << '\n';
  return out.str();
}

}  // namespace phasepotts::cli
