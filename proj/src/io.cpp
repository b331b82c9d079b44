#include "focksim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace focksim {

const char* const kCsvHeader =
    "t,n_expect,entropy,purity,jensen_bound,vn_entropy,trace_error";

namespace {

const std::vector<std::string> kSchemaKeys = {
    "name",       "model",       "levels",        "dim",
    "gamma",      "omega_initial", "omega_final", "ramp_time",
    "t_final",    "dt",          "initial_level", "copies",
    "sample_every"};

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void parse_fail(const std::string& what, int line) {
  std::ostringstream msg;
  msg << what << " (line " << line << ")";
  throw ParseError(msg.str());
}

struct RawEntry {
  std::string value;
  int line = 0;
};

std::optional<Model> model_from_string(const std::string& s) {
  if (s == "lindblad-decay") return Model::LindbladDecay;
  if (s == "rate-decay") return Model::RateDecay;
  if (s == "unitary-quench") return Model::UnitaryQuench;
  if (s == "unitary-ramp") return Model::UnitaryRamp;
  return std::nullopt;
}

double parse_real(const RawEntry& e, const std::string& key) {
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    parse_fail("value for '" + key + "' is not a number", e.line);
  return out;
}

long parse_integer(const RawEntry& e, const std::string& key) {
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  long out = 0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    parse_fail("value for '" + key + "' is not an integer", e.line);
  return out;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_csv_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  std::map<std::string, RawEntry> entries;
  std::istringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    if (const auto hash = raw_line.find('#'); hash != std::string::npos)
      raw_line.erase(hash);
    const std::string line = trim(raw_line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail("expected key=value", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(kSchemaKeys.begin(), kSchemaKeys.end(), key) ==
        kSchemaKeys.end())
      parse_fail("unknown key '" + key + "'", line_no);
    if (value.empty()) parse_fail("empty value for '" + key + "'", line_no);
    if (!entries.emplace(key, RawEntry{value, line_no}).second)
      parse_fail("duplicate key '" + key + "'", line_no);
  }

  auto require = [&](const std::string& key) -> const RawEntry& {
    const auto it = entries.find(key);
    if (it == entries.end())
      throw ParseError("missing required key '" + key + "'");
    return it->second;
  };

  Scenario s;
  {
    const RawEntry& model = require("model");
    const auto parsed = model_from_string(model.value);
    if (!parsed) parse_fail("unknown model '" + model.value + "'", model.line);
    s.model = *parsed;
  }
  s.name = require("name").value;
  s.levels = static_cast<int>(parse_integer(require("levels"), "levels"));
  s.t_final = parse_real(require("t_final"), "t_final");
  s.dt = parse_real(require("dt"), "dt");

  if (is_decay_model(s.model)) {
    s.gamma = parse_real(require("gamma"), "gamma");
  } else {
    s.omega_initial = parse_real(require("omega_initial"), "omega_initial");
    s.omega_final = parse_real(require("omega_final"), "omega_final");
  }

  auto lookup = [&](const char* key) -> const RawEntry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  if (const auto* e = lookup("dim")) {
    s.dim = static_cast<int>(parse_integer(*e, "dim"));
  } else if (is_decay_model(s.model)) {
    s.dim = s.levels + 1;  // lowering never leaves the span
  } else {
    throw ParseError("missing required key 'dim'");
  }
  if (const auto* e = lookup("gamma"); e && !is_decay_model(s.model))
    s.gamma = parse_real(*e, "gamma");
  if (const auto* e = lookup("omega_initial"); e && is_decay_model(s.model))
    s.omega_initial = parse_real(*e, "omega_initial");
  if (const auto* e = lookup("omega_final"); e && is_decay_model(s.model))
    s.omega_final = parse_real(*e, "omega_final");
  if (const auto* e = lookup("ramp_time"))
    s.ramp_time = parse_real(*e, "ramp_time");
  if (const auto* e = lookup("initial_level"))
    s.initial_level = static_cast<int>(parse_integer(*e, "initial_level"));
  else
    s.initial_level = s.levels;
  if (const auto* e = lookup("copies")) s.copies = parse_integer(*e, "copies");
  if (const auto* e = lookup("sample_every"))
    s.sample_every = parse_integer(*e, "sample_every");

  s.validate();
  return s;
}

Scenario parse_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

std::string render_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "name=" << s.name << "\n";
  out << "model=" << to_string(s.model) << "\n";
  out << "levels=" << s.levels << "\n";
  out << "dim=" << s.dim << "\n";
  out << "gamma=" << format_real(s.gamma) << "\n";
  out << "omega_initial=" << format_real(s.omega_initial) << "\n";
  out << "omega_final=" << format_real(s.omega_final) << "\n";
  out << "ramp_time=" << format_real(s.ramp_time) << "\n";
  out << "t_final=" << format_real(s.t_final) << "\n";
  out << "dt=" << format_real(s.dt) << "\n";
  out << "initial_level=" << s.initial_level << "\n";
  out << "copies=" << s.copies << "\n";
  out << "sample_every=" << s.sample_every << "\n";
  return out.str();
}

std::string format_trajectory_csv(const Trajectory& trajectory,
                                  long sample_every) {
  if (sample_every < 1)
    throw std::domain_error("format_trajectory_csv: sample_every must be >= 1");
  std::string out(kCsvHeader);
  out += '\n';
  for (size_t i = 0; i < trajectory.samples.size(); i += sample_every) {
    const TrajectorySample& s = trajectory.samples[i];
    out += format_csv_value(s.t);
    out += ',';
    out += format_csv_value(s.n_expect);
    out += ',';
    out += format_csv_value(s.entropy);
    out += ',';
    out += format_csv_value(s.purity);
    out += ',';
    out += format_csv_value(s.jensen_bound);
    out += ',';
    out += format_csv_value(s.vn_entropy);
    out += ',';
    out += format_csv_value(s.trace_error);
    out += '\n';
  }
  return out;
}

void write_trajectory_csv(const Trajectory& trajectory,
                          const std::filesystem::path& path,
                          long sample_every) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << format_trajectory_csv(trajectory, sample_every);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<TrajectorySample> read_trajectory_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read CSV: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw ParseError("CSV header mismatch in " + path.string());
  std::vector<TrajectorySample> samples;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double fields[7];
    const char* ptr = line.data();
    const char* end = ptr + line.size();
    for (int f = 0; f < 7; ++f) {
      auto [next, ec] = std::from_chars(ptr, end, fields[f]);
      if (ec != std::errc{}) parse_fail("bad CSV field", line_no);
      ptr = next;
      if (f < 6) {
        if (ptr == end || *ptr != ',') parse_fail("expected 7 CSV fields", line_no);
        ++ptr;
      }
    }
    if (ptr != end) parse_fail("trailing text after 7 CSV fields", line_no);
    samples.push_back({fields[0], fields[1], fields[2], fields[3], fields[4],
                       fields[5], fields[6]});
  }
  return samples;
}

}  // namespace focksim
