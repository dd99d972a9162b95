#include "lamina/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lamina/leaf_invariants.hpp"
#include "lamina/render.hpp"
#include "lamina/verify.hpp"

namespace lamina::cli {

namespace {

CommandResult error_result(const std::string& reason) {
  CommandResult r;
  r.status = Status::error;
  r.diagnostics.push_back(reason);
  return r;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Json check_to_json(const CheckResult& c) {
  Json j;
  j["check"] = c.name;
  j["passed"] = c.passed;
  j["cases"] = c.cases;
  j["failures"] = c.failures;
  j["witnesses"] = c.witnesses;
  return j;
}

LabelledAddress parse_address(const std::string& csv, bool& labelled) {
  LabelledAddress out;
  labelled = false;
  for (const auto& item : split(csv, ',')) {
    const auto colon = item.find(':');
    AddressEntry e;
    try {
      e.period = std::stoi(item.substr(0, colon));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed address entry '" + item + "'");
    }
    if (colon != std::string::npos) {
      e.label = parse_rational(item.substr(colon + 1));
      labelled = true;
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw std::invalid_argument("empty address");
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const std::bad_alloc&) {
    return error_result("resource exhaustion: out of memory");
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
  }
  return "error";
}

int CommandResult::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::violation: return 1;
    case Status::error: return 2;
  }
  return 2;
}

std::filesystem::path default_atlas_path() {
  if (const char* env = std::getenv(kAtlasEnv); env != nullptr && *env != '\0') return env;
  return kDefaultAtlasPath;
}

CommandResult cmd_orbit(const std::string& theta) {
  return guarded([&] {
    const Angle a = Angle::parse(theta);
    CommandResult r;
    r.payload.push_back(orbit_to_json(a, orbit(a)));
    return r;
  });
}

CommandResult cmd_address(const std::string& theta) {
  return guarded([&] {
    const Angle a = Angle::parse(theta);
    CommandResult r;
    Json j;
    j["angle"] = a.str();
    j["kneading"] = a.is_zero() ? Json(nullptr) : Json(kneading_sequence(a).str());
    j["address"] = a.is_zero() ? std::vector<int>{1} : internal_address(a);
    r.payload.push_back(std::move(j));
    return r;
  });
}

CommandResult cmd_portrait(const std::string& theta1, const std::string& theta2) {
  return guarded([&] {
    const Angle a = Angle::parse(theta1);
    const Angle b = Angle::parse(theta2);
    const auto p = realize_portrait(a, b);
    if (!p) return error_result("not realizable: " + a.str() + " -> " + b.str() + " is not a characteristic arc");
    CommandResult r;
    r.payload.push_back(portrait_to_json(canonical_form(*p)));
    return r;
  });
}

CommandResult cmd_atlas_build(int max_period, const std::filesystem::path& out) {
  return guarded([&] {
    const Atlas atlas = atlas_build(max_period);
    atlas_save(atlas, out);
    CommandResult r;
    Json j;
    j["atlas"] = out.string();
    j["max_period"] = max_period;
    j["components"] = atlas.components().size();
    Json counts = Json::object();
    const auto by_period = atlas.counts_by_period();
    for (int n = 1; n <= max_period; ++n) counts[std::to_string(n)] = by_period[static_cast<std::size_t>(n)];
    j["counts"] = std::move(counts);
    r.payload.push_back(std::move(j));
    return r;
  });
}

CommandResult cmd_atlas_query(const std::filesystem::path& path, const std::optional<std::string>& angle,
                              const std::optional<std::string>& address) {
  return guarded([&] {
    if (angle.has_value() == address.has_value()) return error_result("query needs exactly one of --angle, --address");
    const Atlas atlas = atlas_load(path);
    CommandResult r;
    if (angle) {
      const Angle a = Angle::parse(*angle);
      const auto* c = atlas.query_by_angle(a);
      if (c == nullptr) return error_result("no component has root angle " + a.str());
      r.payload.push_back(component_to_json(*c));
      return r;
    }
    bool labelled = false;
    const LabelledAddress addr = parse_address(*address, labelled);
    if (labelled) {
      const auto* c = atlas.query_by_labelled_address(addr);
      if (c == nullptr) return error_result("unknown address " + to_string(addr));
      r.payload.push_back(component_to_json(*c));
      return r;
    }
    const auto matches = atlas.query_by_address(periods_of(addr));
    if (matches.empty()) return error_result("unknown address " + *address);
    for (const auto* c : matches) r.payload.push_back(component_to_json(*c));
    return r;
  });
}

CommandResult cmd_atlas_info(const std::filesystem::path& path) {
  return guarded([&] {
    const Atlas atlas = atlas_load(path);
    CommandResult r;
    Json j;
    j["atlas"] = path.string();
    j["max_period"] = atlas.max_period();
    j["components"] = atlas.components().size();
    Json counts = Json::object();
    const auto by_period = atlas.counts_by_period();
    for (int n = 1; n <= atlas.max_period(); ++n) counts[std::to_string(n)] = by_period[static_cast<std::size_t>(n)];
    j["counts"] = std::move(counts);
    r.payload.push_back(std::move(j));
    return r;
  });
}

CommandResult cmd_verify(int max_period, std::optional<int> depth_opt) {
  return guarded([&] {
    if (max_period < 2) return error_result("--max-period must be >= 2");
    const int depth = depth_opt.value_or(std::max(16, 2 * max_period));
    if (depth < 2 * max_period) return error_result("--depth must be at least twice --max-period");

    CommandResult r;
    std::vector<CheckResult> checks;
    const Atlas atlas = atlas_build(max_period);
    checks.push_back(check_census(atlas));
    const auto portraits = enumerate_portraits(max_period);
    checks.push_back(check_rigidity(rigidity_sweep(portraits, max_period)));
    checks.push_back(check_critical_arc_preimage(portraits));
    checks.push_back(check_address_injectivity(atlas));
    checks.push_back(check_bundle_injectivity(atlas));
    checks.push_back(check_irregular_points(atlas));
    checks.push_back(check_solenoid_algebra(static_cast<std::size_t>(depth)));
    checks.push_back(check_adding_machine(static_cast<std::size_t>(depth)));

    bool ok = true;
    for (const auto& c : checks) {
      ok = ok && c.passed;
      r.payload.push_back(check_to_json(c));
    }

    // Informational: never affects the status.
    const auto pattern = check_lu_discrepancy_pattern(atlas, max_period);
    std::size_t with_discrepancy = 0;
    for (const auto& c : atlas.components()) {
      if (!lu_discrepancy(c, atlas).discrepancies.empty()) ++with_discrepancy;
    }
    Json lu;
    lu["report"] = "lu_discrepancy";
    lu["components"] = atlas.components().size();
    lu["components_with_leaf_count_discrepancy"] = with_discrepancy;
    lu["confined_to_satellite_steps"] = pattern.passed;
    lu["witnesses"] = pattern.witnesses;
    r.payload.push_back(std::move(lu));

    // Informational: the closed form picks the wrong halves on some portraits.
    const auto formula = check_critical_arc_formula(portraits);
    Json eta;
    eta["report"] = "critical_arc_formula";
    eta["portraits"] = formula.cases;
    eta["exceptions"] = formula.failures;
    eta["witnesses"] = formula.witnesses;
    r.payload.push_back(std::move(eta));

    Json summary;
    summary["max_period"] = max_period;
    summary["depth"] = depth;
    summary["components"] = atlas.components().size();
    summary["portraits"] = portraits.size();
    r.payload.push_back(std::move(summary));
    r.status = ok ? Status::ok : Status::violation;
    return r;
  });
}

CommandResult cmd_render_portrait(const std::string& angles, const std::filesystem::path& out) {
  return guarded([&] {
    const auto parts = split(angles, ',');
    if (parts.size() != 2) return error_result("--angles needs exactly two angles, e.g. 3/7,4/7");
    const Angle a = Angle::parse(parts[0]);
    const Angle b = Angle::parse(parts[1]);
    const auto p = realize_portrait(a, b);
    if (!p) return error_result("not realizable: " + a.str() + " -> " + b.str());
    const auto canonical = canonical_form(*p);
    write_file(out, render_portrait_svg(canonical));
    CommandResult r;
    Json j;
    j["out"] = out.string();
    j["portrait"] = portrait_to_json(canonical);
    r.payload.push_back(std::move(j));
    return r;
  });
}

CommandResult cmd_render_wakes(int max_period, const std::filesystem::path& out) {
  return guarded([&] {
    const Atlas atlas = atlas_build(max_period);
    write_file(out, render_wakes_svg(atlas, max_period));
    CommandResult r;
    Json j;
    j["out"] = out.string();
    j["max_period"] = max_period;
    j["chords"] = atlas.components().size() - 1;
    r.payload.push_back(std::move(j));
    return r;
  });
}

void emit(const CommandResult& result, std::ostream& out, bool pretty) {
  for (const auto& record : result.payload) out << (pretty ? record.dump(2) : record.dump()) << '\n';
  Json status;
  status["status"] = to_string(result.status);
  status["diagnostics"] = result.diagnostics;
  out << (pretty ? status.dump(2) : status.dump()) << '\n';
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial invariants of quadratic polynomials"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indented, human-oriented output");

  std::string theta, theta2;
  auto* orbit_cmd = app.add_subcommand("orbit", "Doubling orbit of an angle");
  orbit_cmd->add_option("theta", theta, "Angle as num/den")->required();
  auto* address_cmd = app.add_subcommand("address", "Internal address of a periodic angle");
  address_cmd->add_option("theta", theta, "Angle as num/den")->required();
  auto* portrait_cmd = app.add_subcommand("portrait", "Orbit portrait with characteristic arc theta1 -> theta2");
  portrait_cmd->add_option("theta1", theta, "First root angle")->required();
  portrait_cmd->add_option("theta2", theta2, "Second root angle")->required();

  int max_period = 0;
  std::optional<int> depth;
  std::string atlas_path = default_atlas_path().string();
  std::optional<std::string> angle, address;
  std::string out_path;

  auto* atlas_cmd = app.add_subcommand("atlas", "Build or query a hyperbolic-component atlas");
  atlas_cmd->require_subcommand(1);
  auto* build_cmd = atlas_cmd->add_subcommand("build", "Enumerate components up to a period");
  build_cmd->add_option("--max-period", max_period)->required()->check(CLI::Range(1, 30));
  build_cmd->add_option("--atlas,--out", atlas_path, "Output path");
  auto* query_cmd = atlas_cmd->add_subcommand("query", "Look up a component");
  query_cmd->add_option("--atlas", atlas_path, "Atlas path");
  query_cmd->add_option("--angle", angle, "Root angle");
  query_cmd->add_option("--address", address, "Internal address, e.g. 1,2,3 or 1,3:1/3");
  auto* info_cmd = atlas_cmd->add_subcommand("info", "Summarize an atlas file");
  info_cmd->add_option("--atlas", atlas_path, "Atlas path");

  auto* verify_cmd = app.add_subcommand("verify", "Run every verification sweep");
  verify_cmd->add_option("--max-period", max_period)->required();
  verify_cmd->add_option("--depth", depth, "Solenoid depth (>= 2 * max period)");

  auto* render_cmd = app.add_subcommand("render", "Write an SVG figure");
  render_cmd->require_subcommand(1);
  std::string angles;
  auto* render_portrait = render_cmd->add_subcommand("portrait", "Chord diagram of one portrait");
  render_portrait->add_option("--angles", angles, "Characteristic arc endpoints A,B")->required();
  render_portrait->add_option("--out", out_path)->required();
  auto* render_wakes = render_cmd->add_subcommand("wakes", "Root-pair chords of all components");
  render_wakes->add_option("--max-period", max_period)->required()->check(CLI::Range(2, 30));
  render_wakes->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    emit(error_result(std::string("usage: ") + e.what()), out, pretty);
    return 2;
  }

  CommandResult result;
  if (*orbit_cmd) {
    result = cmd_orbit(theta);
  } else if (*address_cmd) {
    result = cmd_address(theta);
  } else if (*portrait_cmd) {
    result = cmd_portrait(theta, theta2);
  } else if (*build_cmd) {
    result = cmd_atlas_build(max_period, atlas_path);
  } else if (*query_cmd) {
    result = cmd_atlas_query(atlas_path, angle, address);
  } else if (*info_cmd) {
    result = cmd_atlas_info(atlas_path);
  } else if (*verify_cmd) {
    result = cmd_verify(max_period, depth);
  } else if (*render_portrait) {
    result = cmd_render_portrait(angles, out_path);
  } else if (*render_wakes) {
    result = cmd_render_wakes(max_period, out_path);
  }
  emit(result, out, pretty);
  for (const auto& d : result.diagnostics) err << d << '\n';
  return result.exit_code();
}

}  // namespace lamina::cli
