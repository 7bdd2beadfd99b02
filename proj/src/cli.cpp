#include "ordtri/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ordtri/bounds.hpp"
#include "ordtri/constructions.hpp"
#include "ordtri/error.hpp"
#include "ordtri/incidence.hpp"
#include "ordtri/point_file.hpp"
#include "ordtri/report.hpp"
#include "ordtri/triangles.hpp"

namespace ordtri {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string kind;
  std::int64_t size = 0, n = 0, bound = 0, n1 = 0, n2 = 0;
  std::uint64_t seed = 1;
  std::string input = "-";
  std::string line;
  std::string extras;
  std::int64_t c = 12000, c_prime = 125;
  std::string mode = "fast";
  std::size_t limit = 100;
  bool allow_small_c = false;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PointSet read_input(const std::string& path, std::istream& in) {
  return path == "-" ? parse_point_file(in) : load_point_file(path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream ss(s);
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

CanonicalLine parse_line_flag(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("--line expects a,b,c");
  BigInt coef[3];
  for (int i = 0; i < 3; ++i) {
    const Rational v = Rational::parse(parts[i]);
    if (!v.is_integer()) throw UsageError("--line coefficients must be integers");
    coef[i] = v.numerator();
  }
  if (coef[0] == 0 && coef[1] == 0) throw UsageError("--line needs a or b nonzero");
  return CanonicalLine::normalize(coef[0], coef[1], coef[2]);
}

std::vector<Point> parse_extras(const std::string& text) {
  std::vector<Point> pts;
  for (const auto& item : split(text, ';')) {
    if (item.empty()) continue;
    const auto xy = split(item, ',');
    if (xy.size() != 2) throw UsageError("--extras expects x,y;x,y;...");
    pts.push_back(Point{Rational::parse(xy[0]), Rational::parse(xy[1])});
  }
  return pts;
}

Mode parse_mode(const std::string& m) {
  if (m == "fast") return Mode::Fast;
  if (m == "exhaustive") return Mode::Exhaustive;
  if (m == "count") return Mode::CountOnly;
  throw UsageError("unknown mode '" + m + "'");
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_generate(const Options& o, std::istream& in, std::ostream& out) {
  PointSet pts;
  if (o.kind == "grid") {
    pts = gen_grid(o.size);
  } else if (o.kind == "random") {
    pts = gen_random(o.n, o.bound, o.seed);
  } else if (o.kind == "two-line") {
    pts = gen_two_line_union(o.n1, o.n2);
  } else if (o.kind == "rich-line") {
    pts = gen_rich_line_plus(o.size, parse_extras(o.extras));
  } else if (o.kind == "projection") {
    if (o.line.empty()) throw UsageError("--kind projection needs --line a,b,c");
    pts = gen_projection_augmented(read_input(o.input, in), parse_line_flag(o.line));
  } else if (o.kind == "cubic") {
    pts = gen_cubic_progression(o.size);
  } else {
    throw UsageError("unknown --kind '" + o.kind + "'");
  }
  write_point_file(out, pts);
  return kExitOk;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const auto start = Clock::now();
  const PointSet pts = read_input(o.input, in);
  if (pts.size() < 2) throw UsageError("underdetermined: need at least 2 points");
  const auto profile = enumerate_lines(pts);
  const BigInt n(pts.size());
  const BigInt expected = n * (n - 1) / 2;
  const BigInt sum = profile.pair_sum();
  Json doc{{"version", kReportVersion},
           {"command", "analyze"},
           {"parameters", {{"input", o.input}}},
           {"points", pts.size()},
           {"classification", to_json(classify_degeneracy(pts))},
           {"line_count", profile.line_count()},
           {"max_multiplicity", profile.max_multiplicity()},
           {"spectrum", spectrum_json(profile)},
           {"pair_sum", {{"sum", sum.get_str()}, {"expected", expected.get_str()}, {"holds", sum == expected}}}};
  doc["timing"] = {{"seconds", seconds_since(start)}};
  emit(out, doc);
  return kExitOk;
}

void check_c(const Options& o) {
  if (o.c < 2 || (o.c < 3 && !o.allow_small_c)) {
    throw UsageError("--c must be at least 3 (c = 2 needs --allow-small-c)");
  }
  if (o.c_prime < 1) throw UsageError("--c-prime must be positive");
}

int cmd_find(const Options& o, std::istream& in, std::ostream& out) {
  check_c(o);
  const Mode mode = parse_mode(o.mode);
  const auto start = Clock::now();
  const PointSet pts = read_input(o.input, in);
  const Constants constants = make_constants(o.c, o.c_prime);

  Json doc{{"version", kReportVersion},
           {"command", "find"},
           {"parameters",
            {{"input", o.input},
             {"c", o.c},
             {"c_prime", o.c_prime},
             {"alpha", constants.alpha().to_string()},
             {"mode", to_string(mode)},
             {"limit", o.limit},
             {"allow_small_c", o.allow_small_c}}},
           {"points", pts.size()}};
  TriangleReport report;
  if (pts.size() >= 2) {
    const auto profile = enumerate_lines(pts);
    report = find_c_ordinary(pts, profile, constants, mode, o.limit);
    doc["spectrum"] = spectrum_json(profile);
  } else {
    report = find_c_ordinary(pts, constants, mode, o.limit);
    doc["spectrum"] = Json::array();
  }
  doc["classification"] = to_json(report.classification);
  const Json section = to_json(report);
  for (const auto& [key, value] : section.items()) doc[key] = value;
  doc["timing"] = {{"seconds", seconds_since(start)}};
  emit(out, doc);
  return report.count > 0 ? kExitOk : kExitNoTriangle;
}

int cmd_verify_bounds(const Options& o, std::istream& in, std::ostream& out) {
  check_c(o);
  const auto start = Clock::now();
  const PointSet pts = read_input(o.input, in);
  if (pts.size() < 2) throw UsageError("underdetermined: need at least 2 points");
  const Constants constants = make_constants(o.c, o.c_prime);
  const auto profile = enumerate_lines(pts);
  const auto suite = verify_bounds(pts, profile, constants);
  Json reports = Json::array();
  for (const auto& r : suite.reports) reports.push_back(to_json(r));
  Json doc{{"version", kReportVersion},
           {"command", "verify-bounds"},
           {"parameters", {{"input", o.input}, {"c", o.c}, {"c_prime", o.c_prime}}},
           {"points", pts.size()},
           {"classification", to_json(classify_degeneracy(pts))},
           {"spectrum", spectrum_json(profile)},
           {"bounds", std::move(reports)},
           {"skipped", suite.skipped},
           {"all_satisfied", suite.all_satisfied()}};
  doc["timing"] = {{"seconds", seconds_since(start)}};
  emit(out, doc);
  return suite.all_satisfied() ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Find and count c-ordinary triangles in planar point sets"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Write a generated point set to standard output");
  gen->add_option("--kind", o.kind, "grid | random | two-line | rich-line | projection | cubic")->required();
  gen->add_option("--size", o.size, "grid side, cubic m, or rich-line k");
  gen->add_option("--n", o.n, "number of random points");
  gen->add_option("--bound", o.bound, "random coordinate bound");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--n1", o.n1, "two-line: points on y = 0");
  gen->add_option("--n2", o.n2, "two-line: points on x = 0");
  gen->add_option("--input", o.input, "projection: base point file");
  gen->add_option("--line", o.line, "projection: line a,b,c for a x + b y + c = 0");
  gen->add_option("--extras", o.extras, "rich-line: extra points x,y;x,y;...");

  auto* analyze = app.add_subcommand("analyze", "Determined lines, spectrum and degeneracy of a point file");
  analyze->add_option("input", o.input, "point file, or - for standard input");

  auto add_constants = [&o](CLI::App* cmd) {
    cmd->add_option("input", o.input, "point file, or - for standard input");
    cmd->add_option("--c", o.c, "richness threshold c");
    cmd->add_option("--c-prime", o.c_prime, "incidence constant c'");
    cmd->add_flag("--allow-small-c", o.allow_small_c, "accept c = 2");
  };
  auto* find = app.add_subcommand("find", "Find c-ordinary triangles");
  add_constants(find);
  find->add_option("--mode", o.mode, "fast | exhaustive | count");
  find->add_option("--limit", o.limit, "maximum number of listed triangles");

  auto* verify = app.add_subcommand("verify-bounds", "Check the incidence and counting bounds on a point file");
  add_constants(verify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_generate(o, in, out);
    if (analyze->parsed()) return cmd_analyze(o, in, out);
    if (find->parsed()) return cmd_find(o, in, out);
    if (verify->parsed()) return cmd_verify_bounds(o, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace ordtri
