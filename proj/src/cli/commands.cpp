#include "ehrhart/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>
#include <map>

#include "CLI11.hpp"
#include "ehrhart/cli/json_io.hpp"
#include "ehrhart/error.hpp"
#include "ehrhart/exactseq.hpp"
#include "ehrhart/families.hpp"
#include "ehrhart/oracle.hpp"
#include "ehrhart/series.hpp"
#include "ehrhart/simplex.hpp"
#include "ehrhart/theorem.hpp"

namespace ehrhart::cli {

namespace {

struct GlobalOptions {
  std::uint64_t cap_box_points = kDefaultBoxPointCap;
  std::uint64_t cap_oracle_box = oracle::kDefaultOracleBoxCap;
  long n_max = 0;  // 0: not given
  bool n_max_given = false;
  bool strict = false;
  std::string format = "json";
};

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::MixedDimensions:
    case ErrorCode::BadParams:
      return kUsage;
    case ErrorCode::RouteMismatch:
      return kRouteMismatch;
    case ErrorCode::TheoremViolated:
      return kTheoremViolated;
    default:
      return kMathDomain;
  }
}

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Either --delta or --file must name the input polynomial.
struct PolynomialInput {
  std::string delta_text;
  std::string file;
};

struct ResolvedPolynomial {
  series::HPolynomial h;
  Json echo;
  std::optional<LatticeSimplex> simplex;
};

ResolvedPolynomial resolve(const PolynomialInput& in, const GlobalOptions& g) {
  if (in.delta_text.empty() == in.file.empty())
    throw Error(ErrorCode::InvalidInput, "give exactly one of --delta or --file");
  if (!in.delta_text.empty()) {
    ResolvedPolynomial r{series::make_h_polynomial(parse_int_list(in.delta_text)), Json::object(), std::nullopt};
    r.echo["delta"] = ints_json(r.h.coeffs);
    return r;
  }
  const SimplexFile file = read_simplex_file(in.file);
  LatticeSimplex simplex = LatticeSimplex::from_vertices(file.vertices);
  const DeltaVector delta = delta_vector(simplex, g.cap_box_points);
  ResolvedPolynomial r{series::HPolynomial{delta.values}, Json::object(), std::move(simplex)};
  r.echo["simplex"] = simplex_json(file);
  r.echo["delta"] = ints_json(delta.values);
  return r;
}

std::optional<PointCounts> oracle_counts(const LatticeSimplex& simplex, const GlobalOptions& g) {
  try {
    return PointCounts{oracle::brute_count(simplex, 1, false, g.cap_oracle_box),
                       oracle::brute_count(simplex, 1, true, g.cap_oracle_box)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoxCapExceeded || g.strict) throw;
    return std::nullopt;
  }
}

Json facts_json(const BasicFactsReport& facts, bool oracle_used) {
  Json j;
  j["oracle"] = oracle_used ? "used" : "skipped";
  j["passed"] = facts.all_passed();
  Json checks = Json::array();
  for (const FactCheck& c : facts.checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

Json merge(Json head, const Json& tail) {
  for (auto it = tail.begin(); it != tail.end(); ++it) head[it.key()] = it.value();
  return head;
}

int cmd_delta(const std::string& path, const GlobalOptions& g, std::ostream& out) {
  const SimplexFile file = read_simplex_file(path);
  const LatticeSimplex simplex = LatticeSimplex::from_vertices(file.vertices);
  const DeltaVector delta = delta_vector(simplex, g.cap_box_points);
  const std::optional<PointCounts> counts = oracle_counts(simplex, g);
  const BasicFactsReport facts = basic_facts_check(simplex, delta, counts);

  Json report{{"command", "delta"}, {"input", simplex_json(file)}};
  report = merge(report, delta_report(delta.values, simplex.normalized_volume()));
  report["basic_facts"] = facts_json(facts, counts.has_value());
  emit(out, report);
  return facts.all_passed() ? kOk : kMathDomain;
}

int cmd_dilate(const PolynomialInput& in, long n, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "--n must be >= 1");
  const ResolvedPolynomial input = resolve(in, g);
  const series::HPolynomial conv = series::u_n_convolution(input.h, n);
  const series::HPolynomial interp = series::u_n_interpolation(input.h, n);
  bool agree = conv == interp;

  Json report{{"command", "dilate"}, {"input", input.echo}, {"n", n}};
  report["routes"] = {{"convolution", ints_json(conv.coeffs)}, {"interpolation", ints_json(interp.coeffs)}};
  if (input.simplex && g.strict) {
    const DeltaVector geometric = delta_vector(dilate(*input.simplex, Int(n)), g.cap_box_points);
    report["routes"]["dilated_simplex"] = ints_json(geometric.values);
    agree = agree && geometric.values == conv.coeffs;
  }
  report["routes_agree"] = agree;
  Int volume = series::coefficient_sum(conv.coeffs);
  report = merge(report, delta_report(conv.coeffs, volume));
  emit(out, report);
  if (!agree) {
    err << "error: the U_n routes disagree\n";
    return kRouteMismatch;
  }
  return kOk;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

int cmd_family(const std::string& name, long l, long d, long m, const GlobalOptions& g, std::ostream& out,
               std::ostream& err) {
  using namespace families;
  const FamilyParams params{parse_family(name), l, d, m};
  validate(params);
  const LatticeSimplex simplex = build_simplex(params);
  const DeltaVector delta = delta_vector(simplex, g.cap_box_points);

  Json report{{"command", "family"}, {"family", std::string(to_string(params.family))}};
  Json params_json = Json::object();
  switch (params.family) {
    case Family::OddCeiling:
    case Family::EvenCeiling:
      params_json = {{"l", l}, {"m", m}};
      break;
    case Family::UnimodalNotLc:
    case Family::AiNotLc:
      params_json = {{"d", d}, {"m", m}};
      break;
    default:
      break;
  }
  report["params"] = params_json;
  const auto M = modulus(params);
  report["M"] = M ? int_json(*M) : Json(nullptr);
  report["vertices"] = matrix_json(simplex.vertices());
  report = merge(report, delta_report(delta.values, simplex.normalized_volume()));

  bool agree = true;
  std::vector<std::string> disagreements;
  Json routes{{"enumeration", ints_json(delta.values)}};
  routes["closed_form"] = nullptr;
  if (params.family != Family::OddCeiling && params.family != Family::EvenCeiling) {
    const DeltaVector closed = closed_form_delta(params);
    routes["closed_form"] = ints_json(closed.values);
    if (!(closed == delta)) {
      agree = false;
      disagreements.push_back("closed form");
    }
  }
  routes["ceiling_histogram"] = nullptr;
  if (M) {
    const CeilingHistogram hist = ceiling_histogram(params);
    routes["ceiling_histogram"] = {{"delta", ints_json(hist.delta.values)},
                                   {"reading", std::string(to_string(hist.reading))},
                                   {"floor_reading_consistent", hist.floor_reading_consistent},
                                   {"note", hist.note}};
    if (!(hist.delta == delta)) {
      agree = false;
      disagreements.push_back("ceiling histogram");
    }
  }
  Json oracle_route{{"checked_m", Json::array()}, {"skipped_m", Json::array()}};
  for (long k = 1; k <= 2; ++k) {
    try {
      const Int brute = oracle::brute_count(simplex, Int(k), false, g.cap_oracle_box);
      oracle_route["checked_m"].push_back(k);
      if (brute != ehrhart_eval(delta, Int(k))) {
        agree = false;
        disagreements.push_back("oracle count at m = " + std::to_string(k));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoxCapExceeded || g.strict) throw;
      oracle_route["skipped_m"].push_back(k);
    }
  }
  routes["oracle"] = oracle_route;
  report["routes"] = routes;
  report["routes_agree"] = agree;

  const PredictedProperties predicted = predicted_properties(params);
  const auto& x = delta.values;
  const bool uni = exactseq::is_unimodal(x).holds;
  const bool lc = exactseq::is_log_concave(x).holds;
  const bool ai = exactseq::is_alternatingly_increasing(x).holds;
  bool holds = (!predicted.unimodal || *predicted.unimodal == uni) &&
               (!predicted.log_concave || *predicted.log_concave == lc) &&
               (!predicted.alternatingly_increasing || *predicted.alternatingly_increasing == ai);
  report["predicted"] = {{"label", predicted.label},
                         {"unimodal", optional_bool(predicted.unimodal)},
                         {"log_concave", optional_bool(predicted.log_concave)},
                         {"alternatingly_increasing", optional_bool(predicted.alternatingly_increasing)}};
  report["observed"] = {{"unimodal", uni}, {"log_concave", lc}, {"alternatingly_increasing", ai}};
  if (params.family == Family::OddCeiling || params.family == Family::EvenCeiling) {
    const CeilingFamilyBounds b = check_ceiling_family_bounds(params, delta);
    report["bounds"] = {{"delta_1_small", b.delta_1_small},  {"delta_l_large", b.delta_l_large},
                        {"delta_l1_small", b.delta_l1_small}, {"tail_max_large", b.tail_max_large},
                        {"interior_is_m", b.interior_is_m}};
    holds = holds && b.all();
  }
  if (params.family == Family::AiNotLc) {
    const std::size_t c = expected_lc_failure_index(params);
    const auto verdict = exactseq::is_log_concave(x);
    const bool named = verdict.witness == std::vector<std::size_t>{c};
    report["log_concavity_failure"] = {
        {"expected_index", c}, {"witness", verdict.witness}, {"failures", verdict.failures}, {"matches", named}};
    holds = holds && named;
  }
  report["prediction_holds"] = holds;
  emit(out, report);
  if (!agree) {
    for (const auto& what : disagreements) err << "error: enumeration disagrees with the " << what << '\n';
    return kFamilyDisagreement;
  }
  if (!holds) {
    err << "error: a predicted property fails\n";
    return kPredictionFailed;
  }
  return kOk;
}

const char* flag(bool b) { return b ? "true" : "false"; }

int cmd_sweep(const PolynomialInput& in, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  if (g.n_max_given && g.n_max < 1) throw Error(ErrorCode::InvalidInput, "--n-max must be >= 1");
  const ResolvedPolynomial input = resolve(in, g);
  const std::size_t s = series::delta_degree(input.h.coeffs);
  const long n_max = g.n_max_given ? g.n_max : static_cast<long>(theorem::thm_bound(s, input.h.d()).ai) + 3;
  const theorem::SweepReport rep = theorem::sweep(input.h, n_max);
  for (const auto& note : rep.notes) err << "note: " << note << '\n';
  if (g.format == "csv") {
    out << "n,strictly_log_concave,chain_a,chain_b,strictly_alternatingly_increasing,at_or_above_bound\n";
    for (const auto& r : rep.records)
      out << r.n << ',' << flag(r.strictly_log_concave) << ',' << flag(r.chain_a) << ',' << flag(r.chain_b) << ','
          << flag(r.strictly_alternatingly_increasing) << ',' << flag(r.at_or_above_bound) << '\n';
    return kOk;
  }
  Json report{{"command", "sweep"}, {"input", input.echo}, {"d", rep.d}, {"s", rep.s}, {"n_max", rep.n_max}};
  report["bound"] = {{"lc", rep.bound.lc}, {"ai", rep.bound.ai}};
  report["theorem_applies"] = rep.theorem_applies;
  report["hypotheses"] = {{"nonnegative", rep.hypotheses.nonnegative},
                          {"h0_is_one", rep.hypotheses.h0_is_one},
                          {"stanley_half", rep.hypotheses.stanley_half.holds},
                          {"hibi_half", rep.hypotheses.hibi_half.holds},
                          {"d_at_least_5", rep.hypotheses.dimension_ok}};
  report["min_n_lc"] = rep.min_n_lc ? Json(*rep.min_n_lc) : Json(nullptr);
  report["min_n_ai"] = rep.min_n_ai ? Json(*rep.min_n_ai) : Json(nullptr);
  Json rows = Json::array();
  for (const auto& r : rep.records)
    rows.push_back({{"n", r.n},
                    {"delta", ints_json(r.delta.coeffs)},
                    {"strictly_log_concave", r.strictly_log_concave},
                    {"chain_a", r.chain_a},
                    {"chain_b", r.chain_b},
                    {"strictly_alternatingly_increasing", r.strictly_alternatingly_increasing},
                    {"at_or_above_bound", r.at_or_above_bound}});
  report["records"] = rows;
  report["notes"] = rep.notes;
  emit(out, report);
  return kOk;
}

using Predicate = std::function<bool(const IntVector&)>;

std::vector<std::pair<std::string, Predicate>> parse_targets(const std::string& text) {
  static const std::map<std::string, Predicate> known{
      {"unimodal", [](const IntVector& x) { return exactseq::is_unimodal(x).holds; }},
      {"sunimodal", [](const IntVector& x) { return exactseq::is_unimodal(x, true).holds; }},
      {"lc", [](const IntVector& x) { return exactseq::is_log_concave(x).holds; }},
      {"slc", [](const IntVector& x) { return exactseq::is_log_concave(x, true).holds; }},
      {"ai", [](const IntVector& x) { return exactseq::is_alternatingly_increasing(x).holds; }},
      {"sai", [](const IntVector& x) { return exactseq::is_alternatingly_increasing(x, true).holds; }},
  };
  std::vector<std::pair<std::string, Predicate>> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const bool negate = token.front() == '!';
    const std::string key = negate ? token.substr(1) : token;
    auto it = known.find(key);
    if (it == known.end())
      throw Error(ErrorCode::InvalidInput, "unknown target '" + token + "' (use unimodal, sunimodal, lc, slc, ai, sai)");
    Predicate p = it->second;
    if (negate)
      out.emplace_back(token, [p](const IntVector& x) { return !p(x); });
    else
      out.emplace_back(token, p);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '&')
      flush();
    else
      token += ch;
  }
  flush();
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "empty --target");
  return out;
}

struct SearchOptions {
  long d = 5;
  long height_min = 1;
  long height_max = 12;
  std::string target = "!unimodal";
  bool idp_filter = false;
  long limit = 0;
};

// Scans v_d = (c_1, ..., c_{d-1}, H) with 0 <= c_1 <= ... <= c_{d-1} < H.
// Shears x_i -> x_i - k x_d and permutations of e_1..e_{d-1} are lattice
// automorphisms fixing the other vertices, so this covers every simplex
// (0, e_1, ..., e_{d-1}, v) up to equivalence.
int cmd_search(const SearchOptions& o, const GlobalOptions& g, std::ostream& out) {
  if (o.d < 1) throw Error(ErrorCode::InvalidInput, "--d must be >= 1");
  if (o.height_min < 1 || o.height_max < o.height_min)
    throw Error(ErrorCode::InvalidInput, "need 1 <= --height-min <= --height-max");
  const auto targets = parse_targets(o.target);
  const std::size_t d = static_cast<std::size_t>(o.d);
  std::uint64_t scanned = 0, hits = 0, rejected = 0;
  bool stop = false;
  for (long H = o.height_min; H <= o.height_max && !stop; ++H) {
    std::vector<long> c(d - 1, 0);
    for (;;) {
      IntMatrix vertices;
      vertices.emplace_back(d, 0);
      for (std::size_t i = 0; i + 1 < d; ++i) {
        IntVector e(d, 0);
        e[i] = 1;
        vertices.push_back(std::move(e));
      }
      IntVector last(d);
      for (std::size_t i = 0; i + 1 < d; ++i) last[i] = c[i];
      last[d - 1] = H;
      vertices.push_back(last);
      ++scanned;
      const LatticeSimplex simplex = LatticeSimplex::from_vertices(vertices);
      const DeltaVector delta = delta_vector(simplex, g.cap_box_points);
      const bool match = std::all_of(targets.begin(), targets.end(),
                                     [&](const auto& t) { return t.second(delta.values); });
      if (match) {
        const bool idp_possible = d < 2 || delta[1] * delta[1] >= delta[0] * delta[2];
        if (o.idp_filter && !idp_possible) {
          ++rejected;
        } else {
          ++hits;
          SimplexFile file{std::nullopt, vertices};
          if (g.format == "csv") {
            out << ehrhart::to_string(last) << ';' << ehrhart::to_string(delta.values) << '\n';
          } else {
            Json line{{"simplex", simplex_json(file)}, {"report", delta_report(delta.values, simplex.normalized_volume())}};
            out << line.dump() << '\n';
          }
          if (o.limit > 0 && static_cast<long>(hits) >= o.limit) {
            stop = true;
            break;
          }
        }
      }
      // Next nondecreasing tuple in [0, H).
      std::size_t pos = c.size();
      while (pos > 0 && c[pos - 1] == H - 1) --pos;
      if (pos == 0) break;
      ++c[pos - 1];
      for (std::size_t q = pos; q < c.size(); ++q) c[q] = c[pos - 1];
    }
  }
  if (rejected > 0) {
    const std::string note = std::to_string(rejected) +
                             " matching delta-vectors violate delta_1^2 >= delta_0 delta_2; such polytopes never have IDP";
    if (g.format == "csv")
      out << "# note: " << note << '\n';
    else
      out << Json{{"note", note}}.dump() << '\n';
  }
  if (g.format != "csv")
    out << Json{{"summary", {{"scanned", scanned}, {"hits", hits}, {"rejected_by_idp_filter", rejected}}}}.dump()
        << '\n';
  return kOk;
}

int cmd_oracle(const std::string& path, long m_max, const GlobalOptions& g, std::ostream& out) {
  const SimplexFile file = read_simplex_file(path);
  const LatticeSimplex simplex = LatticeSimplex::from_vertices(file.vertices);
  const std::size_t d = simplex.dim();
  const unsigned top = static_cast<unsigned>(std::max<long>(m_max, static_cast<long>(d)));
  const oracle::CountTable table = oracle::count_table(simplex, top, true, g.cap_oracle_box);
  const IntVector recovered = oracle::delta_from_counts(table.counts, d);

  Json report{{"command", "oracle"}, {"input", simplex_json(file)}};
  report["counts"] = ints_json(table.counts);
  report["interior_counts"] = ints_json(table.interior_counts);
  report["delta"] = ints_json(recovered);
  Json rows = Json::array();
  bool ok = true;
  for (unsigned m = 1; m <= top; ++m) {
    Int reciprocal = oracle::ehrhart_value(recovered, -Int(m));
    if (d % 2 == 1) reciprocal = -reciprocal;
    const bool row_ok = reciprocal == table.interior_counts[m];
    ok = ok && row_ok;
    rows.push_back({{"m", m}, {"interior", int_json(table.interior_counts[m])}, {"reciprocal", int_json(reciprocal)},
                    {"ok", row_ok}});
  }
  report["reciprocity"] = rows;
  try {
    const DeltaVector enumerated = delta_vector(simplex, g.cap_box_points);
    report["agrees_with_enumeration"] = enumerated.values == recovered;
    ok = ok && enumerated.values == recovered;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VolumeCapExceeded || g.strict) throw;
    report["agrees_with_enumeration"] = nullptr;
  }
  emit(out, report);
  return ok ? kOk : kMathDomain;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-vectors of lattice simplices, their dilations and shape properties", "ehrhart"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--cap-box-points", g.cap_box_points, "largest normalized volume to enumerate")
      ->envname("EHRHART_CAP_BOX_POINTS");
  app.add_option("--cap-oracle-box", g.cap_oracle_box, "largest bounding box the brute-force counter scans")
      ->envname("EHRHART_CAP_ORACLE_BOX");
  app.add_option("--n-max", g.n_max, "largest dilation factor swept")->envname("EHRHART_N_MAX");
  app.add_flag("--strict", g.strict, "fail instead of skipping cross-checks that exceed a cap")
      ->envname("EHRHART_STRICT");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("EHRHART_FORMAT");

  std::string file;
  auto* delta_cmd = app.add_subcommand("delta", "delta-vector and verdicts of a simplex file");
  delta_cmd->add_option("file", file, "simplex JSON file")->required();

  PolynomialInput poly;
  long n = 0;
  auto* dilate_cmd = app.add_subcommand("dilate", "apply U_n to a delta-vector");
  dilate_cmd->add_option("--delta", poly.delta_text, "comma-separated delta-vector");
  dilate_cmd->add_option("--file", poly.file, "simplex JSON file");
  dilate_cmd->add_option("--n", n, "dilation factor")->required();

  std::string family_name;
  long l = 0, d = 0, m = 1;
  auto* family_cmd = app.add_subcommand("family", "build a named family instance and cross-check it");
  family_cmd->add_option("name", family_name, "family name")
      ->required()
      ->check(CLI::IsMember({"odd33", "even33", "unimodal34", "ainotlc35", "sextic34-p3", "sextic34-p4", "remark36"}));
  family_cmd->add_option("--l", l, "l of the odd/even non-unimodal families");
  family_cmd->add_option("--d", d, "dimension of unimodal34 / ainotlc35");
  family_cmd->add_option("--m", m, "parameter m");

  auto* sweep_cmd = app.add_subcommand("sweep", "shape properties of U_n h for n = 1..n_max");
  sweep_cmd->add_option("--delta", poly.delta_text, "comma-separated h-vector");
  sweep_cmd->add_option("--file", poly.file, "simplex JSON file");

  SearchOptions so;
  auto* search_cmd = app.add_subcommand("search", "scan simplices (0, e_1..e_{d-1}, v) for a verdict combination");
  search_cmd->add_option("--d", so.d, "dimension")->required();
  search_cmd->add_option("--height-min", so.height_min, "smallest last coordinate of v");
  search_cmd->add_option("--height-max", so.height_max, "largest last coordinate of v");
  search_cmd->add_option("--target", so.target, "e.g. lc,!ai (tokens unimodal, sunimodal, lc, slc, ai, sai)");
  search_cmd->add_flag("--idp-filter", so.idp_filter, "drop hits failing delta_1^2 >= delta_0 delta_2");
  search_cmd->add_option("--limit", so.limit, "stop after this many hits (0: no limit)");

  long m_max = 3;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force counts, recovered delta-vector, reciprocity");
  oracle_cmd->add_option("file", file, "simplex JSON file")->required();
  oracle_cmd->add_option("--m-max", m_max, "largest dilation counted (at least d is used)");

  for (auto* sub : {delta_cmd, dilate_cmd, family_cmd, sweep_cmd, search_cmd, oracle_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  g.n_max_given = app.get_option("--n-max")->count() > 0 || std::getenv("EHRHART_N_MAX") != nullptr;

  try {
    if (*delta_cmd) return cmd_delta(file, g, out);
    if (*dilate_cmd) return cmd_dilate(poly, n, g, out, err);
    if (*family_cmd) return cmd_family(family_name, l, d, m, g, out, err);
    if (*sweep_cmd) return cmd_sweep(poly, g, out, err);
    if (*search_cmd) return cmd_search(so, g, out);
    if (*oracle_cmd) return cmd_oracle(file, m_max, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMathDomain;
  }
  return kUsage;
}

}  // namespace ehrhart::cli
