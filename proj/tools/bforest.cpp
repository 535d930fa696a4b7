// Command-line front end: batch tree counts, cross-checks and reports for
// bicirculant graphs.
//
//   bforest count --spec '{"n":6,"alphas":[1],"betas":[1],"gammas":[0]}' --n-start 3 --n-end 12

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bforest/bforest.hpp"

using nlohmann::json;
using namespace bforest;

namespace {

// Oracle determinants are skipped in `report` past this group order.
constexpr long kReportOracleLimit = 64;

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::string spec_source;
  std::optional<long> n_start, n_end;
  long step = 1;
  unsigned precision = 64;
  Format format = Format::Json;
  unsigned jobs = 1;
  int max_order = kDefaultMaxOrder;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string fixed(long double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

json load_spec_json(const std::string& source) {
  std::string text = source;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || source[first] != '{') {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open spec file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidArgument, std::string("spec is not valid JSON: ") + e.what());
  }
}

std::vector<long> n_values(const RunConfig& cfg, const ConnectionSpec& spec) {
  const long lo = cfg.n_start.value_or(cfg.n_end.value_or(spec.n()));
  const long hi = cfg.n_end.value_or(lo);
  if (cfg.step < 1) throw UsageError("--step must be positive");
  if (hi < lo) throw UsageError("empty n-range: n-start > n-end");
  std::vector<long> out;
  for (long n = lo; n <= hi; n += cfg.step) out.push_back(n);
  return out;
}

/// Runs fn(i) for i in [0, count) on up to `jobs` threads; results land in
/// index order and the error of the lowest failing index is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<R> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::vector<ConnectionSpec> specs_over_range(const RunConfig& cfg, const ConnectionSpec& spec) {
  std::vector<ConnectionSpec> out;
  for (long n : n_values(cfg, spec)) out.push_back(with_order(spec, n));
  return out;
}

json eta_json(const SymmetricLaurentPoly& p) {
  json out = json::array();
  for (const auto& v : p.eta()) out.push_back(big(v));
  return out;
}

// ---- per-command sections -------------------------------------------------

json validate_section(const ConnectionSpec& spec) {
  const Connectivity c = check_connectivity(spec);
  return json{{"spec", to_json(spec)},
              {"family", family_index(classify_family(spec))},
              {"gcd_flags", {{"a", c.flags.a}, {"b", c.flags.b}, {"c", c.flags.c}}},
              {"connected", c.connected}};
}

json spectral_section(const ConnectionSpec& spec) {
  const SpectralSystem sys = spectral_system(spec);
  const DegeneracyReport d = degeneracy_report(sys);
  return json{{"A", eta_json(sys.A)},
              {"B", eta_json(sys.B)},
              {"P1", eta_json(sys.P1)},
              {"Pj", eta_json(sys.Pj)},
              {"P1_text", sys.P1.to_string()},
              {"Pj_text", sys.Pj.to_string()},
              {"k", sys.k},
              {"kj", sys.kj},
              {"a_k", big(sys.a_k)},
              {"lead_j", big(sys.lead_j)},
              {"q", big(sys.q)},
              {"degeneracy",
               {{"P1_at_1", big(d.p1_at_1)}, {"dP1_at_1", big(d.dp1_at_1)}, {"ddP1_at_1", big(d.ddp1_at_1)}}}};
}

json count_row(const ConnectionSpec& at, unsigned precision, bool with_float) {
  const TreeCount tc = tree_count_closed(at);
  json parts = json::array();
  for (const auto& p : tc.parts) parts.push_back(p.get_str());
  json row{{"n", at.n()}, {"tau", tc.tau.get_str()}, {"method", to_string(tc.method)}, {"parts", parts}};
  if (with_float) {
    const FloatCount fc = tree_count_chebyshev(at, precision);
    row["chebyshev"] = {{"value", fc.value},
                        {"relative_error_bound", static_cast<double>(fc.relative_error_bound)},
                        {"digits", fc.digits},
                        {"relative_deviation", static_cast<double>(relative_deviation(fc, tc.tau))}};
  }
  return row;
}

json oracle_row(const ConnectionSpec& at) {
  return json{{"n", at.n()}, {"tau", tree_count_oracle(realize(at)).get_str()}, {"method", "oracle"}};
}

json compare_row(const ConnectionSpec& at) {
  const Integer closed = tree_count_closed(at).tau;
  const Integer oracle = tree_count_oracle(realize(at));
  return json{{"n", at.n()}, {"closed", closed.get_str()}, {"oracle", oracle.get_str()}, {"equal", closed == oracle}};
}

json profile_json(const ArithmeticProfile& p) {
  auto opt = [](const std::optional<Integer>& v) { return v ? big(*v) : json(nullptr); };
  return json{{"k1", p.k1}, {"k2", p.k2}, {"m1", p.m1},           {"m2", p.m2},
              {"h1", p.h1}, {"h2", p.h2}, {"q_odd", opt(p.q_odd)}, {"q_even", opt(p.q_even)}};
}

json arithmetic_row(const ConnectionSpec& at) {
  const TreeCount tc = tree_count_closed(at);
  const SquareWitness w = verify_square_structure(at, tc);
  return json{{"n", at.n()},
              {"tau", tc.tau.get_str()},
              {"branch", to_string(w.branch)},
              {"cofactor", w.cofactor.get_str()},
              {"witness", w.witness.get_str()},
              {"parity_applies", w.parity_applies},
              {"parity_holds", w.parity_holds}};
}

json mahler_json(const MahlerEstimate& m) {
  return json{{"method", to_string(m.method)},
              {"value", fixed(m.value, 18)},
              {"error_bound", static_cast<double>(m.error_bound)},
              {"polynomial", m.polynomial}};
}

json convergence_json(const ConvergenceRow& r) {
  return json{{"n", r.n},
              {"tau", r.tau.get_str()},
              {"prediction", r.prediction.value},
              {"ratio", fixed(r.ratio, 18)},
              {"deviation", static_cast<double>(r.deviation)}};
}

json asymptotics_section(const RunConfig& cfg, const ConnectionSpec& spec, const std::vector<ConnectionSpec>& range) {
  const GrowthLaw law = growth_law(spec, cfg.precision);
  const SpectralSystem sys = spectral_system(spec);
  const SymmetricLaurentPoly poly = sys.family == Family::One ? sys.P1 : sys.Pj * sys.P1;
  const MahlerEstimate quad = mahler_quadrature(poly);
  json factors = json::array();
  factors.push_back(mahler_json(mahler_root_product(sys.P1, cfg.precision)));
  if (sys.family != Family::One) factors.push_back(mahler_json(mahler_root_product(sys.Pj, cfg.precision)));

  const auto rows = parallel_map<ConvergenceRow>(range.size(), cfg.jobs,
                                                 [&](std::size_t i) { return convergence_row(law, range[i]); });
  json table = json::array();
  for (const auto& r : rows) table.push_back(convergence_json(r));
  return json{{"base", mahler_json(law.base)},
              {"base_digits", law.base.digits_value},
              {"base_quadrature", mahler_json(quad)},
              {"factors", factors},
              {"exponent", sys.family == Family::One ? "n" : "n/2"},
              {"prediction", sys.family == Family::One ? "(n s / q) M(P1)^n" : "(n s / (4 q)) M(Pj P1)^(n/2)"},
              {"rows", table},
              {"deviation_decreasing", deviation_decreasing(rows)}};
}

json genfun_section(const RunConfig& cfg, const ConnectionSpec& spec) {
  const SpectralSystem sys = spectral_system(spec);
  const std::size_t count = 2 * static_cast<std::size_t>(cfg.max_order) + 2;
  TauSequence seq;
  seq.family = sys.family;
  seq.values = parallel_map<Integer>(count, cfg.jobs,
                                     [&](std::size_t i) { return closed_form_tau(sys, seq.parameter(i)).tau; });
  const Recurrence rec = find_recurrence(seq, cfg.max_order);
  const RationalGF gf = genfun(seq, rec);
  const Integer scale = symmetry_scale(sys);
  json recurrence = json::array();
  for (const auto& c : rec.connection) recurrence.push_back(big(c));
  json head = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(8, seq.values.size()); ++i) head.push_back(seq.values[i].get_str());
  return json{{"terms_used", count},
              {"index", sys.family == Family::One ? "a(i) = tau at n = i" : "a(i) = tau at n = 2i"},
              {"first_terms", head},
              {"recurrence", recurrence},
              {"gf", to_json(gf)},
              {"scale", big(scale)},
              {"symmetric", verify_symmetry(gf, scale)},
              {"value_at_0.1", fixed(evaluate(gf, 0.1L), 15)}};
}

// ---- output ----------------------------------------------------------------

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit_table(const RunConfig& cfg, const json& doc, const json& rows) {
  if (cfg.format == Format::Json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (rows.empty()) return;
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items())
    if (!v.is_structured()) cols.push_back(k);
  const std::string sep = cfg.format == Format::Csv ? "," : "\t";
  for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (i ? sep : "") << cols[i];
  std::cout << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (i ? sep : "") << csv_cell(r.at(cols[i]));
    std::cout << "\n";
  }
}

void emit_document(const RunConfig& cfg, const json& doc) {
  if (cfg.format == Format::Csv) throw UsageError("csv output is only available for tabular commands");
  if (cfg.format == Format::Json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : doc.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int run(const RunConfig& cfg) {
  const ConnectionSpec spec = spec_from_json(load_spec_json(cfg.spec_source), cfg.command != "validate");
  const auto& cmd = cfg.command;

  if (cmd == "validate") {
    emit_document(cfg, validate_section(spec));
    return 0;
  }
  const auto range = specs_over_range(cfg, spec);
  auto rows_of = [&](const std::function<json(const ConnectionSpec&)>& fn) {
    const auto rows = parallel_map<json>(range.size(), cfg.jobs, [&](std::size_t i) { return fn(range[i]); });
    return json(rows);
  };

  if (cmd == "count") {
    const json rows = rows_of([&](const ConnectionSpec& at) { return count_row(at, cfg.precision, false); });
    emit_table(cfg, json{{"command", "count"}, {"family", family_index(classify_family(spec))}, {"rows", rows}}, rows);
  } else if (cmd == "oracle") {
    const json rows = rows_of(oracle_row);
    emit_table(cfg, json{{"command", "oracle"}, {"rows", rows}}, rows);
  } else if (cmd == "compare") {
    const json rows = rows_of(compare_row);
    bool all = true;
    for (const auto& r : rows) all = all && r.at("equal").get<bool>();
    emit_table(cfg, json{{"command", "compare"}, {"all_equal", all}, {"rows", rows}}, rows);
    if (cfg.format != Format::Json) std::cerr << (all ? "all equal" : "MISMATCH") << "\n";
  } else if (cmd == "arithmetic") {
    const json rows = rows_of(arithmetic_row);
    emit_table(cfg, json{{"command", "arithmetic"}, {"profile", profile_json(arithmetic_profile(spec))}, {"rows", rows}},
               rows);
  } else if (cmd == "asymptotics") {
    json sec = asymptotics_section(cfg, spec, range);
    sec["command"] = "asymptotics";
    emit_table(cfg, sec, sec.at("rows"));
  } else if (cmd == "genfun") {
    json sec = genfun_section(cfg, spec);
    sec["command"] = "genfun";
    emit_document(cfg, sec);
  } else if (cmd == "report") {
    if (cfg.format != Format::Json) throw UsageError("report is emitted as JSON only");
    json counts = rows_of([&](const ConnectionSpec& at) {
      json row = count_row(at, cfg.precision, true);
      if (at.n() <= kReportOracleLimit) {
        const Integer oracle = tree_count_oracle(realize(at));
        row["oracle"] = oracle.get_str();
        row["equal"] = oracle.get_str() == row.at("tau").get<std::string>();
      } else {
        row["oracle"] = nullptr;
        row["equal"] = nullptr;
      }
      return row;
    });
    const json arith = rows_of(arithmetic_row);
    json doc{{"command", "report"},
             {"model", validate_section(spec)},
             {"spectral", spectral_section(spec)},
             {"counts", counts},
             {"arithmetic", {{"profile", profile_json(arithmetic_profile(spec))}, {"rows", arith}}},
             {"asymptotics", asymptotics_section(cfg, spec, range)},
             {"generating_function", genfun_section(cfg, spec)},
             {"settings", {{"precision", cfg.precision}, {"max_order", cfg.max_order}}}};
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

unsigned default_precision() {
  if (const char* env = std::getenv("BFOREST_PRECISION")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("BFOREST_PRECISION is not a number: ") + env);
    }
  }
  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Spanning-tree counts of bicirculant graphs"};
  app.require_subcommand(1);

  std::string format = "json";
  long n_start = 0, n_end = 0;
  unsigned precision = 0;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "check a spec and report family and connectivity"},
      {"count", "closed-form tau over an n-range"},
      {"oracle", "Matrix-Tree determinant tau over an n-range"},
      {"compare", "closed form against the oracle"},
      {"arithmetic", "square-structure witnesses"},
      {"asymptotics", "Mahler measures and the convergence table"},
      {"genfun", "recurrence, rational generating function and symmetry"},
      {"report", "everything as one JSON document"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--spec", cfg.spec_source, "spec JSON file or inline JSON object")->required();
    sub->add_option("--n-start", n_start, "first group order");
    sub->add_option("--n-end", n_end, "last group order");
    sub->add_option("--step", cfg.step, "stride through the n-range")->capture_default_str();
    sub->add_option("--precision", precision, "decimal digits for numeric paths (32..256)");
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "worker threads over n-values")->check(CLI::Range(1u, 1024u));
    sub->add_option("--max-order", cfg.max_order, "largest recurrence order searched")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (auto* sub : subs) {
      if (!sub->parsed()) continue;
      cfg.command = sub->get_name();
      if (sub->count("--n-start")) cfg.n_start = n_start;
      if (sub->count("--n-end")) cfg.n_end = n_end;
      cfg.precision = sub->count("--precision") ? precision : default_precision();
    }
    precision_tier(cfg.precision);
    cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_internal(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
