#include "cotor/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cotor/certify.hpp"
#include "cotor/groebner.hpp"
#include "cotor/order.hpp"
#include "cotor/steenrod.hpp"

namespace cotor::cli {

namespace {

using nlohmann::json;

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

struct Column {
  std::string header;
  std::size_t header_width;  // display width (header may hold UTF-8)
};

const std::vector<Column>& table_columns() {
  static const std::vector<Column> cols = {
      {"n", 1}, {"s", 1}, {"t", 1}, {"m", 1}, {"m'", 2},
      {"\xce\xb5", 1}, {"h'", 2}, {"\xe2\x84\x93", 1}, {"h", 1},
  };
  return cols;
}

std::vector<std::string> table_row(const SpinParams& p) {
  return {std::to_string(p.n),       std::to_string(p.s),     std::to_string(p.t),
          opt_text(p.m),             opt_text(p.m_prime),     opt_text(p.epsilon),
          std::to_string(p.h_prime), std::to_string(p.ell),   std::to_string(p.h)};
}

void require_valid_n(int n) {
  if (n < 9) throw std::invalid_argument("n must be at least 9, got " + std::to_string(n));
}

void require_range(const RunConfig& cfg) {
  require_valid_n(cfg.n_from);
  if (cfg.n_to < cfg.n_from) {
    throw std::invalid_argument("empty range " + std::to_string(cfg.n_from) + ".." +
                                std::to_string(cfg.n_to));
  }
}

std::size_t truncation_for(const RunConfig& cfg, int n) {
  if (cfg.truncate) return *cfg.truncate;
  if (const char* env = std::getenv(kTruncateEnv); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || value < 1) {
      throw std::invalid_argument(std::string(kTruncateEnv) + " must be a positive integer");
    }
    return value;
  }
  return default_truncation(n);
}

std::string series_text(const TruncatedSeries& s) {
  std::string out = "[";
  for (std::size_t d = 0; d <= s.max_degree(); ++d) {
    if (d > 0) out += ", ";
    out += s[d].get_str();
  }
  return out + "]";
}

std::string join_monomials(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ", ";
    out += format_monomial(m);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ", ";
    out += std::to_string(x);
  }
  return out;
}

// Runs body(n) for every n in [from, to] on `jobs` threads and returns the
// results ordered by n.
template <typename Result>
std::vector<Result> map_range(int from, int to, unsigned jobs,
                              const std::function<Result(int)>& body) {
  const auto count = static_cast<std::size_t>(to - from + 1);
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      results[i] = body(from + static_cast<int>(i));
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

// ------------------------------------------------------------ verification

struct NVerification {
  int n = 0;
  std::vector<NamedCheck> checks;
  std::string error;  // unexpected exception, counted as failure

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) {
             return c.status == CheckStatus::fail;
           })) +
           (error.empty() ? 0 : 1);
  }
};

NVerification verify_one(int n, const RunConfig& cfg) {
  NVerification out;
  out.n = n;
  try {
    auto identities = verify_parameter_identities(n);
    out.checks = std::move(identities.checks);
    auto params = std::make_shared<const SpinParams>(spin_params(n));

    if (params->d_empty()) {
      out.checks.push_back({"top v vanish in R", CheckStatus::not_applicable, "D empty"});
    } else {
      const auto v = verify_vanishing(params);
      std::string detail;
      for (const auto& f : v.failures) detail += (detail.empty() ? "" : "; ") + f;
      out.checks.push_back(
          {"top v vanish in R", v.ok() ? CheckStatus::pass : CheckStatus::fail, detail});
    }

    const auto cert = certify_regular_sequence(*params, cfg.corrupt_generator);
    if (!cert.applicable) {
      out.checks.push_back(
          {"relation leading monomials", CheckStatus::not_applicable, "D empty"});
      out.checks.push_back(
          {"relation leading monomials coprime", CheckStatus::not_applicable, "D empty"});
    } else {
      out.checks.push_back({"relation leading monomials",
                            cert.leading_match ? CheckStatus::pass : CheckStatus::fail,
                            "got [" + join_monomials(cert.leading) + "] expected [" +
                                join_monomials(cert.expected) + "]"});
      out.checks.push_back({"relation leading monomials coprime",
                            cert.coprime ? CheckStatus::pass : CheckStatus::fail, {}});
    }

    const std::size_t degree = truncation_for(cfg, n);
    if (degree > kSeriesDegreeLimit) {
      out.checks.push_back({"series verdict matches h' vs h", CheckStatus::not_applicable,
                            "needs degree " + std::to_string(degree)});
    } else if (degree < minimum_verdict_degree(n)) {
      out.checks.push_back({"series verdict matches h' vs h", CheckStatus::not_applicable,
                            "truncation " + std::to_string(degree) + " below " +
                                std::to_string(minimum_verdict_degree(n))});
    } else {
      try {
        const auto a = analyze_collapse(n, degree);
        out.checks.push_back({"series verdict matches h' vs h", CheckStatus::pass,
                              to_string(a.verdict)});
      } catch (const std::logic_error& e) {
        out.checks.push_back({"series verdict matches h' vs h", CheckStatus::fail, e.what()});
      }
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

json verification_json(const NVerification& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  json out = {{"n", v.n}, {"checks", checks}, {"failures", v.failures()}};
  if (!v.error.empty()) out["error"] = v.error;
  return out;
}

// ----------------------------------------------------------------- analyze

json generators_json(const std::vector<CotorElement>& v, const SpinParams& p) {
  json out = json::array();
  for (int k = 0; k < static_cast<int>(v.size()); ++k) {
    const auto& shown = k < p.s ? v[k] : project_to_R(v[k]);
    out.push_back({{"index", k},
                   {"in_R", k >= p.s},
                   {"polynomial", format_poly(shown.poly())}});
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ public

json params_json(const SpinParams& p) {
  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
  return {{"n", p.n},        {"s", p.s},   {"t", p.t},         {"m", opt(p.m)},
          {"m_prime", opt(p.m_prime)},     {"epsilon", opt(p.epsilon)},
          {"h_prime", p.h_prime},          {"ell", p.ell},     {"h", p.h},
          {"E", p.E},        {"D", p.D},   {"sigma", p.sigma}, {"tau", p.tau}};
}

json series_json(const TruncatedSeries& s) {
  const bool small = std::all_of(s.coeffs().begin(), s.coeffs().end(),
                                 [](const mpz_class& c) { return c.fits_slong_p(); });
  json out = json::array();
  for (const auto& c : s.coeffs()) {
    if (small) {
      out.push_back(static_cast<std::int64_t>(c.get_si()));
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

std::string format_table_text(int n_from, int n_to) {
  const auto& cols = table_columns();
  std::vector<std::vector<std::string>> rows;
  for (int n = n_from; n <= n_to; ++n) rows.push_back(table_row(spin_params(n)));
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].header_width;
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c > 0) out << ' ';
    out << std::string(width[c] - cols[c].header_width, ' ') << cols[c].header;
  }
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c > 0) out << ' ';
      out << std::setw(static_cast<int>(width[c])) << r[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string format_table_csv(int n_from, int n_to) {
  std::ostringstream out;
  const auto& cols = table_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c > 0 ? "," : "") << cols[c].header;
  out << '\n';
  for (int n = n_from; n <= n_to; ++n) {
    const auto row = table_row(spin_params(n));
    for (std::size_t c = 0; c < row.size(); ++c) out << (c > 0 ? "," : "") << row[c];
    out << '\n';
  }
  return out.str();
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_range(cfg);
  switch (cfg.format) {
    case Format::text:
      out << format_table_text(cfg.n_from, cfg.n_to);
      break;
    case Format::csv:
      out << format_table_csv(cfg.n_from, cfg.n_to);
      break;
    case Format::json: {
      json rows = json::array();
      for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
        json row = params_json(spin_params(n));
        for (const char* key : {"E", "D", "sigma", "tau"}) row.erase(key);
        rows.push_back(std::move(row));
      }
      out << rows.dump(2) << '\n';
      break;
    }
  }
  return kSuccess;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = cfg.n_from;
  require_valid_n(n);
  auto params = std::make_shared<const SpinParams>(spin_params(n));
  const SpinParams& p = *params;
  const auto gens = v_generators(params);
  const auto cert = certify_regular_sequence(p);

  const std::size_t degree = truncation_for(cfg, n);
  std::optional<CollapseAnalysis> collapse;
  std::string verdict_note;
  if (degree < minimum_verdict_degree(n)) {
    err << "error: truncation degree " << degree << " is below 2^{h'}+2 = "
        << minimum_verdict_degree(n) << "; refusing to decide collapse\n";
    return kInsufficientTruncation;
  }
  if (degree <= kSeriesDegreeLimit) {
    collapse = analyze_collapse(n, degree);
  } else {
    verdict_note = "series comparison skipped (degree " + std::to_string(degree) +
                   " exceeds limit); verdict from h' vs h";
  }
  const Verdict verdict =
      collapse ? collapse->verdict
               : (p.h_prime == p.h ? Verdict::collapses : Verdict::does_not_collapse);

  if (cfg.format == Format::json) {
    json j;
    j["params"] = params_json(p);
    j["generators"] = generators_json(gens, p);
    j["order"] = cert.order ? json(cert.order->describe()) : json(nullptr);
    j["leading_monomials"] = json::array();
    for (const auto& m : cert.leading) j["leading_monomials"].push_back(format_monomial(m));
    j["regular_sequence_certified"] = cert.applicable ? json(cert.ok()) : json(nullptr);
    j["truncation"] = degree;
    j["first_divergence"] =
        collapse && collapse->divergence ? json(*collapse->divergence) : json(nullptr);
    j["verdict"] = to_string(verdict);
    if (!verdict_note.empty()) j["note"] = verdict_note;
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  if (cfg.format == Format::csv) {
    out << "key,value\n";
    const json row = params_json(p);
    for (const auto& [k, v] : row.items()) {
      if (v.is_array()) continue;
      out << k << ',' << (v.is_null() ? "-" : v.dump()) << '\n';
    }
    for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
      const auto& shown = k < p.s ? gens[k] : project_to_R(gens[k]);
      out << "v_" << k << ",\"" << format_poly(shown.poly()) << "\"\n";
    }
    out << "verdict," << to_string(verdict) << '\n';
    return kSuccess;
  }

  out << "n = " << n << '\n';
  out << "s = " << p.s << ", t = " << p.t << ", m = " << opt_text(p.m)
      << ", m' = " << opt_text(p.m_prime) << ", epsilon = " << opt_text(p.epsilon)
      << ", h' = " << p.h_prime << ", l = " << p.ell << ", h = " << p.h << '\n';
  out << "E = {" << join_ints(p.E) << "}\n";
  out << "relation generators (v_k for k >= s shown in R):\n";
  for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
    const auto& shown = k < p.s ? gens[k] : project_to_R(gens[k]);
    out << "  v_" << k << " = " << format_poly(shown.poly()) << '\n';
  }
  if (cert.applicable) {
    out << "order: " << cert.order->describe() << '\n';
    out << "leading monomials: " << join_monomials(cert.leading) << '\n';
    out << "regular sequence: "
        << (cert.ok() ? "certified (pairwise coprime leading monomials)" : "NOT certified")
        << '\n';
  } else {
    out << "order: none needed (D empty, no relations in R)\n";
  }
  out << "verdict: " << to_string(verdict);
  if (collapse) {
    if (collapse->divergence) {
      out << " (series first differ in degree " << *collapse->divergence << ")";
    } else {
      out << " (series agree through degree " << degree << ")";
    }
  } else {
    out << " (" << verdict_note << ")";
  }
  out << '\n';
  return kSuccess;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = cfg.n_from;
  require_valid_n(n);
  const std::size_t degree = truncation_for(cfg, n);
  const auto kind = cfg.series_kind;

  if (kind == SeriesKind::diff) {
    const auto cotor = poincare_cotor(n, degree);
    const auto quillen = poincare_quillen(n, degree);
    const auto d = first_divergence(cotor, quillen);
    const bool conclusive = d.has_value() || degree >= minimum_verdict_degree(n);
    if (cfg.format == Format::json) {
      out << json{{"n", n}, {"truncation", degree},
                  {"first_divergence", d ? json(*d) : json(nullptr)},
                  {"conclusive", conclusive}}.dump(2)
          << '\n';
    } else if (cfg.format == Format::csv) {
      out << "n,truncation,first_divergence\n"
          << n << ',' << degree << ',' << (d ? std::to_string(*d) : "equal") << '\n';
    } else {
      out << (d ? std::to_string(*d) : "equal") << '\n';
    }
    if (!conclusive) {
      err << "note: equal through degree " << degree << " only; a collapse claim needs degree >= "
          << minimum_verdict_degree(n) << '\n';
      return kInsufficientTruncation;
    }
    return kSuccess;
  }

  std::vector<std::pair<std::string, TruncatedSeries>> series;
  if (kind == SeriesKind::cotor || kind == SeriesKind::both) {
    series.emplace_back("cotor", poincare_cotor(n, degree));
  }
  if (kind == SeriesKind::quillen || kind == SeriesKind::both) {
    series.emplace_back("quillen", poincare_quillen(n, degree));
  }
  switch (cfg.format) {
    case Format::text:
      for (const auto& [name, s] : series) out << name << ": " << series_text(s) << '\n';
      break;
    case Format::json: {
      json j = {{"n", n}, {"truncation", degree}};
      for (const auto& [name, s] : series) j[name] = series_json(s);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "degree";
      for (const auto& [name, s] : series) out << ',' << name;
      out << '\n';
      for (std::size_t d = 0; d <= degree; ++d) {
        out << d;
        for (const auto& [name, s] : series) out << ',' << s[d].get_str();
        out << '\n';
      }
      break;
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_range(cfg);
  const auto results = map_range<NVerification>(
      cfg.n_from, cfg.n_to, cfg.jobs, [&cfg](int n) { return verify_one(n, cfg); });
  std::size_t failures = 0;
  for (const auto& r : results) failures += r.failures();

  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(verification_json(r));
    out << json{{"from", cfg.n_from}, {"to", cfg.n_to}, {"failures", failures}, {"results", arr}}
               .dump(2)
        << '\n';
  } else if (cfg.format == Format::csv) {
    out << "n,check,status,detail\n";
    for (const auto& r : results) {
      for (const auto& c : r.checks) {
        out << r.n << ",\"" << c.name << "\"," << to_string(c.status) << ",\"" << c.detail
            << "\"\n";
      }
      if (!r.error.empty()) out << r.n << ",error,fail,\"" << r.error << "\"\n";
    }
  } else {
    for (const auto& r : results) {
      std::size_t pass = 0;
      std::size_t na = 0;
      for (const auto& c : r.checks) {
        pass += c.status == CheckStatus::pass;
        na += c.status == CheckStatus::not_applicable;
      }
      out << "n=" << r.n << ": " << (r.failures() == 0 ? "ok" : "FAILED") << " (" << pass
          << " pass, " << na << " n/a, " << r.failures() << " fail)\n";
      for (const auto& c : r.checks) {
        if (c.status == CheckStatus::fail || cfg.verbosity > 0) {
          out << "    " << std::left << std::setw(4) << to_string(c.status) << std::right
              << "  " << c.name;
          if (!c.detail.empty()) out << ": " << c.detail;
          out << '\n';
        }
      }
      if (!r.error.empty()) out << "    error: " << r.error << '\n';
    }
    out << "verified n=" << cfg.n_from << ".." << cfg.n_to << ": "
        << (failures == 0 ? "all checks passed" : std::to_string(failures) + " failure(s)")
        << '\n';
  }
  return failures == 0 ? kSuccess : kCheckFailed;
}

int cmd_groebner(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = cfg.n_from;
  require_valid_n(n);
  const SpinParams p = spin_params(n);
  const auto cert = certify_regular_sequence(p);
  if (!cert.applicable) {
    err << "n=" << n << " has D empty: R carries no relations\n";
    return kUsageError;
  }
  const BasisSet basis(cert.relations, *cert.order);
  const bool groebner = is_groebner(basis);
  const bool coprime = coprime_pairs_criterion(basis);

  std::optional<std::size_t> mismatch;
  bool oracle_ran = false;
  if (cfg.oracle_degree) {
    oracle_ran = true;
    std::vector<GradedVar> vars;
    for (int k : p.E) vars.push_back({static_cast<VarIndex>(k), static_cast<std::uint64_t>(k)});
    auto counted = standard_monomial_series(basis, vars, *cfg.oracle_degree);
    counted.div_one_minus(std::uint64_t{1} << p.h_prime);
    mismatch = first_divergence(counted, poincare_cotor(n, *cfg.oracle_degree));
  }

  if (cfg.format == Format::json) {
    json rel = json::array();
    for (std::size_t i = 0; i < cert.relations.size(); ++i) {
      rel.push_back({{"index", p.s + static_cast<int>(i)},
                     {"polynomial", format_poly(cert.relations[i])},
                     {"leading", format_monomial(cert.leading[i])}});
    }
    json j = {{"n", n},
              {"order", cert.order->describe()},
              {"relations", rel},
              {"coprime_leading_monomials", coprime},
              {"buchberger_criterion", groebner}};
    if (oracle_ran) {
      j["oracle_degree"] = *cfg.oracle_degree;
      j["oracle_matches_closed_form"] = !mismatch.has_value();
    }
    out << j.dump(2) << '\n';
  } else {
    out << "order: " << cert.order->describe() << '\n';
    for (std::size_t i = 0; i < cert.relations.size(); ++i) {
      out << "v_" << p.s + static_cast<int>(i) << " = " << format_poly(cert.relations[i])
          << "    [lm " << format_monomial(cert.leading[i]) << "]\n";
    }
    out << "coprime leading monomials: " << (coprime ? "yes" : "no") << '\n';
    out << "Buchberger criterion: " << (groebner ? "Groebner basis" : "not a Groebner basis")
        << '\n';
    if (oracle_ran) {
      out << "standard monomials vs closed form through degree " << *cfg.oracle_degree << ": "
          << (mismatch ? "differ at degree " + std::to_string(*mismatch) : "equal") << '\n';
    }
  }
  const bool ok = groebner && coprime && (!mismatch.has_value());
  return ok ? kSuccess : kCheckFailed;
}

namespace {

// Each subcommand binds its own storage; CLI11 resets bound flags of
// subcommands that were not selected.
struct CommandArgs {
  RunConfig cfg;
  std::string format = "text";
  std::size_t truncate = 0;
  std::size_t positional_degree = 0;
  std::string which = "both";
  std::size_t oracle = 0;

  RunConfig finish() const {
    RunConfig out = cfg;
    out.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    if (truncate > 0) out.truncate = truncate;
    if (positional_degree > 0) out.truncate = positional_degree;
    if (oracle > 0) out.oracle_degree = oracle;
    out.series_kind = which == "cotor"     ? SeriesKind::cotor
                      : which == "quillen" ? SeriesKind::quillen
                      : which == "diff"    ? SeriesKind::diff
                                           : SeriesKind::both;
    if (out.jobs == 0) out.jobs = 1;
    return out;
  }
};

void add_common(CLI::App* sub, CommandArgs& a) {
  sub->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--truncate", a.truncate, "Truncation degree D")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", a.cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("-v,--verbose", a.cfg.verbosity, "More detail");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cotorsion products of H*(Spin(n); F2) and Rothenberg-Steenrod collapse",
               "cotor-spin"};
  app.require_subcommand(1);

  std::array<CommandArgs, 5> slots;
  for (auto& s : slots) s.cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto& an = slots[0];
  auto& tb = slots[1];
  auto& se = slots[2];
  auto& ve = slots[3];
  auto& gr = slots[4];
  an.cfg.command = Command::analyze;
  tb.cfg.command = Command::table;
  se.cfg.command = Command::series;
  ve.cfg.command = Command::verify;
  gr.cfg.command = Command::groebner;

  auto* analyze = app.add_subcommand("analyze", "Full report for one n");
  analyze->add_option("n", an.cfg.n_from, "n >= 9")->required();
  add_common(analyze, an);

  auto* table = app.add_subcommand("table", "Rows n s t m m' eps h' l h");
  table->add_option("from", tb.cfg.n_from)->required();
  table->add_option("to", tb.cfg.n_to)->required();
  add_common(table, tb);

  auto* series = app.add_subcommand("series", "Poincare series coefficients");
  series->add_option("n", se.cfg.n_from)->required();
  series->add_option("D", se.positional_degree, "Truncation degree")->check(CLI::PositiveNumber);
  series->add_option("which,--which", se.which, "cotor, quillen, both or diff")
      ->check(CLI::IsMember({"cotor", "quillen", "both", "diff"}));
  add_common(series, se);

  auto* verify = app.add_subcommand("verify", "Run every check over a range of n");
  verify->add_option("from", ve.cfg.n_from)->required();
  verify->add_option("to", ve.cfg.n_to)->required();
  verify->add_flag("--corrupt-generator", ve.cfg.corrupt_generator)->group("");
  add_common(verify, ve);

  auto* groebner = app.add_subcommand("groebner", "Groebner data for the relations in R");
  groebner->add_option("n", gr.cfg.n_from)->required();
  groebner->add_option("--oracle", gr.oracle,
                       "Compare standard-monomial counts with the closed form through degree D")
      ->check(CLI::PositiveNumber);
  add_common(groebner, gr);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(an.finish(), out, err);
    if (table->parsed()) return cmd_table(tb.finish(), out, err);
    if (series->parsed()) return cmd_series(se.finish(), out, err);
    if (verify->parsed()) return cmd_verify(ve.finish(), out, err);
    if (groebner->parsed()) return cmd_groebner(gr.finish(), out, err);
  } catch (const InsufficientTruncation& e) {
    err << "error: " << e.what() << '\n';
    return kInsufficientTruncation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cotor::cli
