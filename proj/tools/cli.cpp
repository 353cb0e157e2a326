#include "cli.hpp"

#include "bergman/errors.hpp"
#include "bergman/kernel_forms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace bergman::cli {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Input parsing

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed complex number '" + std::string(whole) + "'");
  }
  if (used != str.size()) throw ParseError("malformed complex number '" + std::string(whole) + "'");
  return v;
}

} // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s, text)};
  return {parse_real(std::string_view(s).substr(0, split), text),
          parse_real(std::string_view(s).substr(split), text)};
}

// ---------------------------------------------------------------------------
// Volume cache

VolumeCache::VolumeCache(std::string path) : path_(std::move(path)) {
  std::ifstream f(path_);
  if (!f) return;
  ojson doc;
  try {
    doc = ojson::parse(f);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("volume cache '" + path_ + "' is not valid JSON: " + ex.what());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) return;
  for (const auto& e : doc["entries"]) {
    entries_.push_back({e.value("domain", std::string{}), e.value("samples", std::uint64_t{0}),
                        e.value("seed", std::uint64_t{0}), e.value("value", 0.0), e.value("std_error", 0.0)});
  }
}

std::optional<VolumeCache::Entry> VolumeCache::lookup(const DomainSpec& spec, std::uint64_t samples,
                                                      std::uint64_t seed) const {
  const std::string key = spec.str();
  const Entry* best = nullptr;
  for (const auto& e : entries_) {
    if (e.domain != key) continue;
    if (e.samples == samples && e.seed == seed) return e;
    if (!best || e.samples > best->samples) best = &e;
  }
  if (best) return *best;
  return std::nullopt;
}

void VolumeCache::store(const DomainSpec& spec, const McEstimate& est) {
  Entry entry{spec.str(), est.samples, est.seed, est.value, est.std_error};
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) {
    return e.domain == entry.domain && e.samples == entry.samples && e.seed == entry.seed;
  });
  if (it != entries_.end()) *it = entry;
  else entries_.push_back(entry);
}

void VolumeCache::save() const {
  ojson doc;
  doc["entries"] = ojson::array();
  for (const auto& e : entries_) {
    ojson o;
    o["domain"] = e.domain;
    o["samples"] = e.samples;
    o["seed"] = e.seed;
    o["value"] = e.value;
    o["std_error"] = e.std_error;
    doc["entries"].push_back(std::move(o));
  }
  std::ofstream f(path_);
  if (!f) throw InvalidParams("cannot write volume cache '" + path_ + "'");
  f << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Config {
  std::string domain;
  std::string k = "1";
  int p = 1;
  int q = 1;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1'000'000;
  int truncate = 200;
  std::optional<double> tol;
  std::optional<std::string> vol;
  std::string format = "text";
  int workers = 0;
  bool serial = false;
  std::string cache = "bergman-volumes.json";

  std::string family;
  std::string suite;
  std::string input = "-";
  int points = 10;
  std::vector<std::string> s_values{"1/2", "1", "2"};
  std::vector<std::string> w, w1, w2, z, center;
  std::vector<int> index, exponents;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

McRun mc_run(const Config& c) {
  McRun run;
  run.samples = c.samples;
  run.seed = c.seed;
  run.workers = c.workers;
  run.policy = c.serial ? ExecPolicy::serial : ExecPolicy::parallel;
  return run;
}

std::vector<cplx> parse_complex_list(const std::vector<std::string>& items) {
  std::vector<cplx> out;
  for (const auto& s : items) out.push_back(parse_complex(s));
  return out;
}

std::optional<double> parse_vol(const Config& c) {
  if (!c.vol) return std::nullopt;
  const double v = Rational::parse(*c.vol).to_double();
  if (!(v > 0.0)) throw InvalidParams("--vol must be positive");
  return v;
}

double resolve_volume(const Config& c, const DomainSpec& spec) {
  if (auto v = parse_vol(c)) return *v;
  if (auto v = exact_volume(spec)) return *v;
  VolumeCache cache(c.cache);
  if (auto e = cache.lookup(spec, c.samples, c.seed)) return e->value;
  throw VolumeUnknown("no volume known for " + spec.str() + "; pass --vol or run 'verify volume --domain " +
                      spec.str() + "' first");
}

int cmd_describe(const Config& c, std::ostream& out) {
  const DomainSpec spec = DomainSpec::parse(c.domain);
  const JordanInvariants inv = invariants(spec);
  if (c.format == "json") {
    ojson o;
    o["domain"] = spec.str();
    o["r"] = inv.r;
    o["a"] = inv.a;
    o["b"] = inv.b;
    o["g"] = inv.g;
    o["n"] = inv.n;
    o["dimension"] = inv.n;
    o["tube_type"] = inv.tube_type();
    o["generic_norm"] = norm_formula_name(spec);
    o["membership"] = membership_rule_name(spec);
    out << o.dump() << "\n";
    return kOk;
  }
  if (c.format != "text") throw ParseError("describe supports --format text or json");
  out << "domain        " << spec.str() << "\n"
      << "invariants    r=" << inv.r << " a=" << inv.a << " b=" << inv.b << " g=" << inv.g << " n=" << inv.n << "\n"
      << "dimension     " << inv.n << "\n"
      << "generic norm  " << norm_formula_name(spec) << "\n"
      << "membership    " << membership_rule_name(spec) << "\n"
      << "tube type     " << (inv.tube_type() ? "yes" : "no (not of tube type)") << "\n";
  return kOk;
}

std::string latex_form(const PochhammerForm& f) {
  std::string s;
  if (f.constant != Rational(1)) s += f.constant.str();
  for (const auto& fac : f.factors) {
    s += "(s";
    if (fac.shift.sign() > 0) s += "+";
    if (fac.shift.is_integer()) s += fac.shift.is_zero() ? "" : fac.shift.str();
    else s += (fac.shift.sign() < 0 ? "-" : "") + std::string("\\tfrac{") + (fac.shift.sign() < 0 ? (-fac.shift).num_str() : fac.shift.num_str()) + "}{" + fac.shift.den_str() + "}";
    s += ")";
    if (fac.length != 1) s += "_{" + std::to_string(fac.length) + "}";
  }
  return s.empty() ? "1" : s;
}

int cmd_chi(const Config& c, std::ostream& out) {
  const DomainSpec spec = DomainSpec::parse(c.domain);
  const PochhammerForm table = chi_table_form(spec);
  const RatPoly expanded = chi_poly(invariants(spec)).expand();
  const EmitFormat fmt = parse_emit_format(c.format);
  if (fmt == EmitFormat::json) {
    ojson o;
    o["domain"] = spec.str();
    o["factors"] = ojson::parse(table.json());
    o["degree"] = expanded.degree();
    o["coefficients"] = ojson::array();
    for (int i = 0; i <= expanded.degree(); ++i) o["coefficients"].push_back(expanded.coeff(i).str());
    out << o.dump() << "\n";
  } else if (fmt == EmitFormat::latex) {
    out << "\\chi(s) = " << latex_form(table) << "\n";
  } else {
    std::string factors = table.str();
    for (std::size_t pos; (pos = factors.find(" * ")) != std::string::npos;) factors.replace(pos, 3, " ");
    out << "chi(s) = " << factors << "\n"
        << "degree   " << expanded.degree() << "\n"
        << "expanded " << expanded.str("s") << "\n";
  }
  return kOk;
}

int cmd_kernel(const Config& c, std::ostream& out) {
  const DomainSpec spec = DomainSpec::parse(c.domain);
  const Rational k = Rational::parse(c.k);
  const EmitFormat fmt = parse_emit_format(c.format);
  const JordanInvariants inv = invariants(spec);
  if (c.family == "y") {
    const YKernel ker(spec, k, c.q);
    const UniExpr g = ker.inflated().scaled(ker.prefactor());
    if (fmt != EmitFormat::text) {
      out << emit(g, fmt) << "\n";
      return kOk;
    }
    const Rational npow = -(Rational(c.q) / k + Rational(inv.g));
    out << "Y(" << c.q << ", " << spec.str() << "; k=" << k.str() << ")\n"
        << "K(W,Z) = G(X) * N(Z,Z)^(" << npow.str() << ") / vol,  X = ||W||^2 / N(Z,Z)^(1/k)\n"
        << "F(X) = " << emit(ker.core(), EmitFormat::text) << "\n"
        << "G(X) = (k/chi(0)) (1/q!) F^(q-1)(X) = " << emit(g, EmitFormat::text) << "\n"
        << "prefactor k/chi(0) = " << ker.prefactor().str() << "\n";
    return kOk;
  }
  if (c.family == "e") {
    const EKernel ker(spec, k, c.p, c.q);
    if (fmt != EmitFormat::text) {
      out << emit(ker.inflated(), fmt) << "\n";
      return kOk;
    }
    const Rational npow = -(Rational(c.p) + Rational(c.q) / k + Rational(inv.g));
    out << "E(" << c.p << ", " << c.q << ", " << spec.str() << "; k=" << k.str() << ")\n"
        << "K(W1,W2,Z) = L(t1,t2) * N(Z,Z)^(" << npow.str()
        << ") / vol,  t1 = ||W1||^2 / N(Z,Z), t2 = ||W2||^2 / N(Z,Z)^(1/k)\n"
        << "Lambda = " << emit(ker.core(), EmitFormat::text) << "\n"
        << "L = (1/(p!q!)) d^(p-1)/dt1 d^(q-1)/dt2 Lambda = " << emit(ker.inflated(), EmitFormat::text) << "\n";
    return kOk;
  }
  throw ParseError("kernel family must be 'y' or 'e'");
}

int cmd_emit(const Config& c, std::istream& in, std::ostream& out) {
  std::string text;
  if (c.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(c.input);
    if (!f) throw ParseError("cannot read '" + c.input + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  const EmitFormat fmt = parse_emit_format(c.format);
  const auto expr = parse_expr_json(text);
  std::visit([&](const auto& e) { out << emit(e, fmt) << "\n"; }, expr);
  return kOk;
}

ElementZ parse_z(const DomainSpec& spec, const std::vector<std::string>& items) {
  if (items.empty()) return ElementZ::zero(spec);
  const std::vector<cplx> coords = parse_complex_list(items);
  return ElementZ::from_coordinates(spec, coords);
}

int cmd_eval(const Config& c, std::ostream& out) {
  const DomainSpec spec = DomainSpec::parse(c.domain);
  const Rational k = Rational::parse(c.k);
  const ElementZ z = parse_z(spec, c.z);
  double value = 0.0;
  if (c.family == "y") {
    std::vector<cplx> w = parse_complex_list(c.w);
    if (w.empty()) w.assign(static_cast<std::size_t>(c.q), cplx(0.0));
    const YKernel ker(spec, k, c.q);
    value = ker(w, z, resolve_volume(c, spec));
  } else if (c.family == "e") {
    std::vector<cplx> w1 = parse_complex_list(c.w1);
    std::vector<cplx> w2 = parse_complex_list(c.w2);
    if (w1.empty()) w1.assign(static_cast<std::size_t>(c.p), cplx(0.0));
    if (w2.empty()) w2.assign(static_cast<std::size_t>(c.q), cplx(0.0));
    const EKernel ker(spec, k, c.p, c.q);
    value = ker(w1, w2, z, resolve_volume(c, spec));
  } else {
    throw ParseError("eval family must be 'y' or 'e'");
  }
  if (c.format == "json") {
    ojson o;
    o["family"] = c.family;
    o["domain"] = spec.str();
    o["k"] = k.str();
    o["value"] = value;
    out << o.dump() << "\n";
  } else {
    out << fmt_double(value) << "\n";
  }
  return kOk;
}

Family parse_family(const std::string& f) {
  if (f == "y") return Family::Y;
  if (f == "e") return Family::E;
  throw ParseError("family must be 'y' or 'e'");
}

int emit_reports(const std::vector<VerifyReport>& reports, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) {
    out << r.jsonl() << "\n";
    ok = ok && r.pass;
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const DomainSpec spec = DomainSpec::parse(c.domain);
  const McRun run = mc_run(c);
  std::vector<VerifyReport> reports;

  if (c.suite == "selberg") {
    for (const auto& s : c.s_values) reports.push_back(mc_norm_moment(spec, Rational::parse(s), run, c.tol.value_or(0.0)));
  } else if (c.suite == "series-y" || c.suite == "series-e") {
    const Family fam = c.suite == "series-y" ? Family::Y : Family::E;
    reports = compare_series(spec, Rational::parse(c.k), fam, c.points, c.seed, c.truncate, c.tol.value_or(1e-8));
  } else if (c.suite == "coeffs") {
    const Rational k = Rational::parse(c.k);
    const std::optional<double> vol = parse_vol(c);
    const std::string fam = c.family.empty() ? "both" : c.family;
    if (!c.index.empty()) {
      if (fam == "both") throw ParseError("--index needs --family y or e");
      reports.push_back(coeff_mc(spec, k, parse_family(fam), c.index, run, vol, c.tol.value_or(0.0)));
    } else {
      if (fam == "both" || fam == "y")
        for (int j = 0; j <= 2; ++j) reports.push_back(coeff_mc(spec, k, Family::Y, {j}, run, vol, c.tol.value_or(0.0)));
      if (fam == "both" || fam == "e")
        for (int j1 = 0; j1 <= 2; ++j1)
          for (int j2 = 0; j1 + j2 <= 2; ++j2)
            reports.push_back(coeff_mc(spec, k, Family::E, {j1, j2}, run, vol, c.tol.value_or(0.0)));
      if (fam != "both" && fam != "y" && fam != "e") throw ParseError("family must be y, e or both");
    }
  } else if (c.suite == "volume") {
    const McEstimate est = mc_volume(spec, run);
    VolumeCache cache(c.cache);
    cache.store(spec, est);
    cache.save();
    VerifyReport r;
    r.quantity = "volume " + spec.str();
    r.stochastic = true;
    r.estimate = est.value;
    r.std_error = est.std_error;
    r.samples = est.samples;
    r.seed = est.seed;
    r.acceptance_ratio = est.acceptance_ratio;
    r.tolerance = c.tol.value_or(0.0);
    if (est.low_acceptance()) r.warnings.emplace_back("LowAcceptance");
    if (auto exact = exact_volume(spec)) {
      r.reference = *exact;
      r.finalize();
    } else {
      // No closed form to compare with; the estimate is only checked for sanity.
      r.reference = std::numeric_limits<double>::quiet_NaN();
      r.deviation = std::numeric_limits<double>::quiet_NaN();
      r.pass = est.value > 0.0 && !est.low_acceptance();
    }
    reports.push_back(r);
  } else if (c.suite == "reproducing") {
    const Family fam = parse_family(c.family.empty() ? "y" : c.family);
    std::vector<int> ex = c.exponents;
    if (ex.empty()) ex.assign(fam == Family::Y ? 2 : 3, 0);
    reports.push_back(reproducing_check(spec, Rational::parse(c.k), fam, ex, run, parse_complex_list(c.center),
                                        parse_vol(c), c.tol.value_or(0.0)));
  } else {
    throw ParseError("unknown suite '" + c.suite + "'");
  }
  for (const auto& r : reports)
    for (const auto& w : r.warnings) err << "warning: " << r.quantity << ": " << w << "\n";
  return emit_reports(reports, out);
}

} // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman kernels of Cartan-Hartogs and Cartan-egg domains"};
  app.name("bergman");
  app.require_subcommand(1);
  Config c;

  const std::string domain_help = "domain: I:m,n | II:n | III:n | IV:n | V | VI";
  auto add_domain = [&](CLI::App* sub) { sub->add_option("--domain", c.domain, domain_help)->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
  };
  auto add_kernel_params = [&](CLI::App* sub) {
    sub->add_option("--k", c.k, "exponent k > 0 (rational, e.g. 3/2)");
    sub->add_option("--p", c.p, "dimension of W1 (Cartan-egg)");
    sub->add_option("--q", c.q, "dimension of W (Hartogs) or W2 (egg)");
  };
  auto add_mc = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--samples", c.samples, "Monte-Carlo samples");
    sub->add_option("--workers", c.workers, "worker threads (0 = all)");
    sub->add_flag("--serial", c.serial, "use the serial reference sampler");
  };

  auto* describe = app.add_subcommand("describe", "invariants and structure of a domain");
  add_domain(describe);
  describe->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* chi = app.add_subcommand("chi", "the chi polynomial of a domain");
  add_domain(chi);
  add_format(chi);

  auto* kernel = app.add_subcommand("kernel", "closed-form kernel of Y or E");
  kernel->add_option("family", c.family, "y or e")->required()->check(CLI::IsMember({"y", "e"}));
  add_domain(kernel);
  add_kernel_params(kernel);
  add_format(kernel);

  auto* emit_cmd = app.add_subcommand("emit", "re-emit a JSON kernel expression");
  emit_cmd->add_option("--input", c.input, "file with the JSON expression, - for stdin");
  add_format(emit_cmd);

  auto* eval = app.add_subcommand("eval", "evaluate a kernel on the diagonal");
  eval->add_option("family", c.family, "y or e")->required()->check(CLI::IsMember({"y", "e"}));
  add_domain(eval);
  add_kernel_params(eval);
  eval->add_option("--w", c.w, "W components (Hartogs)");
  eval->add_option("--w1", c.w1, "W1 components (egg)");
  eval->add_option("--w2", c.w2, "W2 components (egg)");
  eval->add_option("--z", c.z, "free coordinates of Z (default 0)");
  eval->add_option("--vol", c.vol, "volume of the domain (overrides cache)");
  eval->add_option("--cache", c.cache, "volume cache file");
  eval->add_option("--seed", c.seed, "seed of the cached volume estimate");
  eval->add_option("--samples", c.samples, "sample count of the cached volume estimate");
  eval->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite, JSON lines out");
  verify->add_option("suite", c.suite, "selberg, series-y, series-e, coeffs, volume or reproducing")
      ->required()
      ->check(CLI::IsMember({"selberg", "series-y", "series-e", "coeffs", "volume", "reproducing"}));
  add_domain(verify);
  add_mc(verify);
  verify->add_option("--k", c.k, "exponent k > 0");
  verify->add_option("--s", c.s_values, "moment exponents for selberg");
  verify->add_option("--points", c.points, "interior points for series suites");
  verify->add_option("--truncate", c.truncate, "series terms per variable");
  verify->add_option("--tol", c.tol, "tolerance on the relative deviation");
  verify->add_option("--family", c.family, "y or e (coeffs also accepts both)");
  verify->add_option("--index", c.index, "coefficient multi-index");
  verify->add_option("--exponents", c.exponents, "monomial exponents for reproducing");
  verify->add_option("--center", c.center, "centre values of the W variables");
  verify->add_option("--vol", c.vol, "volume of the domain");
  verify->add_option("--cache", c.cache, "volume cache file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*describe) return cmd_describe(c, out);
    if (*chi) return cmd_chi(c, out);
    if (*kernel) return cmd_kernel(c, out);
    if (*emit_cmd) return cmd_emit(c, in, out);
    if (*eval) return cmd_eval(c, out);
    if (*verify) return cmd_verify(c, out, err);
  } catch (const OutsideDomain& e) {
    err << "OutsideDomain: " << e.what() << "\n";
    return kOutside;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace bergman::cli
