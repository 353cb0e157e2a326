#include "bergman/errors.hpp"
#include "bergman/kernel_expr.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>

namespace bergman {

using ojson = nlohmann::ordered_json;

EmitFormat parse_emit_format(std::string_view s) {
  if (s == "text") return EmitFormat::text;
  if (s == "latex") return EmitFormat::latex;
  if (s == "json") return EmitFormat::json;
  throw ParseError("unknown format '" + std::string(s) + "' (expected text, latex or json)");
}

namespace {

// ---- plain text -----------------------------------------------------------

// "-2-1/k" style rendering of e0 + e1/k.
std::string exponent_text(const Rational& e0, const Rational& e1) {
  std::ostringstream os;
  if (!e0.is_zero()) os << e0.str();
  if (!e1.is_zero()) {
    Rational mag = e1.sign() < 0 ? -e1 : e1;
    if (e1.sign() < 0) os << "-";
    else if (!e0.is_zero()) os << "+";
    if (mag.is_integer()) os << mag.str() << "/k";
    else os << "(" << mag.str() << ")/k";
  }
  return os.str();
}

std::string join_text_terms(const std::vector<KernelTerm>& terms,
                            const std::function<std::string(const KernelTerm&)>& factors) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational mag = t.c.sign() < 0 ? -t.c : t.c;
    if (first) {
      if (t.c.sign() < 0) os << "-";
    } else {
      os << (t.c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string f = factors(t);
    if (f.empty()) os << mag.str();
    else if (mag == Rational(1)) os << f;
    else os << mag.str() << "*" << f;
  }
  return os.str();
}

std::string lambda_factors_text(const KernelTerm& t, const std::string& var) {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  if (t.p == 1) add(var);
  else if (t.p > 1) add(var + "^" + std::to_string(t.p));
  if (t.d > 0) add("(1-" + var + ")^-" + std::to_string(t.d));
  return out;
}

std::string wrap_scale_text(const Rational& scale, const std::string& body) {
  if (scale == Rational(1)) return body;
  return scale.str() + " * (" + body + ")";
}

// ---- LaTeX ----------------------------------------------------------------

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  return "\\frac{" + r.num_str() + "}{" + r.den_str() + "}";
}

std::string exponent_latex(const Rational& e0, const Rational& e1) {
  std::ostringstream os;
  if (!e0.is_zero()) os << (e0.sign() < 0 ? "-" : "") << latex_rational(e0.sign() < 0 ? -e0 : e0);
  if (!e1.is_zero()) {
    Rational mag = e1.sign() < 0 ? -e1 : e1;
    if (e1.sign() < 0) os << "-";
    else if (!e0.is_zero()) os << "+";
    os << "\\frac{" << (mag.is_integer() ? mag.str() : latex_rational(mag)) << "}{k}";
  }
  return os.str();
}

std::string latex_terms(const std::vector<KernelTerm>& terms,
                        const std::function<std::string(const KernelTerm&)>& factors) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational mag = t.c.sign() < 0 ? -t.c : t.c;
    if (first) {
      if (t.c.sign() < 0) os << "-";
    } else {
      os << (t.c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string f = factors(t);
    if (f.empty() || mag != Rational(1)) os << latex_rational(mag);
    os << f;
  }
  return os.str();
}

std::string lambda_factors_latex(const KernelTerm& t, const std::string& var) {
  std::string out;
  if (t.p == 1) out += " " + var;
  else if (t.p > 1) out += " " + var + "^{" + std::to_string(t.p) + "}";
  if (t.d > 0) out += " (1-" + var + ")^{-" + std::to_string(t.d) + "}";
  return out;
}

// ---- JSON -----------------------------------------------------------------

ojson terms_json(const std::vector<KernelTerm>& terms) {
  ojson arr = ojson::array();
  for (const auto& t : terms) {
    ojson o;
    o["c"] = t.c.str();
    o["e0"] = t.e0.str();
    o["e1"] = t.e1.str();
    o["p"] = t.p;
    o["d"] = t.d;
    arr.push_back(std::move(o));
  }
  return arr;
}

std::string doc_json(const char* kind, const Rational& k, const Rational& scale,
                     const std::vector<KernelTerm>& terms) {
  ojson doc;
  doc["kind"] = kind;
  doc["k"] = k.str();
  doc["scale"] = scale.str();
  doc["terms"] = terms_json(terms);
  return doc.dump();
}

Rational rational_field(const ojson& o, const char* key) {
  if (!o.contains(key) || !o[key].is_string()) throw ParseError(std::string("missing rational field '") + key + "'");
  return Rational::parse(o[key].get<std::string>());
}

int int_field(const ojson& o, const char* key) {
  if (!o.contains(key) || !o[key].is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
  return o[key].get<int>();
}

} // namespace

std::string emit(const UniExpr& e, EmitFormat fmt) {
  switch (fmt) {
  case EmitFormat::text:
    return wrap_scale_text(e.scale(), join_text_terms(e.terms(), [](const KernelTerm& t) {
                             return lambda_factors_text(t, "X");
                           }));
  case EmitFormat::latex: {
    std::string body = latex_terms(e.terms(), [](const KernelTerm& t) { return lambda_factors_latex(t, "X"); });
    if (e.scale() != Rational(1)) body = latex_rational(e.scale()) + "\\left(" + body + "\\right)";
    return body;
  }
  case EmitFormat::json: return doc_json("uni", e.k(), e.scale(), e.terms());
  }
  return {};
}

std::string emit(const KernelExpr& e, EmitFormat fmt) {
  switch (fmt) {
  case EmitFormat::text: {
    std::string body = join_text_terms(e.terms(), [](const KernelTerm& t) {
      std::string out;
      std::string ex = exponent_text(t.e0, t.e1);
      if (!ex.empty()) out = "u^(" + ex + ")";
      std::string lam = lambda_factors_text(t, "lambda");
      if (!lam.empty()) out += (out.empty() ? "" : "*") + lam;
      return out;
    });
    return wrap_scale_text(e.scale(), body) + "   where u = 1-t1, lambda = t2*u^(-1/k), k = " + e.k().str();
  }
  case EmitFormat::latex: {
    std::string body = latex_terms(e.terms(), [](const KernelTerm& t) {
      std::string out;
      std::string ex = exponent_latex(t.e0, t.e1);
      if (!ex.empty()) out = " (1-t_1)^{" + ex + "}";
      return out + lambda_factors_latex(t, "\\lambda");
    });
    if (e.scale() != Rational(1)) body = latex_rational(e.scale()) + "\\left(" + body + "\\right)";
    return body + ",\\quad \\lambda = t_2 (1-t_1)^{-\\frac{1}{k}},\\ k = " + latex_rational(e.k());
  }
  case EmitFormat::json: return doc_json("bi", e.k(), e.scale(), e.terms());
  }
  return {};
}

std::variant<UniExpr, KernelExpr> parse_expr_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("invalid expression JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw ParseError("expression JSON needs a 'terms' array");
  Rational k = rational_field(doc, "k");
  Rational scale = doc.contains("scale") ? rational_field(doc, "scale") : Rational(1);
  std::vector<KernelTerm> terms;
  for (const auto& t : doc["terms"]) {
    terms.push_back({rational_field(t, "c"), rational_field(t, "e0"), rational_field(t, "e1"),
                     int_field(t, "p"), int_field(t, "d")});
  }
  std::string kind = doc.contains("kind") && doc["kind"].is_string() ? doc["kind"].get<std::string>() : "bi";
  if (kind == "uni") return UniExpr(k, scale, std::move(terms));
  if (kind == "bi") return KernelExpr(k, scale, std::move(terms));
  throw ParseError("unknown expression kind '" + kind + "'");
}

} // namespace bergman
