#include "bergman/verify.hpp"

#include <json.hpp>

#include <cmath>

namespace bergman {

void VerifyReport::finalize() {
  const double gap = std::abs(estimate - reference);
  const double ref = std::abs(reference);
  deviation = ref > 0.0 ? gap / ref : gap;
  double allowed = tolerance;
  if (stochastic) allowed = std::max(tolerance, 3.0 * std_error / (ref > 0.0 ? ref : 1.0));
  pass = std::isfinite(deviation) && deviation <= allowed;
}

std::string VerifyReport::jsonl() const {
  nlohmann::ordered_json o;
  o["quantity"] = quantity;
  o["estimate"] = estimate;
  o["std_error"] = std_error;
  o["reference"] = reference;
  o["deviation"] = deviation;
  o["tolerance"] = tolerance;
  o["stochastic"] = stochastic;
  if (stochastic) {
    o["samples"] = samples;
    o["seed"] = seed;
    o["acceptance_ratio"] = acceptance_ratio;
  }
  if (!warnings.empty()) o["warnings"] = warnings;
  o["pass"] = pass;
  return o.dump();
}

VerifyReport deterministic_report(std::string quantity, double estimate, double reference, double tol) {
  VerifyReport r;
  r.quantity = std::move(quantity);
  r.estimate = estimate;
  r.reference = reference;
  r.tolerance = tol;
  r.finalize();
  return r;
}

} // namespace bergman
