#pragma once

#include "bergman/domain.hpp"
#include "bergman/verify.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bergman::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kOutside = 3 };

/// "0.3", "-0.2+0.1i", "0.5i", "i". Throws ParseError.
std::complex<double> parse_complex(std::string_view text);

/// Monte-Carlo volume estimates keyed by domain, sample count and seed,
/// stored as a JSON file.
class VolumeCache {
public:
  struct Entry {
    std::string domain;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
    double std_error = 0.0;
  };

  explicit VolumeCache(std::string path);

  /// Exact match first, otherwise the entry for the domain with most samples.
  std::optional<Entry> lookup(const DomainSpec& spec, std::uint64_t samples, std::uint64_t seed) const;
  void store(const DomainSpec& spec, const McEstimate& est);
  void save() const;

  const std::vector<Entry>& entries() const { return entries_; }

private:
  std::string path_;
  std::vector<Entry> entries_;
};

/// Runs the command line (without the program name). Returns the exit code.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace bergman::cli
