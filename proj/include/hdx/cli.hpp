#ifndef HDX_CLI_HPP
#define HDX_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hdx::cli {

enum class Subcommand { hdepth, lexify, sigma, series, certify };
enum class Method { automatic, squarefree, series };

struct Request {
  Subcommand subcommand = Subcommand::hdepth;
  std::string input;
  Method method = Method::automatic;
  bool strict_m = false;
  bool oracle = false;
  bool json = false;
  bool certify = false;
  bool parallel = true;
  unsigned max_degree = 10'000'000;
  std::optional<long> trunc_extra;
  /// certify only: JSON text of an externally produced certificate.
  std::optional<std::string> certificate;
};

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kCrossCheckFailed = 2 };

int run(const Request& req, std::ostream& out, std::ostream& err);

/// Full command line handling; args excludes the program name.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hdx::cli

#endif
