#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wpi::cli {

/// Process exit statuses. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDisconnected = 3,
  kPreconditionRefusal = 4,
  kUnrealizable = 5,
  kVerificationFailure = 6,
};

/// Environment variable overriding the exhaustive enumeration limit.
inline constexpr const char* kEnumerationLimitEnv = "WPI_ENUM_MAX_H";

enum class Format { text, structured };

/// Ordered key/value block; one per graph or system.
class Record {
 public:
  Record& add(std::string key, std::string value);
  Record& add(std::string key, long long value);
  void render(std::ostream& out, Format format) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Enumeration limit from the environment, or the library default.
int enumeration_limit();

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wpi::cli
