#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homlie/linalg.hpp"

namespace homlie {

enum class CheckStatus { Pass, Fail, ProbePass };

std::string_view to_string(CheckStatus status);

/// One axiom sweep. On failure `witness` names the first offending basis
/// indices (or generator names) and `residual` holds the nonzero residual.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> witness;
  std::optional<Matrix> residual;
  std::string note;

  bool passed() const { return status != CheckStatus::Fail; }
};

class VerificationReport {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void append(const VerificationReport& other);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool all_pass() const;
  const Check* find(std::string_view name) const;
  /// First failing check, or nullptr.
  const Check* first_failure() const;

 private:
  std::vector<Check> checks_;
};

/// Builds a single Check from a sweep: call `record` for every residual; the
/// first nonzero one becomes the witness.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

  /// Returns true when the residual was zero.
  bool record(const Matrix& residual, std::vector<std::string> witness);
  bool record(const Vector& residual, std::vector<std::string> witness);
  void fail_with(std::vector<std::string> witness, std::string note = {});
  void set_note(std::string note) { check_.note = std::move(note); }
  Check finish() && { return std::move(check_); }

 private:
  Check check_;
};

}  // namespace homlie
