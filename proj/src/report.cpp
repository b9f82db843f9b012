#include "homlie/report.hpp"

#include <algorithm>

namespace homlie {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ProbePass: return "probe-pass";
  }
  return "fail";
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed(); });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed()) return &c;
  return nullptr;
}

bool CheckBuilder::record(const Matrix& residual, std::vector<std::string> witness) {
  if (residual.is_zero()) return true;
  if (check_.status != CheckStatus::Fail) {
    check_.status = CheckStatus::Fail;
    check_.witness = std::move(witness);
    check_.residual = residual;
  }
  return false;
}

bool CheckBuilder::record(const Vector& residual, std::vector<std::string> witness) {
  if (is_zero(residual)) return true;
  return record(Matrix::from_columns(std::span<const Vector>(&residual, 1), residual.size()), std::move(witness));
}

void CheckBuilder::fail_with(std::vector<std::string> witness, std::string note) {
  if (check_.status == CheckStatus::Fail) return;
  check_.status = CheckStatus::Fail;
  check_.witness = std::move(witness);
  if (!note.empty()) check_.note = std::move(note);
}

}  // namespace homlie
