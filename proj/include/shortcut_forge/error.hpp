#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shortcut_forge {

enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  NotADag,
  BadK,
  NotAChain,
  NotReachable,
  PreconditionViolated,
  Infeasible,
  IterationCapExceeded,
  RetryExhausted,
  BadParams,
  BadBudget,
  PromiseViolated,
  BudgetExceeded,
  BadRho,
  Parse,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` selects the
// CLI exit status and lets callers branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shortcut_forge
