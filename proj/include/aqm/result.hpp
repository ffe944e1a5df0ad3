#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace aqm {

/// Machine-readable operation error. `code` is a stable snake_case tag
/// suitable for tests and scripting; `message` is for humans.
struct Error {
  std::string code;
  std::string message;

  bool operator==(const Error&) const = default;
};

/// Value-or-error return type for recoverable domain failures.
template <typename T, typename E = Error>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}
  Result(E error) : state_(std::move(error)) {}

  static Result failure(std::string code, std::string message) {
    return Result(E{std::move(code), std::move(message)});
  }

  [[nodiscard]] bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  [[nodiscard]] const T& value() const& {
    assert(ok());
    return std::get<T>(state_);
  }
  [[nodiscard]] T& value() & {
    assert(ok());
    return std::get<T>(state_);
  }
  [[nodiscard]] T&& value() && {
    assert(ok());
    return std::get<T>(std::move(state_));
  }

  [[nodiscard]] const E& error() const {
    assert(!ok());
    return std::get<E>(state_);
  }

 private:
  std::variant<T, E> state_;
};

}  // namespace aqm
