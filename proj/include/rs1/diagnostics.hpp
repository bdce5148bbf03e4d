#pragma once

// Error types shared across the toolchain. TypeError carries a stable code
// plus expected/actual renderings so diagnostics can be consumed by machines
// as well as printed.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rs1/ast.hpp"

namespace rs1 {

struct ParseError : std::runtime_error {
  Span span;
  std::vector<std::string> expected;

  ParseError(std::string msg, Span s, std::vector<std::string> exp = {})
      : std::runtime_error(std::move(msg)), span(s), expected(std::move(exp)) {}

  nlohmann::json to_json() const {
    return {{"kind", "parse-error"},
            {"message", what()},
            {"line", span.line},
            {"col", span.col},
            {"expected", expected}};
  }
};

struct ElabError : std::runtime_error {
  std::string code;
  Span span;

  ElabError(std::string code_, std::string msg, Span s)
      : std::runtime_error(std::move(msg)), code(std::move(code_)), span(s) {}

  nlohmann::json to_json() const {
    return {{"kind", "elab-error"}, {"code", code}, {"message", what()},
            {"line", span.line},    {"col", span.col}};
  }
};

struct TypeError : std::runtime_error {
  std::string code;
  Span span;
  std::string expected;  // rendered type, may be empty
  std::string actual;

  TypeError(std::string code_, std::string msg, Span s,
            std::string expected_ = "", std::string actual_ = "")
      : std::runtime_error(std::move(msg)),
        code(std::move(code_)),
        span(s),
        expected(std::move(expected_)),
        actual(std::move(actual_)) {}

  nlohmann::json to_json() const {
    return {{"kind", "type-error"}, {"code", code},          {"message", what()},
            {"line", span.line},    {"col", span.col},       {"expected", expected},
            {"actual", actual}};
  }
};

struct EvalError : std::runtime_error {
  std::string code;  // "out-of-fuel" | "entry-cap" | "internal"

  EvalError(std::string code_, std::string msg)
      : std::runtime_error(std::move(msg)), code(std::move(code_)) {}

  nlohmann::json to_json() const {
    return {{"kind", "eval-error"}, {"code", code}, {"message", what()}};
  }
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace rs1
