#pragma once

#include <stdexcept>
#include <string>

namespace cubicay {

// Exit-code categories used by the CLI: config errors map to 2,
// resource-cap errors to 3, structural check failures to 1.
enum class ErrorKind { Config, Resource, Usage };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct InvalidParameters : Error {
  explicit InvalidParameters(const std::string& what) : Error(ErrorKind::Config, what) {}
};

struct CompletionOverflow : Error {
  explicit CompletionOverflow(int rule_cap)
      : Error(ErrorKind::Resource,
              "rewrite completion exceeded rule cap " + std::to_string(rule_cap)),
        rule_cap(rule_cap) {}
  int rule_cap;
};

struct BallCapExceeded : Error {
  explicit BallCapExceeded(std::size_t cap)
      : Error(ErrorKind::Resource, "ball exceeds vertex cap " + std::to_string(cap)) {}
};

struct BallTooSmall : Error {
  explicit BallTooSmall(const std::string& what) : Error(ErrorKind::Config, what) {}
};

struct SameVertex : Error {
  SameVertex() : Error(ErrorKind::Usage, "source and sink vertex coincide") {}
};

struct UnknownFormat : Error {
  explicit UnknownFormat(const std::string& fmt)
      : Error(ErrorKind::Config, "unknown export format: " + fmt) {}
};

struct MalformedSeparator : Error {
  explicit MalformedSeparator(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

struct NotTypeIII : Error {
  NotTypeIII() : Error(ErrorKind::Usage, "separation is not of Type III") {}
};

struct NotNested : Error {
  explicit NotNested(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

struct PartialPart : Error {
  explicit PartialPart(int part) : Error(ErrorKind::Usage, "part " + std::to_string(part) + " touches the ball boundary") {}
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(ErrorKind::Config, what) {}
};

}  // namespace cubicay
