#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tlsf {

// 1-based source position; {0,0} means "no position".
struct SourcePos {
  uint32_t line = 0;
  uint32_t col = 0;

  bool valid() const { return line != 0; }
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

enum class ErrorKind {
  Lex,      // tokenizer failures
  Parse,    // grammar / section layout failures
  Elab,     // evaluation, kind and scoping failures
  Export,   // serializer precondition failures
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, SourcePos pos, const std::string& message)
      : std::runtime_error(pos.valid() ? pos.str() + ": " + message : message),
        kind_(kind),
        pos_(pos),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

[[noreturn]] inline void lex_error(SourcePos pos, const std::string& msg) {
  throw Error(ErrorKind::Lex, pos, msg);
}
[[noreturn]] inline void parse_error(SourcePos pos, const std::string& msg) {
  throw Error(ErrorKind::Parse, pos, msg);
}
[[noreturn]] inline void elab_error(SourcePos pos, const std::string& msg) {
  throw Error(ErrorKind::Elab, pos, msg);
}
[[noreturn]] inline void export_error(const std::string& msg) {
  throw Error(ErrorKind::Export, SourcePos{}, msg);
}

}  // namespace tlsf
