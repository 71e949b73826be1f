#pragma once

#include <stdexcept>
#include <string>

namespace varkit {

enum class Errc {
  parse,           // malformed text input
  domain_mismatch, // wrong coefficient domain, modulus or shape
  unsupported,     // operation undefined for this domain
  resource_cap,    // configured limit exceeded
  invalid,         // bad argument value
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace varkit
