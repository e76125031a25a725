#pragma once

#include "wpr/complex.hpp"
#include "wpr/zmod.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpr::cli {

/// Diagnostic with a 1-based source position.
class SessionError : public std::runtime_error {
 public:
  SessionError(std::string file, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct IdealDecl {
  std::vector<Elem> generators;
  /// Zero generators removed from the declaration.
  std::size_t dropped_zeros = 0;
};

/// A parsed and validated session file.
struct Session {
  std::string file;
  RingPtr ring;
  std::map<std::string, IdealDecl> ideals;
  std::map<std::string, FpModule> modules;
  std::map<std::string, Complex> complexes;
  std::map<std::string, ZModClass> zmods;
  std::vector<std::string> warnings;
};

/// Grammar, one declaration per line, '#' starts a comment:
///   ring ZZ | ring QQ[x,y] | ring GF(p)[x,y] [order grevlex|lex|grlex] [/ (f, ...)]
///   ideal NAME = (f, ...)
///   module NAME = free R | quotient IDEAL | quotient (f, ...) | coker G [[row], ...]
///   complex NAME = from LO (MODULE, ...) (MATRIX, ...)
///   zmod NAME = [k*]SUMMAND + ...   with SUMMAND one of
///                Z, Q, Z/n, Z(p^oo), Z[1/p,q,...]
Session parse_session(const std::string& text, const std::string& file = "<session>");
Session load_session(const std::string& path);

}  // namespace wpr::cli
