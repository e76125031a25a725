#include "session.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace wpr::cli {

SessionError::SessionError(std::string file, int line, int column, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, std::string file, int line, std::size_t base = 0)
      : s_(text), file_(std::move(file)), line_(line), base_(base) {}

  /// `at` is an offset into this cursor's text.
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw SessionError(file_, line_, static_cast<int>(base_ + at) + 1, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  std::size_t pos() {
    skip();
    return pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    std::size_t save = pos();
    if (s_.compare(pos_, w.size(), w) == 0) {
      std::size_t end = pos_ + w.size();
      if (end >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) {
        pos_ = end;
        return true;
      }
    }
    pos_ = save;
    return false;
  }
  std::string ident() {
    std::size_t start = pos();
    if (start >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[start])) || s_[start] == '_'))
      fail("expected a name");
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  long integer() {
    std::size_t start = pos();
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string t = s_.substr(start, pos_ - start);
    if (t.empty() || t == "-") fail("expected an integer", start);
    try {
      return std::stol(t);
    } catch (const std::exception&) {
      fail("integer out of range", start);
    }
  }
  /// Text up to the matching close of the bracket at the cursor; the
  /// cursor ends after the close. Returns the inner text and its offset.
  std::pair<std::string, std::size_t> group(char open, char close) {
    std::size_t start = pos();
    if (!accept(open)) fail(std::string("expected '") + open + "'");
    int depth = 1;
    std::size_t i = pos_;
    for (; i < s_.size(); ++i) {
      if (s_[i] == open) ++depth;
      if (s_[i] == close && --depth == 0) break;
    }
    if (i >= s_.size()) fail(std::string("unbalanced '") + open + "'", start);
    std::string inner = s_.substr(pos_, i - pos_);
    std::size_t off = pos_;
    pos_ = i + 1;
    return {inner, off};
  }
  /// Rest of the line from the cursor.
  std::pair<std::string, std::size_t> rest() {
    std::size_t start = pos();
    pos_ = s_.size();
    return {s_.substr(start), start};
  }
  void end() {
    if (!done()) fail("unexpected text");
  }

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  const std::string& s_;
  std::string file_;
  int line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// Splits on commas outside brackets; returns (piece, offset) pairs.
std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      std::string piece = s.substr(start, i - start);
      std::size_t lead = piece.find_first_not_of(" \t");
      if (lead == std::string::npos) {
        out.emplace_back("", base + start);
      } else {
        std::size_t trail = piece.find_last_not_of(" \t");
        out.emplace_back(piece.substr(lead, trail - lead + 1), base + start + lead);
      }
      start = i + 1;
      continue;
    }
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
  }
  if (out.size() == 1 && out[0].first.empty()) out.clear();
  return out;
}

class Parser {
 public:
  explicit Parser(std::string file) { session_.file = std::move(file); }

  void line(const std::string& raw, int number) {
    std::string text = raw.substr(0, raw.find('#'));
    Cursor c(text, session_.file, number);
    if (c.done()) return;
    std::size_t at = c.pos();
    std::string kw = c.ident();
    if (kw == "ring") return ring(c, at);
    if (kw == "zmod") return zmod(c);
    if (!session_.ring) c.fail("declare the ring first", at);
    if (kw == "ideal") return ideal(c);
    if (kw == "module") return module(c);
    if (kw == "complex") return complex(c);
    c.fail("unknown declaration '" + kw + "'", at);
  }

  Session finish(int last_line) {
    if (!session_.ring) throw SessionError(session_.file, last_line, 1, "session declares no ring");
    return std::move(session_);
  }

 private:
  Elem element(Cursor& c, const std::string& text, std::size_t at) {
    if (text.empty()) c.fail("expected a ring element", at);
    try {
      return session_.ring->parse(text);
    } catch (const std::exception& e) {
      c.fail(std::string("bad ring element: ") + e.what(), at);
    }
  }

  std::vector<Elem> elements(Cursor& c, const std::pair<std::string, std::size_t>& g) {
    std::vector<Elem> out;
    for (const auto& [piece, at] : split_top(g.first, g.second)) out.push_back(element(c, piece, at));
    return out;
  }

  std::string new_name(Cursor& c) {
    std::size_t at = c.pos();
    std::string name = c.ident();
    if (names_.count(name)) c.fail("name '" + name + "' is already declared", at);
    names_.insert(name);
    c.expect('=');
    return name;
  }

  void ring(Cursor& c, std::size_t at) {
    if (session_.ring) c.fail("only one ring per session", at);
    std::size_t ring_at = c.pos();
    if (c.accept_word("ZZ")) {
      session_.ring = Ring::integers();
      c.end();
      return;
    }
    Field field;
    if (c.accept_word("GF")) {
      c.expect('(');
      std::size_t mod_at = c.pos();
      long p = c.integer();
      c.expect(')');
      try {
        field = Field::prime(Integer(p));
      } catch (const std::exception&) {
        c.fail("modulus must be prime", mod_at);
      }
    } else if (!c.accept_word("QQ")) {
      c.fail("expected ZZ, QQ[...] or GF(p)[...]", ring_at);
    }
    std::vector<std::string> vars;
    auto g = c.group('[', ']');
    for (const auto& [v, off] : split_top(g.first, g.second)) {
      Cursor vc(v, session_.file, c.line());
      if (v.empty() || vc.ident() != v) c.fail("bad variable name '" + v + "'", off);
      for (const auto& w : vars)
        if (w == v) c.fail("variable '" + v + "' repeated", off);
      vars.push_back(v);
    }
    MonomialOrder order = MonomialOrder::Grevlex;
    if (c.accept_word("order")) {
      std::size_t o = c.pos();
      std::string name = c.ident();
      try {
        order = parse_monomial_order(name);
      } catch (const std::exception&) {
        c.fail("unknown monomial order '" + name + "'", o);
      }
    }
    auto ctx = std::make_shared<const PolyContext>(field, vars, order);
    std::vector<Polynomial> quotient;
    if (c.accept('/')) {
      auto q = c.group('(', ')');
      for (const auto& [piece, off] : split_top(q.first, q.second)) {
        try {
          quotient.push_back(parse_polynomial(piece, ctx));
        } catch (const std::exception& e) {
          c.fail(std::string("bad quotient generator: ") + e.what(), off);
        }
      }
    }
    c.end();
    session_.ring = Ring::polynomial(ctx, quotient);
  }

  void ideal(Cursor& c) {
    std::string name = new_name(c);
    IdealDecl d;
    for (auto& e : elements(c, c.group('(', ')'))) {
      if (session_.ring->is_zero(e))
        ++d.dropped_zeros;
      else
        d.generators.push_back(std::move(e));
    }
    c.end();
    if (d.dropped_zeros)
      session_.warnings.push_back("ideal " + name + ": dropped " + std::to_string(d.dropped_zeros) +
                                  " zero generator(s)");
    session_.ideals.emplace(name, std::move(d));
  }

  RMatrix matrix(Cursor& c, std::size_t rows_expected, bool check_rows) {
    std::size_t at = c.pos();
    auto g = c.group('[', ']');
    auto rows = split_top(g.first, g.second);
    std::vector<std::vector<Elem>> data;
    for (const auto& [row, off] : rows) {
      if (row.empty() || row.front() != '[' || row.back() != ']') c.fail("expected a row '[...]'", off);
      std::vector<Elem> r;
      for (const auto& [piece, poff] : split_top(row.substr(1, row.size() - 2), off + 1))
        r.push_back(element(c, piece, poff));
      if (!data.empty() && r.size() != data.front().size()) c.fail("rows have different lengths", off);
      data.push_back(std::move(r));
    }
    if (check_rows && !data.empty() && data.size() != rows_expected)
      c.fail("matrix has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows_expected), at);
    RMatrix m(check_rows ? rows_expected : data.size(), data.empty() ? 0 : data.front().size());
    for (std::size_t i = 0; i < data.size(); ++i)
      for (std::size_t j = 0; j < data[i].size(); ++j) m(i, j) = data[i][j];
    return m;
  }

  void module(Cursor& c) {
    std::string name = new_name(c);
    const RingPtr& ring = session_.ring;
    std::size_t at = c.pos();
    FpModule m;
    if (c.accept_word("free")) {
      long r = c.integer();
      if (r < 0) c.fail("rank must be nonnegative", at);
      m = FpModule::free(ring, static_cast<std::size_t>(r), name);
    } else if (c.accept_word("quotient")) {
      std::vector<Elem> gens;
      if (c.peek() == '(') {
        gens = elements(c, c.group('(', ')'));
      } else {
        std::size_t ref = c.pos();
        std::string id = c.ident();
        auto it = session_.ideals.find(id);
        if (it == session_.ideals.end()) c.fail("unknown ideal '" + id + "'", ref);
        gens = it->second.generators;
      }
      m = quotient_module(ring, gens);
    } else if (c.accept_word("coker")) {
      long g = c.integer();
      if (g < 0) c.fail("generator count must be nonnegative", at);
      RMatrix rel = matrix(c, static_cast<std::size_t>(g), true);
      m = FpModule(ring, static_cast<std::size_t>(g), rel);
    } else {
      c.fail("expected free, quotient or coker", at);
    }
    c.end();
    m.set_name(name);
    session_.modules.emplace(name, std::move(m));
  }

  void complex(Cursor& c) {
    std::size_t decl = c.pos();
    std::string name = new_name(c);
    if (!c.accept_word("from")) c.fail("expected 'from LO'");
    long lo = c.integer();
    auto mods = c.group('(', ')');
    std::vector<FpModule> modules;
    for (const auto& [ref, off] : split_top(mods.first, mods.second)) {
      auto it = session_.modules.find(ref);
      if (it == session_.modules.end()) c.fail("unknown module '" + ref + "'", off);
      modules.push_back(it->second);
    }
    if (modules.empty()) c.fail("complex needs at least one module", mods.second);
    std::vector<RMatrix> diffs;
    if (c.peek() == '(') {
      auto ms = c.group('(', ')');
      auto pieces = split_top(ms.first, ms.second);
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k + 1 >= modules.size()) c.fail("too many differentials", pieces[k].second);
        std::string text = pieces[k].first;
        Cursor mc(text, session_.file, c.line(), pieces[k].second);
        RMatrix m = matrix(mc, modules[k + 1].generators(), true);
        if (m.cols() == 0 && modules[k].generators() > 0 && modules[k + 1].generators() > 0)
          m = RMatrix(modules[k + 1].generators(), modules[k].generators());
        if (m.cols() != modules[k].generators())
          c.fail("differential " + std::to_string(k + 1) + " has " + std::to_string(m.cols()) + " columns, expected " +
                     std::to_string(modules[k].generators()),
                 pieces[k].second);
        diffs.push_back(m);
      }
    }
    while (diffs.size() + 1 < modules.size())
      diffs.push_back(RMatrix(modules[diffs.size() + 1].generators(), modules[diffs.size()].generators()));
    c.end();
    try {
      session_.complexes.emplace(name, Complex(session_.ring, static_cast<int>(lo), modules, diffs));
    } catch (const std::invalid_argument& e) {
      c.fail("complex " + name + ": " + e.what(), decl);
    }
  }

  void zmod(Cursor& c) {
    std::string name = new_name(c);
    ZModClass d;
    auto [text, base] = c.rest();
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && text[i] != '+') continue;
      std::string term = text.substr(start, i - start);
      std::size_t lead = term.find_first_not_of(" \t");
      if (lead == std::string::npos) c.fail("empty summand", base + start);
      term = term.substr(lead, term.find_last_not_of(" \t") - lead + 1);
      summand(c, term, base + start + lead, d);
      start = i + 1;
    }
    session_.zmods.emplace(name, std::move(d));
  }

  void summand(const Cursor& outer, const std::string& term, std::size_t at, ZModClass& d) {
    Cursor c(term, session_.file, outer.line(), at);
    auto fail = [&](const std::string& msg) { c.fail(msg, c.pos()); };
    unsigned mult = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      long k = c.integer();
      if (k < 1) fail("multiplicity must be positive");
      mult = static_cast<unsigned>(k);
      c.expect('*');
    }
    try {
      if (c.accept_word("Q")) {
        d.add(ZSummand::rationals(), mult);
      } else if (c.accept_word("Z")) {
        if (c.accept('/')) {
          long n = c.integer();
          if (n < 1) fail("order must be positive");
          const ZModClass cyclic = cyclic_class(Integer(n));
          for (const auto& [s, m] : cyclic.summands()) d.add(s, m * mult);
        } else if (c.accept('(')) {
          long p = c.integer();
          c.expect('^');
          if (!c.accept_word("oo")) fail("expected 'oo'");
          c.expect(')');
          d.add(ZSummand::prufer(p), mult);
        } else if (c.accept('[')) {
          c.expect('1');
          c.expect('/');
          std::vector<long> primes{c.integer()};
          while (c.accept(',')) primes.push_back(c.integer());
          c.expect(']');
          d.add(ZSummand::localized(primes), mult);
        } else {
          d.add(ZSummand::integers(), mult);
        }
      } else {
        fail("expected Z, Q, Z/n, Z(p^oo) or Z[1/p]");
      }
    } catch (const SessionError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (!c.done()) fail("unexpected text in summand");
  }

  Session session_;
  std::set<std::string> names_;
};

}  // namespace

Session parse_session(const std::string& text, const std::string& file) {
  Parser p(file);
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) p.line(raw, ++number);
  return p.finish(std::max(number, 1));
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError(path, 1, 1, "cannot read session file");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
  return parse_session(ss.str(), base);
}

}  // namespace wpr::cli
