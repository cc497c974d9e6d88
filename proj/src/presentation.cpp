// Presentation parsing and coset enumeration.
//
// The enumerator is the classic HLT strategy over the trivial subgroup:
// scan-and-fill every relator at every live coset, define new cosets to
// close gaps, and process coincidences immediately with a union-find over
// coset ids. Passes repeat until a full sweep makes no change, after which
// the table is verified (total, columns permute, relators close) before the
// multiplication table is read off via the regular action.

#include "cdlat/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

#include "cdlat/errors.hpp"

namespace cdlat {

namespace {

// ---------------------------------------------------------------- lexing --

struct Token {
  enum Kind { Ident, Int, Comma, Semi, Star, Caret, Equals, End } kind;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      t.kind = Token::Ident;
      t.text = std::string(text.substr(i, j - i));
      bump(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      t.kind = Token::Int;
      t.text = std::string(text.substr(i, j - i));
      try {
        t.value = std::stoll(t.text);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", line, col);
      }
      bump(j - i);
    } else {
      switch (c) {
        case ',': t.kind = Token::Comma; break;
        case ';': t.kind = Token::Semi; break;
        case '*': t.kind = Token::Star; break;
        case '^': t.kind = Token::Caret; break;
        case '=': t.kind = Token::Equals; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, col);
      }
      t.text = c;
      bump(1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// --------------------------------------------------------------- parsing --

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Presentation run() {
    Presentation p;
    expect_keyword("gens");
    parse_names(p);
    expect(Token::Semi, "';' after generator list");
    expect_keyword("rels");
    parse_relators(p);
    expect(Token::Semi, "';' after relator list");
    if (peek().kind != Token::End)
      throw ParseError("trailing input after presentation", peek().line,
                       peek().col);
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what, peek().line,
                       peek().col);
    ++pos_;
  }

  void expect_keyword(const char* kw) {
    if (peek().kind != Token::Ident || peek().text != kw)
      throw ParseError(std::string("expected keyword '") + kw + "'",
                       peek().line, peek().col);
    ++pos_;
  }

  void parse_names(Presentation& p) {
    while (true) {
      if (peek().kind != Token::Ident)
        throw ParseError("expected generator name", peek().line, peek().col);
      const Token& t = take();
      if (gen_index_.count(t.text))
        throw ParseError("duplicate generator '" + t.text + "'", t.line,
                         t.col);
      gen_index_[t.text] = static_cast<int>(p.generators.size());
      p.generators.push_back(t.text);
      if (peek().kind != Token::Comma) break;
      ++pos_;
    }
  }

  Presentation::Word parse_word() {
    Presentation::Word w;
    while (true) {
      if (peek().kind != Token::Ident)
        throw ParseError("expected generator name in word", peek().line,
                         peek().col);
      const Token& t = take();
      auto it = gen_index_.find(t.text);
      if (it == gen_index_.end())
        throw ParseError("unknown generator '" + t.text + "'", t.line, t.col);
      long long exp = 1;
      if (peek().kind == Token::Caret) {
        ++pos_;
        if (peek().kind != Token::Int)
          throw ParseError("expected integer exponent", peek().line,
                           peek().col);
        const Token& e = take();
        if (e.value > 1000000 || e.value < -1000000)
          throw ParseError("exponent out of supported range", e.line, e.col);
        exp = e.value;
      }
      int sign = exp < 0 ? -1 : 1;
      for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k)
        w.push_back({it->second, sign});
      if (peek().kind != Token::Star) break;
      ++pos_;
    }
    return w;
  }

  void parse_relators(Presentation& p) {
    while (true) {
      Presentation::Word w = parse_word();
      if (peek().kind == Token::Equals) {
        ++pos_;
        Presentation::Word rhs = parse_word();
        // u = v becomes the relator u v^-1.
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it)
          w.push_back({it->gen, -it->sign});
      }
      reduce(w);
      if (!w.empty()) p.relators.push_back(std::move(w));
      if (peek().kind != Token::Comma) break;
      ++pos_;
    }
  }

  // Free reduction, then cyclic reduction.
  static void reduce(Presentation::Word& w) {
    Presentation::Word out;
    for (Presentation::Letter l : w) {
      if (!out.empty() && out.back().gen == l.gen &&
          out.back().sign == -l.sign)
        out.pop_back();
      else
        out.push_back(l);
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo].gen == out[hi - 1].gen &&
           out[lo].sign == -out[hi - 1].sign) {
      ++lo;
      --hi;
    }
    w.assign(out.begin() + static_cast<std::ptrdiff_t>(lo),
             out.begin() + static_cast<std::ptrdiff_t>(hi));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, int> gen_index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).run();
}

std::vector<Presentation> parse_presentation_file(std::string_view text) {
  std::vector<Presentation> out;
  std::vector<std::string> names;
  std::string block_name;
  std::string block;
  bool in_block = false;

  auto flush = [&]() {
    if (!in_block) return;
    try {
      Presentation p = parse_presentation(block);
      p.name = block_name;
      out.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw UsageError("block '" + block_name + "': " + e.what());
    }
  };

  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] == '#') {
      flush();
      std::string_view rest = line.substr(first + 1);
      std::size_t a = rest.find_first_not_of(" \t\r");
      std::size_t b = rest.find_last_not_of(" \t\r");
      if (a == std::string_view::npos)
        throw ParseError("empty presentation name after '#'", lineno, 1);
      block_name = std::string(rest.substr(a, b - a + 1));
      for (const auto& seen : names)
        if (seen == block_name)
          throw UsageError("duplicate presentation name '" + block_name + "'");
      names.push_back(block_name);
      block.clear();
      in_block = true;
    } else if (first != std::string_view::npos && !in_block) {
      throw ParseError("content before the first '# name' header", lineno,
                       static_cast<int>(first) + 1);
    } else if (in_block) {
      block.append(line);
      block.push_back('\n');
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  if (out.empty()) throw UsageError("no presentations in file");
  return out;
}

std::string Presentation::render() const {
  std::string s = "gens ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ", ";
    s += generators[i];
  }
  s += "; rels ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) s += ", ";
    const Word& w = relators[r];
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j].gen == w[i].gen && w[j].sign == w[i].sign)
        ++j;
      long long exp = static_cast<long long>(j - i) * w[i].sign;
      if (!first) s += "*";
      first = false;
      s += generators[static_cast<std::size_t>(w[i].gen)];
      if (exp != 1) s += "^" + std::to_string(exp);
      i = j;
    }
  }
  s += ";";
  return s;
}

// ----------------------------------------------------- coset enumeration --

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, int max_cosets)
      : pres_(p), width_(2 * static_cast<int>(p.generators.size())),
        max_cosets_(max_cosets) {
    if (p.generators.empty()) throw UsageError("presentation has no generators");
    if (max_cosets < 1) throw UsageError("coset limit must be positive");
    for (const auto& rel : p.relators) {
      std::vector<int> cols;
      cols.reserve(rel.size());
      for (Presentation::Letter l : rel)
        cols.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
      relators_.push_back(std::move(cols));
    }
    new_coset();  // coset 0: the trivial subgroup itself
  }

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < allocated(); ++a) {
        if (!live(a)) continue;
        for (const auto& rel : relators_) {
          changed |= scan_and_fill(a, rel);
          if (!live(a)) break;
        }
        if (!live(a)) continue;
        for (int x = 0; x < width_; ++x)
          if (tab(a, x) < 0) {
            define(a, x);
            changed = true;
          }
      }
    }
    verify();
  }

  struct RawTable {
    std::vector<int> rows;
    int width = 0;
  };

  RawTable result() const {
    // Compact live cosets, preserving order; coset 0 always survives
    // because coincidences keep the smaller id.
    std::vector<int> newid(static_cast<std::size_t>(allocated()), -1);
    int m = 0;
    for (int a = 0; a < allocated(); ++a)
      if (live(a)) newid[static_cast<std::size_t>(a)] = m++;
    RawTable raw;
    raw.width = width_;
    raw.rows.reserve(static_cast<std::size_t>(m) * width_);
    for (int a = 0; a < allocated(); ++a) {
      if (!live(a)) continue;
      for (int x = 0; x < width_; ++x)
        raw.rows.push_back(newid[static_cast<std::size_t>(rep(tab(a, x)))]);
    }
    return raw;
  }

 private:
  int allocated() const { return static_cast<int>(parent_.size()); }
  bool live(int a) const { return parent_[static_cast<std::size_t>(a)] == a; }

  int rep(int a) const {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      auto& pa = parent_[static_cast<std::size_t>(a)];
      pa = parent_[static_cast<std::size_t>(pa)];  // path halving
      a = pa;
    }
    return a;
  }

  int& tab(int a, int x) {
    return table_[static_cast<std::size_t>(a) * width_ + x];
  }
  int tab(int a, int x) const {
    return table_[static_cast<std::size_t>(a) * width_ + x];
  }
  static int inv(int x) { return x ^ 1; }

  int new_coset() {
    if (allocated() >= max_cosets_)
      throw ResourceError("coset limit exceeded: " +
                          std::to_string(max_cosets_));
    int id = allocated();
    parent_.push_back(id);
    table_.resize(table_.size() + static_cast<std::size_t>(width_), -1);
    return id;
  }

  void define(int a, int x) {
    int b = new_coset();
    tab(a, x) = b;
    tab(b, inv(x)) = a;
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    q.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int dead = q.front();
      q.pop_front();
      for (int x = 0; x < width_; ++x) {
        int d = tab(dead, x);
        if (d < 0) continue;
        tab(d, inv(x)) = -1;  // drop the back-reference into the dying row
        int mu = rep(dead), nu = rep(d);
        if (tab(mu, x) >= 0)
          merge(nu, tab(mu, x), q);
        else if (tab(nu, inv(x)) >= 0)
          merge(mu, tab(nu, inv(x)), q);
        else {
          tab(mu, x) = nu;
          tab(nu, inv(x)) = mu;
        }
      }
    }
  }

  // Returns true if it changed the table (definition, deduction, or
  // coincidence).
  bool scan_and_fill(int alpha, const std::vector<int>& w) {
    bool changed = false;
    for (;;) {
      int f = alpha;
      std::size_t i = 0;
      while (i < w.size() && tab(f, w[i]) >= 0) f = tab(f, w[i++]);
      if (i == w.size()) {
        if (f != alpha) {
          coincidence(f, alpha);
          return true;
        }
        return changed;
      }
      int b = alpha;
      std::size_t j = w.size();
      while (j > i && tab(b, inv(w[j - 1])) >= 0) b = tab(b, inv(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {  // one-cell gap: deduction closes the scan
        tab(f, w[i]) = b;
        tab(b, inv(w[i])) = f;
        return true;
      }
      define(f, w[i]);
      changed = true;
    }
  }

  void verify() const {
    std::vector<int> lives;
    for (int a = 0; a < allocated(); ++a)
      if (live(a)) lives.push_back(a);
    // Totality and column bijectivity.
    for (int x = 0; x < width_; ++x) {
      std::vector<char> seen(static_cast<std::size_t>(allocated()), 0);
      for (int a : lives) {
        int v = tab(a, x);
        if (v < 0)
          throw ContractError("coset table incomplete after enumeration");
        v = rep(v);
        if (seen[static_cast<std::size_t>(v)]++)
          throw ContractError("coset table column is not a permutation");
      }
    }
    // Relator closure everywhere.
    for (const auto& rel : relators_)
      for (int a : lives) {
        int c = a;
        for (int x : rel) c = rep(tab(rep(c), x));
        if (c != a)
          throw ContractError("relator does not close in completed table");
      }
  }

  const Presentation& pres_;
  const int width_;
  const int max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;
  mutable std::vector<int> parent_;
};

}  // namespace

CosetTable enumerate_cosets(const Presentation& p, int max_cosets) {
  Enumerator e(p, max_cosets);
  e.run();
  auto raw = e.result();
  CosetTable ct;
  ct.width_ = raw.width;
  ct.rows_ = std::move(raw.rows);
  return ct;
}

PresentedGroup enumerate(const Presentation& p, int max_cosets) {
  CosetTable ct = enumerate_cosets(p, max_cosets);
  const int n = ct.num_cosets();
  if (n > limits::order_cap())
    throw ResourceError("presented group order " + std::to_string(n) +
                        " exceeds order cap " +
                        std::to_string(limits::order_cap()));

  // Regular action: coset c corresponds to the element taking coset 0 to c.
  // Walk the table breadth-first from 0, building each coset's permutation
  // of cosets from its parent's (one extra letter per step).
  std::vector<std::vector<int>> perm(static_cast<std::size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  perm[0].resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[0][static_cast<std::size_t>(i)] = i;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int x = 0; x < 2 * ct.num_generators(); ++x) {
      int d = ct.apply(c, x);
      if (!perm[static_cast<std::size_t>(d)].empty() || d == 0) continue;
      auto& pd = perm[static_cast<std::size_t>(d)];
      pd.resize(static_cast<std::size_t>(n));
      const auto& pc = perm[static_cast<std::size_t>(c)];
      for (int i = 0; i < n; ++i)
        pd[static_cast<std::size_t>(i)] =
            ct.apply(pc[static_cast<std::size_t>(i)], x);
      order.push_back(d);
    }
  }

  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b) {
    const auto& pb = perm[static_cast<std::size_t>(b)];
    if (pb.empty())
      throw ContractError("coset table is not transitive from coset 0");
    for (int a = 0; a < n; ++a)
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(pb[static_cast<std::size_t>(a)]);
  }

  std::string label = p.name.empty() ? p.render() : p.name;
  PresentedGroup out{Group(n, std::move(table), std::move(label)), {}};
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    out.generator_elements.push_back(ct.apply(0, 2 * static_cast<int>(g)));
  return out;
}

PresentedGroup enumerate(const Presentation& p) {
  return enumerate(p, limits::default_max_cosets());
}

}  // namespace cdlat
