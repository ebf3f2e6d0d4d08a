#include "wedgelab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "wedgelab/errors.hpp"

namespace wedgelab {

// ---------------------------------------------------------------- Word

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exp == 0) continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(std::uint32_t gen, std::int32_t exp) { return Word({Letter{gen, exp}}); }

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const Letter& l : letters_) n += static_cast<std::size_t>(std::abs(l.exp));
  return n;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return Word(std::move(out));
}

Word Word::pow(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (std::int64_t i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

Word Word::conjugate_by(const Word& w) const { return w.inverse() * *this * w; }

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(out));
}

std::vector<std::int32_t> Word::expand() const {
  std::vector<std::int32_t> out;
  out.reserve(length());
  for (const Letter& l : letters_) {
    const std::int32_t step = static_cast<std::int32_t>(l.gen + 1) * (l.exp > 0 ? 1 : -1);
    for (std::int32_t i = 0; i < std::abs(l.exp); ++i) out.push_back(step);
  }
  return out;
}

std::string Word::to_string(std::span<const std::string> names) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << '*';
    os << names[letters_[i].gen];
    if (letters_[i].exp != 1) os << '^' << letters_[i].exp;
  }
  return os.str();
}

Word commutator(const Word& x, const Word& y) { return x.inverse() * y.inverse() * x * y; }

// -------------------------------------------------------- Presentation

std::size_t Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return i;
  }
  return static_cast<std::size_t>(-1);
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : generators) os << ' ' << g;
  os << " ; rels: ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) os << ", ";
    os << relators[i].to_string(generators);
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Presentation& p) : s_(text), p_(p) {}

  std::vector<Word> relations() {
    std::vector<Word> out;
    skip_ws();
    if (at_end()) return out;
    for (;;) {
      Word lhs = word();
      skip_ws();
      if (peek() == '=') {
        ++pos_;
        Word rhs = word();
        lhs = lhs * rhs.inverse();
        skip_ws();
      }
      out.push_back(lhs);
      if (at_end()) break;
      expect(',');
    }
    return out;
  }

  std::size_t offset = 0;

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, offset + pos_); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word word() {
    Word w = term();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!(c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c)))) {
        break;
      }
      w = w * term();
    }
    return w;
  }

  Word term() {
    Word base = atom();
    if (peek() != '^') return base;
    ++pos_;
    const char c = peek();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      return base.pow(integer());
    }
    return base.conjugate_by(atom());
  }

  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (s_[pos_] == '-' || s_[pos_] == '+') {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) fail("exponent too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Word atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = word();
      expect(',');
      Word y = word();
      expect(']');
      return commutator(x, y);
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      const std::size_t idx = p_.find(name);
      if (idx == static_cast<std::size_t>(-1)) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
      }
      return Word::generator(static_cast<std::uint32_t>(idx));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const Presentation& p_;
  std::size_t pos_ = 0;
};

bool valid_name(std::string_view n) {
  if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) return false;
  return std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  const std::size_t g = text.find("gens:");
  if (g == std::string_view::npos) throw ParseError("missing 'gens:'", 0);
  const std::size_t r = text.find("rels:", g);
  const std::size_t gens_begin = g + 5;
  std::size_t gens_end = r == std::string_view::npos ? text.size() : r;
  std::string_view gens_part = text.substr(gens_begin, gens_end - gens_begin);
  if (const std::size_t semi = gens_part.find(';'); semi != std::string_view::npos) {
    if (gens_part.find_first_not_of(" \t\r\n", semi + 1) != std::string_view::npos) {
      throw ParseError("unexpected text after ';'", gens_begin + gens_part.find_first_not_of(" \t\r\n", semi + 1));
    }
    gens_part = gens_part.substr(0, semi);
  }
  std::size_t i = 0;
  while (i < gens_part.size()) {
    while (i < gens_part.size() && std::isspace(static_cast<unsigned char>(gens_part[i]))) ++i;
    const std::size_t start = i;
    while (i < gens_part.size() && !std::isspace(static_cast<unsigned char>(gens_part[i])) && gens_part[i] != ',') ++i;
    if (i > start) {
      const std::string_view name = gens_part.substr(start, i - start);
      if (!valid_name(name)) throw ParseError("invalid generator name '" + std::string(name) + "'", gens_begin + start);
      if (p.find(name) != static_cast<std::size_t>(-1)) {
        throw ParseError("duplicate generator '" + std::string(name) + "'", gens_begin + start);
      }
      p.generators.emplace_back(name);
    }
    if (i < gens_part.size() && gens_part[i] == ',') ++i;
  }
  if (p.generators.empty()) throw ParseError("no generators", gens_begin);
  if (r != std::string_view::npos) {
    Parser parser(text.substr(r + 5), p);
    parser.offset = r + 5;
    p.relators = parser.relations();
  }
  return p;
}

// ---------------------------------------------------------- evaluation

Elem evaluate(const Word& w, const Group& g, std::span<const Elem> images) {
  Elem x = kIdentity;
  for (const Letter& l : w.letters()) x = g.mul(x, g.pow(images[l.gen], l.exp));
  return x;
}

bool verify_relator_images(const Presentation& p, const Group& g, std::span<const Elem> images) {
  if (images.size() != p.num_generators()) return false;
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word& r) { return evaluate(r, g, images) == kIdentity; });
}

Presentation ai_closure(const Presentation& p, std::size_t max_cosets) {
  Presentation cur = p;
  std::size_t order = realize(cur, max_cosets)->order();
  for (;;) {
    Presentation next = cur;
    std::set<std::vector<std::int32_t>> have;
    for (const Word& r : cur.relators) have.insert(r.expand());
    for (const Word& r : cur.relators) {
      std::vector<Letter> inv = r.letters();
      for (Letter& l : inv) l.exp = -l.exp;
      Word w(std::move(inv));
      if (have.insert(w.expand()).second) next.relators.push_back(w);
    }
    const std::size_t next_order = realize(next, max_cosets)->order();
    if (next_order == order) return next;
    cur = std::move(next);
    order = next_order;
  }
}

// ------------------------------------------------ generator elimination

namespace {

/// Free and cyclic reduction of a signed-step sequence.
std::vector<std::int32_t> cyclic_reduce(const std::vector<std::int32_t>& w) {
  std::vector<std::int32_t> st;
  for (std::int32_t x : w) {
    if (!st.empty() && st.back() == -x) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  std::size_t b = 0, e = st.size();
  while (e - b >= 2 && st[b] == -st[e - 1]) {
    ++b;
    --e;
  }
  return std::vector<std::int32_t>(st.begin() + static_cast<std::ptrdiff_t>(b), st.begin() + static_cast<std::ptrdiff_t>(e));
}

Word from_steps(const std::vector<std::int32_t>& steps) {
  std::vector<Letter> ls;
  ls.reserve(steps.size());
  for (std::int32_t s : steps) ls.push_back(Letter{static_cast<std::uint32_t>(std::abs(s) - 1), s > 0 ? 1 : -1});
  return Word(std::move(ls));
}

}  // namespace

Presentation eliminate_redundant_generators(const Presentation& p, std::vector<Word>* substitution) {
  const std::size_t n = p.num_generators();
  // Signed union-find: gen g equals root^sign; trivial roots are flagged.
  std::vector<std::uint32_t> parent(n);
  std::vector<std::int32_t> sign(n, 1);
  std::vector<char> trivial(n, 0);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t g) {
    std::int32_t s = 1;
    std::uint32_t r = g;
    while (parent[r] != r) {
      s *= sign[r];
      r = parent[r];
    }
    // Path compression keeping signs consistent.
    std::uint32_t x = g;
    std::int32_t sx = s;
    while (parent[x] != x) {
      const std::uint32_t nx = parent[x];
      const std::int32_t snx = sx * sign[x];
      parent[x] = r;
      sign[x] = sx;
      x = nx;
      sx = snx;
    }
    return std::pair<std::uint32_t, std::int32_t>{r, s};
  };

  std::vector<std::vector<std::int32_t>> rels;
  for (const Word& w : p.relators) rels.push_back(w.expand());

  auto rewrite = [&](const std::vector<std::int32_t>& w) {
    std::vector<std::int32_t> out;
    out.reserve(w.size());
    for (std::int32_t x : w) {
      const auto [r, s] = find(static_cast<std::uint32_t>(std::abs(x) - 1));
      if (trivial[r]) continue;
      out.push_back(static_cast<std::int32_t>(r + 1) * (x > 0 ? s : -s));
    }
    return cyclic_reduce(out);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& w : rels) {
      w = rewrite(w);
      if (w.size() == 1) {
        trivial[static_cast<std::size_t>(std::abs(w[0]) - 1)] = 1;
        changed = true;
      } else if (w.size() == 2 && std::abs(w[0]) != std::abs(w[1])) {
        // x^a y^b = 1  =>  larger root := smaller root^(-a*b)
        std::uint32_t a = static_cast<std::uint32_t>(std::abs(w[0]) - 1), b = static_cast<std::uint32_t>(std::abs(w[1]) - 1);
        const std::int32_t sgn = -(w[0] > 0 ? 1 : -1) * (w[1] > 0 ? 1 : -1);
        if (a < b) std::swap(a, b);
        parent[a] = b;
        sign[a] = sgn;
        changed = true;
      }
    }
  }

  std::vector<std::uint32_t> new_index(n, static_cast<std::uint32_t>(-1));
  Presentation out;
  for (std::uint32_t g = 0; g < n; ++g) {
    const auto [r, s] = find(g);
    if (r == g && !trivial[g]) {
      new_index[g] = static_cast<std::uint32_t>(out.generators.size());
      out.generators.push_back(p.generators[g]);
    }
  }
  if (substitution) {
    substitution->assign(n, Word());
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto [r, s] = find(g);
      if (!trivial[r]) (*substitution)[g] = Word::generator(new_index[r], s);
    }
  }
  std::set<std::vector<std::int32_t>> seen;
  for (const auto& w : rels) {
    const auto rw = rewrite(w);
    if (rw.empty()) continue;
    std::vector<std::int32_t> mapped;
    mapped.reserve(rw.size());
    for (std::int32_t x : rw) {
      mapped.push_back(static_cast<std::int32_t>(new_index[static_cast<std::size_t>(std::abs(x) - 1)] + 1) * (x > 0 ? 1 : -1));
    }
    if (seen.insert(mapped).second) out.relators.push_back(from_steps(mapped));
  }
  return out;
}

}  // namespace wedgelab
