#include "ttp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "ttp/errors.hpp"

namespace ttp {
namespace {

// Tokenizer that tracks 1-based line/column for parse diagnostics and skips
// '#' comment lines.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  struct Token {
    std::string text;
    int line;
    int col;
  };

  bool next(Token& tok) {
    while (true) {
      if (pos_ >= line_.size()) {
        if (!std::getline(in_, line_)) return false;
        ++line_no_;
        pos_ = 0;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(line_[pos_]))) {
        ++pos_;
        continue;
      }
      if (line_[pos_] == '#') {  // comment to end of line
        pos_ = line_.size();
        continue;
      }
      size_t start = pos_;
      while (pos_ < line_.size() &&
             !std::isspace(static_cast<unsigned char>(line_[pos_])))
        ++pos_;
      tok = {line_.substr(start, pos_ - start), line_no_,
             static_cast<int>(start) + 1};
      return true;
    }
  }

  Token require(const char* what) {
    Token tok;
    if (!next(tok))
      throw ParseError(std::string("unexpected end of input, expected ") + what,
                       line_no_, static_cast<int>(pos_) + 1);
    return tok;
  }

  int line_no() const { return line_no_; }

  void skip_rest_of_line() { pos_ = line_.size(); }

 private:
  std::istream& in_;
  std::string line_;
  size_t pos_ = 0;
  int line_no_ = 0;
};

Rat parse_number(const Tokenizer::Token& tok) {
  try {
    return Rat::parse(tok.text);
  } catch (const Error&) {
    throw ParseError("expected a number, got '" + tok.text + "'", tok.line,
                     tok.col);
  }
}

std::vector<Rat> read_full_matrix(Tokenizer& tz, int n) {
  std::vector<Rat> d;
  d.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) d.push_back(parse_number(tz.require("matrix entry")));
  return d;
}

long long isqrt(long long v) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

DistanceMatrix DistanceMatrix::from_entries(int n, std::vector<Rat> entries) {
  if (n < 4 || n % 2 != 0)
    throw DomainError("team count must be an even integer >= 4, got " +
                      std::to_string(n));
  if (entries.size() != static_cast<size_t>(n) * n)
    throw DomainError("distance matrix must have n*n entries");
  auto at = [&](int i, int j) -> const Rat& { return entries[i * n + j]; };

  for (int i = 0; i < n; ++i)
    if (!at(i, i).is_zero())
      throw MetricError("nonzero diagonal at (" + std::to_string(i + 1) + "," +
                        std::to_string(i + 1) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) < Rat(0))
        throw MetricError("negative distance at (" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i))
        throw MetricError("symmetry violated at (" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + "): d(i,j)=" +
                          at(i, j).str() + " but d(j,i)=" + at(j, i).str());
  // Lexicographically smallest violating triple (i,j,h), checked as
  // d(i,h) <= d(i,j) + d(j,h).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int h = 0; h < n; ++h) {
        if (h == i || h == j) continue;
        if (at(i, h) > at(i, j) + at(j, h))
          throw MetricError(
              "triangle inequality violated at (" + std::to_string(i + 1) +
              "," + std::to_string(j + 1) + "," + std::to_string(h + 1) +
              "): d(i,h)=" + at(i, h).str() + " > d(i,j)+d(j,h)=" +
              (at(i, j) + at(j, h)).str());
      }
    }

  DistanceMatrix m;
  m.n_ = n;
  m.d_ = std::move(entries);
  return m;
}

DistanceMatrix load_instance(std::istream& in, InstanceFormat format) {
  Tokenizer tz(in);
  if (format == InstanceFormat::plain) {
    auto tok = tz.require("team count");
    Rat nval = parse_number(tok);
    if (!nval.is_integer() || nval.num() < 1 || nval.num() > 4096)
      throw ParseError("team count must be a small positive integer", tok.line,
                       tok.col);
    int n = static_cast<int>(nval.num());
    auto d = read_full_matrix(tz, n);
    return DistanceMatrix::from_entries(n, std::move(d));
  }

  // TSPLIB, EXPLICIT/FULL_MATRIX subset only.
  int dimension = -1;
  bool explicit_type = false, full_matrix = false;
  while (true) {
    auto tok = tz.require("TSPLIB keyword");
    std::string key = tok.text;
    while (!key.empty() && key.back() == ':') key.pop_back();
    if (key == "EDGE_WEIGHT_SECTION") break;
    if (key == "EOF")
      throw ParseError("EOF before EDGE_WEIGHT_SECTION", tok.line, tok.col);
    auto value_of = [&]() {
      auto v = tz.require("keyword value");
      if (v.text == ":") v = tz.require("keyword value");
      return v;
    };
    if (key == "DIMENSION") {
      auto v = value_of();
      Rat nval = parse_number(v);
      if (!nval.is_integer() || nval.num() < 1)
        throw ParseError("bad DIMENSION", v.line, v.col);
      dimension = static_cast<int>(nval.num());
    } else if (key == "EDGE_WEIGHT_TYPE") {
      auto v = value_of();
      if (v.text != "EXPLICIT")
        throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + v.text +
                             "'; only EXPLICIT full matrices are accepted",
                         v.line, v.col);
      explicit_type = true;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      auto v = value_of();
      if (v.text != "FULL_MATRIX")
        throw ParseError("unsupported EDGE_WEIGHT_FORMAT '" + v.text +
                             "'; only FULL_MATRIX is accepted",
                         v.line, v.col);
      full_matrix = true;
    } else {
      // NAME, COMMENT, TYPE and anything else we do not interpret: the value
      // runs to the end of the line and may contain spaces.
      tz.skip_rest_of_line();
    }
  }
  if (!explicit_type)
    throw DomainError("TSPLIB input missing EDGE_WEIGHT_TYPE: EXPLICIT");
  if (!full_matrix)
    throw DomainError("TSPLIB input missing EDGE_WEIGHT_FORMAT: FULL_MATRIX");
  if (dimension < 0) throw DomainError("TSPLIB input missing DIMENSION");
  auto d = read_full_matrix(tz, dimension);
  return DistanceMatrix::from_entries(dimension, std::move(d));
}

void save_instance(const DistanceMatrix& m, std::ostream& out) {
  int n = m.size();
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << m(i, j).str();
    }
    out << "\n";
  }
}

DistanceMatrix generate_instance(InstanceKind kind, int n,
                                 unsigned long long seed) {
  if (n < 4 || n % 2 != 0)
    throw DomainError("team count must be an even integer >= 4, got " +
                      std::to_string(n));
  std::vector<Rat> d(static_cast<size_t>(n) * n, Rat(0));
  auto set = [&](int i, int j, Rat v) {
    d[i * n + j] = v;
    d[j * n + i] = v;
  };
  switch (kind) {
    case InstanceKind::unit:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) set(i, j, Rat(1));
      break;
    case InstanceKind::circle:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          set(i, j, Rat(std::min(j - i, n - (j - i))));
      break;
    case InstanceKind::euclidean_random: {
      std::mt19937_64 rng(seed);
      constexpr long long grid = 1000;
      std::vector<long long> x(n), y(n);
      for (int i = 0; i < n; ++i) {
        x[i] = static_cast<long long>(rng() % (grid + 1));
        y[i] = static_cast<long long>(rng() % (grid + 1));
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          long long dx = x[i] - x[j], dy = y[i] - y[j];
          long long sq = dx * dx + dy * dy;
          long long r = isqrt(sq);
          if (r * r < sq) ++r;  // ceil: rounding up preserves the triangle inequality
          set(i, j, Rat(r));
        }
      break;
    }
  }
  return DistanceMatrix::from_entries(n, std::move(d));
}

std::vector<long long> scale_to_integers(const DistanceMatrix& m,
                                         long long& scale) {
  int n = m.size();
  long long lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long den = m(i, j).den();
      long long g = std::gcd(lcm, den);
      __int128 l = static_cast<__int128>(lcm) / g * den;
      if (l > (1LL << 40))
        throw DomainError(
            "distance denominators too heterogeneous for exact integer "
            "scaling");
      lcm = static_cast<long long>(l);
    }
  std::vector<long long> w(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      __int128 v = static_cast<__int128>(m(i, j).num()) * (lcm / m(i, j).den());
      if (v > (1LL << 44)) throw DomainError("scaled distances overflow");
      w[i * n + j] = static_cast<long long>(v);
    }
  scale = lcm;
  return w;
}

InstanceStats instance_stats(const DistanceMatrix& m) {
  int n = m.size();
  InstanceStats st;
  st.s.assign(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) st.s[i] += m(i, j);
  st.delta = Rat(0);
  for (const Rat& v : st.s) st.delta += v;
  return st;
}

}  // namespace ttp
