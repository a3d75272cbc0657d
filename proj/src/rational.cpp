#include "ttp/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace ttp {

std::string Rat::decimal(int digits) const {
  bool neg = num_ < 0;
  unsigned long long n = neg ? -(unsigned long long)num_ : (unsigned long long)num_;
  unsigned long long d = den_;
  unsigned long long ip = n / d;
  unsigned long long rem = n % d;
  std::string frac;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    frac += char('0' + rem / d);
    rem %= d;
  }
  // round half away from zero on the remaining remainder
  if (2 * rem >= d) {
    int i = digits - 1;
    for (; i >= 0; --i) {
      if (frac[i] != '9') {
        ++frac[i];
        break;
      }
      frac[i] = '0';
    }
    if (i < 0) ++ip;
  }
  std::string out = (neg && (ip || frac.find_first_not_of('0') != std::string::npos))
                        ? "-"
                        : "";
  out += std::to_string(ip);
  if (digits > 0) out += "." + frac;
  return out;
}

Rat Rat::parse(const std::string& token) {
  if (token.empty()) throw DomainError("empty numeric token");
  auto bad = [&] { throw DomainError("cannot parse number '" + token + "'"); };

  size_t slash = token.find('/');
  if (slash != std::string::npos) {
    size_t pos1 = 0, pos2 = 0;
    long long n = 0, d = 0;
    try {
      n = std::stoll(token.substr(0, slash), &pos1);
      d = std::stoll(token.substr(slash + 1), &pos2);
    } catch (const std::exception&) {
      bad();
    }
    if (pos1 != slash || pos2 != token.size() - slash - 1) bad();
    return Rat(n, d);
  }

  size_t dot = token.find('.');
  std::string digits = token;
  long long den = 1;
  if (dot != std::string::npos) {
    std::string frac = token.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) bad();
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
      den *= 10;
    }
    digits = token.substr(0, dot) + frac;
  }
  if (digits.empty() || digits == "-" || digits == "+") bad();
  size_t pos = 0;
  long long n = 0;
  try {
    n = std::stoll(digits, &pos);
  } catch (const std::exception&) {
    bad();
  }
  if (pos != digits.size()) bad();
  return Rat(n, den);
}

}  // namespace ttp
