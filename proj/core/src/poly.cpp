#include "repring/poly.hpp"

#include <cctype>
#include <sstream>

namespace repring {
namespace poly {

namespace {

template <class T>
std::string render(const std::vector<T>& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    T c = p[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool unit_coeff = (c == 1) && i > 0;
    if (!unit_coeff) os << repring::to_string(c);
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const std::vector<Rat>& p, const std::string& var) { return render(p, var); }
std::string to_string(const std::vector<Int>& p, const std::string& var) { return render(p, var); }

std::vector<Rat> parse(const std::string& text, const std::string& var) {
  // Tokenize into signed terms: [sign] coeff ['*'] [var ['^' exp]]
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw usage_error("empty polynomial");
  std::vector<Rat> out;
  size_t i = 0;
  auto ensure = [&](size_t e) {
    if (out.size() <= e) out.resize(e + 1, Rat(0));
  };
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw usage_error("dangling sign in polynomial: '" + text + "'");
    std::string num;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) num += s[i++];
    Rat coeff = num.empty() ? Rat(1) : parse_rational(num);
    if (i < s.size() && s[i] == '*') ++i;
    size_t e = 0;
    if (i < s.size() && s.compare(i, var.size(), var) == 0) {
      i += var.size();
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string es;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) es += s[i++];
        if (es.empty()) throw usage_error("missing exponent in polynomial: '" + text + "'");
        e = std::stoul(es);
      }
    } else if (num.empty()) {
      throw usage_error("malformed polynomial term in '" + text + "'");
    }
    ensure(e);
    out[e] += sign * coeff;
  }
  normalize(out);
  return out;
}

}  // namespace poly
}  // namespace repring
