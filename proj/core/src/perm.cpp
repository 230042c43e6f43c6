#include "repring/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace repring {

Perm::Perm(size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || static_cast<size_t>(v) >= img_.size() || seen[v])
      throw usage_error("permutation image array is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_cycles(const std::string& text, size_t min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  int max_pt = -1;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') throw usage_error("expected '(' in cycle notation: '" + text + "'");
    ++i;
    std::vector<int> cyc;
    std::string num;
    for (; i < text.size() && text[i] != ')'; ++i) {
      char d = text[i];
      if (std::isdigit(static_cast<unsigned char>(d))) {
        num += d;
      } else if (d == ' ' || d == ',' || d == '\t') {
        if (!num.empty()) {
          cyc.push_back(std::stoi(num));
          num.clear();
        }
      } else {
        throw usage_error("unexpected character in cycle notation: '" + text + "'");
      }
    }
    if (i >= text.size()) throw usage_error("unbalanced '(' in cycle notation: '" + text + "'");
    ++i;  // skip ')'
    if (!num.empty()) cyc.push_back(std::stoi(num));
    for (int p : cyc) max_pt = std::max(max_pt, p);
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  size_t deg = std::max(min_degree, static_cast<size_t>(max_pt + 1));
  std::vector<int> img(deg);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    std::vector<char> seen(deg, 0);
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (seen[from]) throw usage_error("repeated point in cycle: '" + text + "'");
      seen[from] = 1;
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& b) const {
  if (degree() != b.degree()) throw std::logic_error("Perm::compose: degree mismatch");
  std::vector<int> img(degree());
  for (size_t i = 0; i < degree(); ++i) img[i] = img_[b.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (size_t i = 0; i < degree(); ++i) img[img_[i]] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.compose(*this).compose(g.inverse()); }

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

unsigned long Perm::order() const {
  unsigned long ord = 1;
  std::vector<char> seen(degree(), 0);
  for (size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned long len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = lcm(Int(ord), Int(len)).get_ui();
  }
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !seen[j]; j = img_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ")";
  }
  return os.str();
}

Perm Perm::extended(size_t degree) const {
  if (degree < img_.size()) throw std::logic_error("Perm::extended: smaller degree");
  std::vector<int> img(img_);
  for (size_t i = img_.size(); i < degree; ++i) img.push_back(static_cast<int>(i));
  Perm p;
  p.img_ = std::move(img);
  return p;
}

}  // namespace repring
