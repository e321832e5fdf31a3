#include "sigmaforge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint8_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw DomainError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<std::uint8_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if ((*this)[i] != i) return false;
  return true;
}

long Perm::order() const {
  long ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    long len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = (*this)[j]) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw DomainError("composing permutations of different degrees");
  std::vector<std::uint8_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = rhs.img_[img_[i]];
  Perm out;
  out.img_ = std::move(img);  // bypass revalidation, inputs were bijections
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    img[img_[i]] = static_cast<std::uint8_t>(i);
  Perm out;
  out.img_ = std::move(img);
  return out;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || (*this)[i] == i) continue;
    any = true;
    os << '(';
    bool first = true;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = (*this)[j]) {
      seen[static_cast<size_t>(j)] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm Perm::parse_cycles(const std::string& text, int degree, int line) {
  if (degree < 1 || degree > 255)
    throw ParseError("degree must be between 1 and 255", line, 0);
  std::vector<std::uint8_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> moved(static_cast<size_t>(degree), false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, line, static_cast<int>(i) + 1);
  };

  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected point index");
      int pt = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        pt = pt * 10 + (text[i] - '0');
        if (pt > 255) throw fail("point index out of range");
        ++i;
      }
      if (pt >= degree) throw fail("point index exceeds degree");
      if (moved[static_cast<size_t>(pt)]) throw fail("point repeated in cycles");
      moved[static_cast<size_t>(pt)] = true;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw fail("unterminated cycle");
    ++i;  // ')'
    saw_cycle = true;
    if (cycle.size() == 1) throw fail("singleton cycle is not allowed");
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      img[static_cast<size_t>(from)] = static_cast<std::uint8_t>(to);
    }
    skip_ws();
  }
  if (!saw_cycle) throw fail("expected at least '()'");
  return Perm(std::move(img));
}

}  // namespace sigmaforge
