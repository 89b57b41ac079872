#include "hookvert/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookvert {

Permutation::Permutation(int degree) : img_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int x : images) {
    if (x < 1 || x > n || seen[x - 1])
      throw std::invalid_argument("images are not a bijection of {1..n}");
    seen[x - 1] = true;
  }
  Permutation s(n);
  s.img_ = std::move(images);
  return s;
}

Permutation Permutation::cycle(std::span<const int> points, int degree) {
  Permutation s(degree);
  if (points.size() < 2) return s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    const int to = points[(i + 1) % points.size()];
    if (from < 1 || from > degree)
      throw std::invalid_argument("cycle point out of range");
    if (s.img_[from - 1] != from)
      throw std::invalid_argument("repeated point in cycle");
    s.img_[from - 1] = to;
  }
  // from_images validates `to` values as a side effect of bijectivity
  return from_images(std::move(s.img_));
}

Permutation Permutation::parse(const std::string& text, int degree) {
  Permutation result(degree);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '('");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t end = i;
      while (end < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[end])))
        ++end;
      if (end == i) throw std::invalid_argument("expected point label");
      cyc.push_back(std::stoi(text.substr(i, end - i)));
      i = end;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    if (cyc.size() == 1)
      throw std::invalid_argument("singleton cycle is not a cycle");
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  // rightmost cycle acts first
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    result = Permutation::cycle(*it, degree) * result;
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& tau) const {
  if (degree() != tau.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> images(img_.size());
  for (int i = 1; i <= degree(); ++i) images[i - 1] = (*this)(tau(i));
  Permutation out(degree());
  out.img_ = std::move(images);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(img_.size());
  for (int i = 1; i <= degree(); ++i) images[(*this)(i)-1] = i;
  Permutation out(degree());
  out.img_ = std::move(images);
  return out;
}

Permutation Permutation::power(long long e) const {
  const int ord = order();
  long long r = e % ord;
  if (r < 0) r += ord;
  Permutation acc(degree());
  Permutation base = *this;
  while (r > 0) {
    if (r & 1) acc = acc * base;
    base = base * base;
    r >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g * (*this) * g.inverse();
}

int Permutation::order() const {
  long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm<long long>(ord, c.size());
  return static_cast<int>(ord);
}

std::vector<int> Permutation::support() const {
  std::vector<int> pts;
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) pts.push_back(i);
  return pts;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1] || (*this)(start) == start) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[x - 1] = true;
      cyc.push_back(x);
      x = (*this)(x);
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  const auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cycs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << c[i] << (i + 1 < c.size() ? "," : "");
    os << ')';
  }
  return os.str();
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

Permutation Permutation::shifted(int offset, int new_degree) const {
  if (offset < 0 || degree() + offset > new_degree)
    throw std::invalid_argument("shift out of range");
  Permutation out(new_degree);
  for (int i = 1; i <= degree(); ++i) out.img_[i + offset - 1] = (*this)(i) + offset;
  return out;
}

Permutation Permutation::extended(int new_degree) const {
  return shifted(0, new_degree);
}

}  // namespace hookvert
