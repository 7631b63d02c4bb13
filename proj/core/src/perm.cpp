#include "hfd/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "hfd/errors.hpp"

namespace hfd {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0)
    throw std::invalid_argument("permutation degree must be at least 1");
  std::iota(images_.begin(), images_.end(), Point{1});
}

Permutation::Permutation(std::vector<Point> images)
    : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0)
    throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<bool> seen(n, false);
  for (Point q : images_) {
    if (q < 1 || q > n)
      throw std::invalid_argument("permutation image out of range");
    if (seen[q - 1])
      throw std::invalid_argument("permutation image repeated; not a bijection");
    seen[q - 1] = true;
  }
}

Point Permutation::preimage(Point p) const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == p)
      return static_cast<Point>(i + 1);
  throw std::invalid_argument("preimage: point out of range");
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1)
      return false;
  return true;
}

Point Permutation::smallest_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1)
      return static_cast<Point>(i + 1);
  return 0;
}

std::size_t Permutation::support_size() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1)
      ++count;
  return count;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i] - 1] = static_cast<Point>(i + 1);
  return Permutation(std::move(inv));
}

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (b != 0 && q > UINT64_MAX / b)
    throw std::overflow_error("element order exceeds 64 bits");
  return q * b;
}

}  // namespace

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = images_[j] - 1;
    }
    result = checked_lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i + 1)
      continue;
    std::vector<Point> cyc;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<Point>(j + 1));
      j = images_[j] - 1;
    }
    result.push_back(std::move(cyc));
  }
  return result;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point q : images_) {
    h ^= q;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  const auto& ia = a.images();
  const auto& ib = b.images();
  std::vector<Point> out(ia.size());
  for (std::size_t i = 0; i < ia.size(); ++i)
    out[i] = ib[ia[i] - 1];
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  const auto& ig = g.images();
  const auto& ih = h.images();
  std::vector<Point> out(ig.size());
  for (std::size_t i = 0; i < ig.size(); ++i)
    out[ih[i] - 1] = ih[ig[i] - 1];
  return Permutation(std::move(out));
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw ParseError("cycle parse: degree must be at least 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size())
    throw ParseError("cycle parse: empty input");

  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '(')
      throw ParseError("cycle parse: expected '('");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw ParseError("cycle parse: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!cyc.empty()) {
        // Separator: a comma, whitespace already skipped, or both.
        if (text[i] == ',') {
          ++i;
          skip_ws();
        }
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (i < text.size() && text[i] == ')' && !cyc.empty())
          throw ParseError("cycle parse: trailing separator in cycle");
        throw ParseError("cycle parse: expected point");
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree)
          throw ParseError("cycle parse: point out of range");
        ++i;
      }
      if (value < 1)
        throw ParseError("cycle parse: point out of range");
      const Point p = static_cast<Point>(value);
      if (used[p - 1])
        throw ParseError("cycle parse: point repeated across cycles");
      used[p - 1] = true;
      cyc.push_back(p);
    }
    any_cycle = true;
    for (std::size_t j = 0; j + 1 < cyc.size(); ++j)
      images[cyc[j] - 1] = cyc[j + 1];
    if (cyc.size() > 1)
      images[cyc.back() - 1] = cyc.front();
  }
  if (!any_cycle)
    throw ParseError("cycle parse: no cycles found");
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  const auto cycs = p.cycles();
  if (cycs.empty())
    return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j)
        out += ',';
      out += std::to_string(cyc[j]);
    }
    out += ')';
  }
  return out;
}

}  // namespace hfd
