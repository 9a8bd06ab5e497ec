#include "modrep/permutation.hpp"

#include <cctype>
#include <sstream>

#include "modrep/error.hpp"

namespace modrep {

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) fail(Errc::InvalidGroupMap, "image list is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<std::uint16_t>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::parse(std::string_view text, unsigned degree) {
  if (degree > 65535) fail(Errc::GroupTooLarge, "permutation degree above 65535");
  Perm result = identity(degree);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) fail(Errc::InvalidGroupMap, "empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::InvalidGroupMap, "expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      skip();
      if (i == text.size()) fail(Errc::InvalidGroupMap, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(Errc::InvalidGroupMap, "bad character in cycle");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > degree) fail(Errc::InvalidGroupMap, "point out of range in cycle");
        ++i;
      }
      if (v == 0) fail(Errc::InvalidGroupMap, "points are numbered from 1");
      cycle.push_back(static_cast<unsigned>(v - 1));
    }
    std::vector<std::uint16_t> c = identity(degree).img_;
    std::vector<bool> used(degree, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (used[cycle[k]]) fail(Errc::InvalidGroupMap, "repeated point in cycle");
      used[cycle[k]] = true;
      c[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    }
    Perm cp;
    cp.img_ = std::move(c);
    // cycles written left to right compose right to left
    result = result * cp;
    skip();
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm operator*(const Perm& g, const Perm& h) {
  if (g.img_.size() != h.img_.size()) fail(Errc::GroupMismatch, "permutations of different degree");
  Perm r;
  r.img_.resize(g.img_.size());
  for (std::size_t i = 0; i < g.img_.size(); ++i) r.img_[i] = g.img_[h.img_[i]];
  return r;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s] || img_[s] == s) continue;
    os << '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      os << (first ? "" : " ") << x + 1;
      first = false;
      x = img_[x];
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace modrep
