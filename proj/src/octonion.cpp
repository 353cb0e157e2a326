#include "bergman/octonion.hpp"

namespace bergman {

namespace {

struct Entry {
  int sign;
  int index;
};

using Table = std::array<std::array<Entry, 8>, 8>;

constexpr Table make_table() {
  Table t{};
  for (int i = 0; i < 8; ++i) {
    t[0][i] = {1, i};
    t[i][0] = {1, i};
  }
  for (int i = 1; i < 8; ++i) t[i][i] = {-1, 0};
  // Quaternionic triples (i, i+1, i+3) on 1..7.
  for (int i = 0; i < 7; ++i) {
    int a = 1 + i;
    int b = 1 + (i + 1) % 7;
    int c = 1 + (i + 3) % 7;
    t[a][b] = {1, c};
    t[b][a] = {-1, c};
    t[b][c] = {1, a};
    t[c][b] = {-1, a};
    t[c][a] = {1, b};
    t[a][c] = {-1, b};
  }
  return t;
}

constexpr Table kTable = make_table();

} // namespace

OctonionC OctonionC::unit(int i, cplx value) {
  OctonionC o;
  o[i] = value;
  return o;
}

OctonionC OctonionC::cayley_conj() const {
  OctonionC o = *this;
  for (int i = 1; i < dim; ++i) o[i] = -o[i];
  return o;
}

OctonionC OctonionC::bar() const {
  OctonionC o;
  for (int i = 0; i < dim; ++i) o[i] = std::conj(c_[static_cast<std::size_t>(i)]);
  return o;
}

cplx OctonionC::norm() const {
  cplx s{};
  for (const auto& c : c_) s += c * c;
  return s;
}

cplx bilinear(const OctonionC& a, const OctonionC& b) {
  cplx s{};
  for (int i = 0; i < OctonionC::dim; ++i) s += a[i] * b[i];
  return s;
}

cplx hermitian(const OctonionC& a, const OctonionC& b) {
  cplx s{};
  for (int i = 0; i < OctonionC::dim; ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double OctonionC::coord_norm2() const {
  double s = 0.0;
  for (const auto& c : c_) s += std::norm(c);
  return s;
}

OctonionC& OctonionC::operator+=(const OctonionC& o) {
  for (int i = 0; i < dim; ++i) c_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

OctonionC& OctonionC::operator-=(const OctonionC& o) {
  for (int i = 0; i < dim; ++i) c_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

OctonionC& OctonionC::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

OctonionC operator*(const OctonionC& a, const OctonionC& b) {
  OctonionC out;
  for (int i = 0; i < 8; ++i) {
    if (a[i] == cplx{}) continue;
    for (int j = 0; j < 8; ++j) {
      const Entry& e = kTable[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out[e.index] += static_cast<double>(e.sign) * a[i] * b[j];
    }
  }
  return out;
}

OctonionC OctonionC::cycle_units(int shift) const {
  OctonionC o;
  o[0] = c_[0];
  int s = ((shift % 7) + 7) % 7;
  for (int i = 1; i < dim; ++i) o[1 + (i - 1 + s) % 7] = c_[static_cast<std::size_t>(i)];
  return o;
}

} // namespace bergman
