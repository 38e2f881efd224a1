#include "pencilkit/constructions.hpp"

#include <vector>

#include "pencilkit/errors.hpp"

namespace pk {

MultiPoly jacobian_det3(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r) {
  const std::array<const MultiPoly*, 3> rows{&p, &q, &r};
  std::vector<std::array<MultiPoly, 3>> j;
  for (int i = 0; i < 3; ++i) {
    if (rows[i]->arity() != 3) throw Error(ErrorKind::ArityMismatch, "jacobian_det3 needs ternary forms");
    j.push_back({rows[i]->partial(0), rows[i]->partial(1), rows[i]->partial(2)});
  }
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
         j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

MultiPoly wronskian2(const MultiPoly& g0, const MultiPoly& g1) {
  if (g0.arity() != 2 || g1.arity() != 2) {
    throw Error(ErrorKind::ArityMismatch, "wronskian2 needs binary forms");
  }
  return g0.partial(0) * g1.partial(1) - g0.partial(1) * g1.partial(0);
}

std::array<MultiPoly, 3> minors2x3(const MultiPoly& a, const MultiPoly& b) {
  const std::array<MultiPoly, 3> da{a.partial(0), a.partial(1), a.partial(2)};
  const std::array<MultiPoly, 3> db{b.partial(0), b.partial(1), b.partial(2)};
  return {da[0] * db[1] - da[1] * db[0], da[0] * db[2] - da[2] * db[0],
          da[1] * db[2] - da[2] * db[1]};
}

MultiPoly linear_change(const MultiPoly& p, const Mat3& m) {
  if (p.arity() != 3) throw Error(ErrorKind::ArityMismatch, "linear_change needs a ternary form");
  if (sgn(det3(m)) == 0) throw Error(ErrorKind::SingularMatrix, "linear_change: singular matrix");
  std::array<MultiPoly, 3> images{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      images[i] += MultiPoly::variable(3, j) * m[i][j];
    }
  }
  return p.compose(images);
}

Mat3 random_unimodular(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  Mat3 lower = identity3();
  Mat3 upper = identity3();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < i; ++j) lower[i][j] = dist(rng);
    for (int j = i + 1; j < 3; ++j) upper[i][j] = dist(rng);
  }
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m[i][j] = 0;
      for (int t = 0; t < 3; ++t) m[i][j] += lower[i][t] * upper[t][j];
    }
  }
  return m;
}

MultiPoly homogenize_z(const MultiPoly& p, int degree) {
  MultiPoly h(3);
  for (const auto& [e, c] : p.terms()) {
    const int t = e[0] + e[1];
    if (e[2] != 0 || t > degree) throw Error(ErrorKind::Precondition, "homogenize_z: bad input");
    h.add_term({e[0], e[1], degree - t}, c);
  }
  return h;
}

}  // namespace pk
