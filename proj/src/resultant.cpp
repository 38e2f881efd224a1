#include "pencilkit/resultant.hpp"

#include <random>

#include "pencilkit/constructions.hpp"
#include "pencilkit/errors.hpp"

namespace pk {

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
  if (p.arity() != q.arity()) throw Error(ErrorKind::ArityMismatch, "resultant: arity mismatch");
  const int arity = p.arity();
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::ZeroInput, "resultant: both inputs zero");
  if (p.is_zero() || q.is_zero()) return MultiPoly(arity);
  const auto a = coefficients_in(p, var);
  const auto b = coefficients_in(q, var);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  const MultiPoly one = MultiPoly::constant(arity, 1);
  const int size = m + n;
  if (size == 0) return one;
  Matrix<MultiPoly> s(size, std::vector<MultiPoly>(size, MultiPoly(arity)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  }
  return bareiss_det(std::move(s), one);
}

namespace {

struct MacaulayLayout {
  std::vector<Exponents> monomials;  // columns, degree D
  std::map<Exponents, std::size_t> index;
  std::vector<int> form_of;          // which form each row multiplies
  std::vector<Exponents> multiplier;
  std::vector<std::size_t> extraneous;  // rows/columns of the minor E
};

std::array<int, 3> degrees_of(const std::array<const MultiPoly*, 3>& forms) {
  std::array<int, 3> d{};
  for (int i = 0; i < 3; ++i) {
    const MultiPoly& f = *forms[i];
    if (f.arity() != 3) throw Error(ErrorKind::ArityMismatch, "macaulay_resultant3 needs ternary forms");
    if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "macaulay_resultant3: zero form");
    if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "macaulay_resultant3: form not homogeneous");
    d[i] = *f.degree();
  }
  return d;
}

MacaulayLayout layout_for(const std::array<int, 3>& d) {
  const int total = d[0] + d[1] + d[2] - 2;
  MacaulayLayout l;
  for (int a = total; a >= 0; --a) {
    for (int b = total - a; b >= 0; --b) l.monomials.push_back({a, b, total - a - b});
  }
  if (l.monomials.size() > kMacaulayMaxSize) {
    throw Error(ErrorKind::DegreeBoundExceeded,
                "macaulay_resultant3: matrix of size " + std::to_string(l.monomials.size()) +
                    " exceeds limit " + std::to_string(kMacaulayMaxSize));
  }
  for (std::size_t i = 0; i < l.monomials.size(); ++i) {
    const Exponents& m = l.monomials[i];
    l.index[m] = i;
    int first = -1;
    int divisible = 0;
    for (int v = 0; v < 3; ++v) {
      if (m[v] >= d[v]) {
        ++divisible;
        if (first < 0) first = v;
      }
    }
    Exponents mult = m;
    mult[first] -= d[first];
    l.form_of.push_back(first);
    l.multiplier.push_back(mult);
    if (divisible >= 2) l.extraneous.push_back(i);
  }
  return l;
}

template <class T, class Entry>
Matrix<T> fill_matrix(const MacaulayLayout& l, const std::array<const MultiPoly*, 3>& forms,
                      const T& zero, Entry entry) {
  const std::size_t n = l.monomials.size();
  Matrix<T> m(n, std::vector<T>(n, zero));
  for (std::size_t r = 0; r < n; ++r) {
    const Exponents& mult = l.multiplier[r];
    for (const auto& [e, c] : forms[l.form_of[r]]->terms()) {
      const Exponents col{e[0] + mult[0], e[1] + mult[1], e[2] + mult[2]};
      entry(m[r][l.index.at(col)], r, c);
    }
  }
  return m;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& idx) {
  Matrix<T> out;
  out.reserve(idx.size());
  for (auto i : idx) {
    std::vector<T> row;
    row.reserve(idx.size());
    for (auto j : idx) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Scalar macaulay_resultant3(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r,
                           const Config& config) {
  const auto d = degrees_of({&p, &q, &r});
  for (int v : d) {
    if (v > config.degree_bound) {
      throw Error(ErrorKind::DegreeBoundExceeded, "macaulay_resultant3: degree exceeds bound");
    }
  }
  const MacaulayLayout l = layout_for(d);
  std::mt19937_64 rng(config.seed);
  std::array<MultiPoly, 3> forms{p, q, r};
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (attempt == 4) {
      // A persistently singular minor usually means a common zero; the
      // degree-D multiples then fail to span all forms of degree D.
      const RationalMatrix full = macaulay_full_matrix(p, q, r);
      if (rank(full) < full.front().size()) return 0;
    }
    if (attempt > 0) {
      const Mat3 change = random_unimodular(rng, 1 + attempt / 8);
      for (int i = 0; i < 3; ++i) forms[i] = linear_change(i == 0 ? p : i == 1 ? q : r, change);
    }
    const auto m = fill_matrix<Scalar>(l, {&forms[0], &forms[1], &forms[2]}, Scalar(0),
                                       [](Scalar& slot, std::size_t, const Scalar& c) { slot += c; });
    const Scalar minor = bareiss_det(submatrix(m, l.extraneous), Scalar(1));
    if (sgn(minor) == 0) continue;
    return bareiss_det(m, Scalar(1)) / minor;
  }
  throw Error(ErrorKind::Precondition, "macaulay_resultant3: extraneous minor stays singular");
}

namespace {

// det(M + s I) / det(E + s I) in Q[l, m, s], homogeneous of degree |M| - |E|.
MultiPoly generalized_char_poly(const LinearFormTriple& forms) {
  for (int i = 0; i < 3; ++i) {
    for (const MultiPoly* f : {&forms.at_l[i], &forms.at_m[i]}) {
      if (f->arity() != 3) throw Error(ErrorKind::ArityMismatch, "macaulay_resultant3 needs ternary forms");
      if (f->is_zero()) continue;
      if (!f->is_homogeneous() || *f->degree() != forms.degrees[i]) {
        throw Error(ErrorKind::DegreeMismatch, "macaulay_resultant3: form of unexpected degree");
      }
    }
    if (forms.degrees[i] < 0) throw Error(ErrorKind::Precondition, "macaulay_resultant3: negative degree");
  }
  const auto& d = forms.degrees;
  const MacaulayLayout l = layout_for(d);
  const std::size_t n = l.monomials.size();

  const MultiPoly zero(3);
  const MultiPoly lam = MultiPoly::variable(3, 0);
  const MultiPoly mu = MultiPoly::variable(3, 1);
  const MultiPoly s = MultiPoly::variable(3, 2);
  Matrix<MultiPoly> m(n, std::vector<MultiPoly>(n, zero));
  for (std::size_t r = 0; r < n; ++r) {
    const Exponents& mult = l.multiplier[r];
    const int f = l.form_of[r];
    for (const auto& [e, c] : forms.at_l[f].terms()) {
      m[r][l.index.at({e[0] + mult[0], e[1] + mult[1], e[2] + mult[2]})] += lam * c;
    }
    for (const auto& [e, c] : forms.at_m[f].terms()) {
      m[r][l.index.at({e[0] + mult[0], e[1] + mult[1], e[2] + mult[2]})] += mu * c;
    }
    m[r][r] += s;
  }
  const MultiPoly one = MultiPoly::constant(3, 1);
  const MultiPoly minor = bareiss_det(submatrix(m, l.extraneous), one);
  return exact_quotient(bareiss_det(std::move(m), one), minor);
}

MultiPoly s_coefficient(const MultiPoly& gcp, int power) {
  MultiPoly out(2);
  for (const auto& [e, c] : gcp.terms()) {
    if (e[2] == power) out.add_term({e[0], e[1], 0}, c);
  }
  return out;
}

}  // namespace

MultiPoly macaulay_resultant3(const LinearFormTriple& forms) {
  return s_coefficient(generalized_char_poly(forms), 0);
}

MultiPoly macaulay_trailing_form(const LinearFormTriple& forms) {
  const MultiPoly gcp = generalized_char_poly(forms);
  int lowest = -1;
  for (const auto& [e, c] : gcp.terms()) {
    if (lowest < 0 || e[2] < lowest) lowest = e[2];
  }
  return s_coefficient(gcp, lowest);
}

RationalMatrix macaulay_full_matrix(const MultiPoly& p, const MultiPoly& q, const MultiPoly& r) {
  const auto d = degrees_of({&p, &q, &r});
  const int total = d[0] + d[1] + d[2] - 2;
  std::vector<Exponents> cols;
  std::map<Exponents, std::size_t> index;
  for (int a = total; a >= 0; --a) {
    for (int b = total - a; b >= 0; --b) {
      index[{a, b, total - a - b}] = cols.size();
      cols.push_back({a, b, total - a - b});
    }
  }
  RationalMatrix out;
  const std::array<const MultiPoly*, 3> forms{&p, &q, &r};
  for (int i = 0; i < 3; ++i) {
    const int md = total - d[i];
    for (int a = md; a >= 0; --a) {
      for (int b = md - a; b >= 0; --b) {
        std::vector<Scalar> row(cols.size(), Scalar(0));
        for (const auto& [e, c] : forms[i]->terms()) {
          row[index.at({e[0] + a, e[1] + b, e[2] + md - a - b})] += c;
        }
        out.push_back(std::move(row));
      }
    }
  }
  return out;
}

}  // namespace pk
