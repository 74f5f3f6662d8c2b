#include "tworoots/tworoots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tworoots {

IntMatrix vee(const Root& a, const Root& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vee: dimension mismatch");
  const std::size_t n = a.size();
  IntMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = checked::add(checked::mul(a[i], b[j]), checked::mul(b[i], a[j]));
  return s;
}

QMatrix to_rational(const IntMatrix& s) { return QMatrix(s); }

Int m_functional(const IntMatrix& cartan, const IntMatrix& s) {
  __int128 acc = 0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) acc += static_cast<__int128>(cartan(i, j)) * s(j, i);
  return checked::narrow(acc);
}

Rational m_functional(const IntMatrix& cartan, const QMatrix& s) {
  Rational acc = 0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (cartan(i, j) != 0) acc += static_cast<long>(cartan(i, j)) * s(j, i);
  return acc;
}

QVector standard_coords(const QMatrix& s) {
  const std::size_t n = s.rows();
  QVector v;
  v.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v.push_back(s(i, j));
  for (std::size_t i = 0; i < n; ++i) v.push_back(s(i, i) / 2);
  return v;
}

bool is_nonnegative(const IntMatrix& s) {
  return std::all_of(s.data().begin(), s.data().end(), [](Int x) { return x >= 0; });
}

IntMatrix positive_normal(const IntMatrix& s) {
  if (is_nonnegative(s)) return s;
  IntMatrix neg = Int{-1} * s;
  return is_nonnegative(neg) ? neg : s;
}

IntMatrix reflect_tworoot(const IntMatrix& cartan, const Root& gamma, const IntMatrix& s) {
  if (norm(cartan, gamma) != 2) throw std::invalid_argument("reflect_tworoot: not a real root");
  const std::size_t n = s.rows();
  const IntVector h = cartan * std::span<const Int>(gamma);  // R = I - gamma h^T
  const IntVector u = s * std::span<const Int>(h);
  const Int c = dot(h, u);
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      __int128 x = s(i, j);
      x -= static_cast<__int128>(gamma[i]) * u[j] + static_cast<__int128>(u[i]) * gamma[j];
      x += static_cast<__int128>(c) * gamma[i] * gamma[j];
      out(i, j) = checked::narrow(x);
    }
  return out;
}

IntMatrix reflect_tworoot_simple(const IntMatrix& cartan, Vertex i, const IntMatrix& s) {
  // Only row and column i change.
  const std::size_t n = s.rows();
  IntVector u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = dot(cartan.row(i), s.row(j));
  const Int c = dot(cartan.row(i), u);
  IntMatrix out = s;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    out(i, j) = checked::sub(s(i, j), u[j]);
    out(j, i) = out(i, j);
  }
  out(i, i) = checked::add(checked::sub(s(i, i), checked::mul(2, u[i])), c);
  return out;
}

QMatrix reflect_tworoot_simple(const IntMatrix& cartan, Vertex i, const QMatrix& s) {
  const std::size_t n = s.rows();
  QVector u(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (cartan(i, k) != 0) u[j] += static_cast<long>(cartan(i, k)) * s(j, k);
  Rational c = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (cartan(i, k) != 0) c += static_cast<long>(cartan(i, k)) * u[k];
  QMatrix out = s;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    out(i, j) = s(i, j) - u[j];
    out(j, i) = out(i, j);
  }
  out(i, i) = s(i, i) - 2 * u[i] + c;
  return out;
}

IntMatrix apply_word(const IntMatrix& cartan, const Word& w, const IntMatrix& s) {
  IntMatrix out = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_tworoot_simple(cartan, *it, out);
  return out;
}

Root apply_word(const IntMatrix& cartan, const Word& w, const Root& r) {
  Root out = r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_simple(cartan, *it, out);
  return out;
}

bool root_less(const Root& x, const Root& y) {
  const Int hx = height(x), hy = height(y);
  if (hx != hy) return hx < hy;
  return x > y;
}

std::pair<Root, Root> components(const IntMatrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("components: matrix is not symmetric");
  const std::size_t n = s.rows();
  const QMatrix q(s);
  const auto ech = linalg::rref(q);
  if (ech.pivots.size() != 2) throw std::invalid_argument("components: element does not have rank 2");
  const std::size_t p0 = ech.pivots[0], p1 = ech.pivots[1];

  // s = U C U^T with U the pivot columns and C the inverse of the pivot block.
  QMatrix block(2, 2);
  block(0, 0) = q(p0, p0);
  block(0, 1) = q(p0, p1);
  block(1, 0) = q(p1, p0);
  block(1, 1) = q(p1, p1);
  const auto cinv = linalg::inverse(block);
  if (!cinv) throw std::logic_error("components: singular pivot block");
  const Rational p = (*cinv)(0, 0), m = (*cinv)(0, 1), r = (*cinv)(1, 1);

  // Factor p y1^2 + 2 m y1 y2 + r y2^2 = 2 (u.y)(v.y).
  const Rational disc = m * m - p * r;
  if (sgn(disc) <= 0 || !mpz_perfect_square_p(disc.get_num_mpz_t()) || !mpz_perfect_square_p(disc.get_den_mpz_t()))
    throw std::invalid_argument("components: element is not a product of two rational vectors");
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), disc.get_num_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), disc.get_den_mpz_t());
  const Rational root_disc(sn, sd);
  Rational u0, u1, v0, v1;
  if (sgn(p) != 0) {
    u0 = 1;
    u1 = (m + root_disc) / p;
    v0 = p / 2;
    v1 = (p / 2) * ((m - root_disc) / p);
  } else {
    u0 = 0;
    u1 = 1;
    v0 = m;
    v1 = r / 2;
  }
  QVector a(n), b(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = u0 * q(k, p0) + u1 * q(k, p1);
    b[k] = v0 * q(k, p0) + v1 * q(k, p1);
  }
  // Rescale so that a is primitive integral.
  const IntVector ai = linalg::primitive_integer(a);
  std::size_t lead = 0;
  while (ai[lead] == 0) ++lead;
  const Rational scale = a[lead] / static_cast<long>(ai[lead]);
  Root ra = ai, rb(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational x = b[k] * scale;
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
      throw std::invalid_argument("components: no integral decomposition");
    rb[k] = x.get_num().get_si();
  }
  if (vee(ra, rb) != s) throw std::logic_error("components: decomposition failed to reproduce the element");
  const bool a_neg = is_negative(ra), b_neg = is_negative(rb);
  if ((a_neg && b_neg) || (a_neg && !is_positive(rb))) {
    ra = negate(ra);
    rb = negate(rb);
  }
  if (is_positive(ra) == is_positive(rb) && root_less(rb, ra)) std::swap(ra, rb);
  return {ra, rb};
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Mixed: return "mixed";
  }
  return "?";
}

Sign coherence_sign(const IntVector& v) {
  bool pos = false, neg = false;
  for (Int x : v) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos && neg) return Sign::Mixed;
  return pos ? Sign::Positive : neg ? Sign::Negative : Sign::Zero;
}

Sign coherence_sign(const QVector& v) {
  bool pos = false, neg = false;
  for (const auto& x : v) {
    pos |= sgn(x) > 0;
    neg |= sgn(x) < 0;
  }
  if (pos && neg) return Sign::Mixed;
  return pos ? Sign::Positive : neg ? Sign::Negative : Sign::Zero;
}

CanonicalBasis CanonicalBasis::build(const Diagram& d) {
  CanonicalBasis cb;
  cb.d_ = d;
  cb.cartan_ = d.cartan();
  const std::size_t n = d.n();
  for (Vertex i = 0; i < n; ++i) {
    const Root ai = simple_root(n, i);
    for (auto& e : elementary_roots(d, i)) {
      IntMatrix s = vee(ai, e.root);
      if (cb.index_.count(s.data())) continue;
      cb.index_.emplace(s.data(), cb.elems_.size());
      cb.elems_.push_back({i, std::move(e), std::move(s)});
    }
  }

  const std::size_t dim = n * (n + 1) / 2;
  const std::size_t nb = cb.elems_.size();
  for (const auto& e : cb.elems_)
    if (m_functional(cb.cartan_, e.s) != 0) throw std::logic_error("basis element outside the kernel of the functional");
  cb.spans_m_ = nb + 1 == dim;

  // Standard-coordinate matrix, one column per element.
  std::vector<std::pair<Vertex, Vertex>> rows;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) rows.emplace_back(i, j);
  for (Vertex i = 0; i < n; ++i) rows.emplace_back(i, i);
  QMatrix m(dim, nb);
  for (std::size_t c = 0; c < nb; ++c) {
    const QVector v = standard_coords(QMatrix(cb.elems_[c].s));
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = v[r];
  }
  const auto ech = linalg::rref(m.transpose());
  if (ech.pivots.size() != nb) throw std::logic_error("canonical basis elements are linearly dependent");
  QMatrix square(nb, nb);
  for (std::size_t r = 0; r < nb; ++r) {
    cb.pivot_rows_.push_back(rows[ech.pivots[r]]);
    for (std::size_t c = 0; c < nb; ++c) square(r, c) = m(ech.pivots[r], c);
  }
  cb.qinv_ = *linalg::inverse(square);
  mpz_class den = 1;
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), cb.qinv_(r, c).get_den_mpz_t());
  if (!den.fits_slong_p()) throw std::overflow_error("solver denominator exceeds 64 bits");
  cb.den_ = den.get_si();
  cb.inv_ = IntMatrix(nb, nb);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) {
      const Rational x = cb.qinv_(r, c) * den;
      if (!x.get_num().fits_slong_p()) throw std::overflow_error("solver entry exceeds 64 bits");
      cb.inv_(r, c) = x.get_num().get_si();
    }
  return cb;
}

std::optional<std::size_t> CanonicalBasis::index_of(const IntMatrix& s) const {
  auto it = index_.find(s.data());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntVector CanonicalBasis::expand(const IntMatrix& s) const {
  if (s.rows() != d_.n() || !s.is_symmetric()) throw std::invalid_argument("expand: not a symmetric matrix of the right size");
  if (m_functional(cartan_, s) != 0) throw std::domain_error("expand: element lies outside the kernel of the functional");
  const std::size_t nb = elems_.size();
  // Work with doubled standard coordinates to stay integral.
  IntVector v2(nb);
  for (std::size_t r = 0; r < nb; ++r) {
    const auto [i, j] = pivot_rows_[r];
    v2[r] = i == j ? s(i, i) : checked::mul(2, s(i, j));
  }
  const __int128 total = static_cast<__int128>(den_) * 2;
  IntVector out(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    __int128 acc = 0;
    const auto row = inv_.row(k);
    for (std::size_t r = 0; r < nb; ++r) acc += static_cast<__int128>(row[r]) * v2[r];
    if (acc % total != 0) throw std::domain_error("expand: coordinates are not integral");
    out[k] = checked::narrow(acc / total);
  }
  if (!spans_m_ && combine(out) != s) throw std::domain_error("expand: element is outside the span of the basis");
  return out;
}

QVector CanonicalBasis::expand_q(const QMatrix& s) const {
  if (s.rows() != d_.n()) throw std::invalid_argument("expand: wrong size");
  if (sgn(m_functional(cartan_, s)) != 0) throw std::domain_error("expand: element lies outside the kernel of the functional");
  const std::size_t nb = elems_.size();
  QVector v(nb);
  for (std::size_t r = 0; r < nb; ++r) {
    const auto [i, j] = pivot_rows_[r];
    v[r] = i == j ? Rational(s(i, i) / 2) : s(i, j);
  }
  QVector out = qinv_ * v;
  if (!spans_m_) {
    QMatrix back(s.rows(), s.cols());
    for (std::size_t k = 0; k < nb; ++k)
      for (std::size_t x = 0; x < s.rows(); ++x)
        for (std::size_t y = 0; y < s.cols(); ++y)
          if (elems_[k].s(x, y) != 0) back(x, y) += out[k] * static_cast<long>(elems_[k].s(x, y));
    if (!(back == s)) throw std::domain_error("expand: element is outside the span of the basis");
  }
  return out;
}

IntMatrix CanonicalBasis::combine(const IntVector& coords) const {
  if (coords.size() != elems_.size()) throw std::invalid_argument("combine: wrong coordinate count");
  const std::size_t n = d_.n();
  IntMatrix out(n, n);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t x = 0; x < n * n; ++x)
      out.data()[x] = checked::add(out.data()[x], checked::mul(coords[k], elems_[k].s.data()[x]));
  }
  return out;
}

std::vector<std::size_t> CanonicalBasis::star_set(Vertex i) const {
  std::vector<std::size_t> out;
  const Root ai = simple_root(d_.n(), i);
  for (const auto& e : elementary_roots(d_, i)) out.push_back(*index_of(vee(ai, e.root)));
  return out;
}

std::string CanonicalBasis::label(std::size_t k, const std::vector<std::string>& names) const {
  auto name = [&](Vertex v) { return names.empty() ? std::to_string(v) : names.at(v); };
  const auto& e = elems_.at(k);
  std::string beta;
  switch (e.beta.kind) {
    case 1: {
      Vertex j = 0;
      while (e.beta.root[j] == 0) ++j;
      beta = "a" + name(j);
      break;
    }
    case 2: {
      std::vector<Vertex> ends;
      for (Vertex v : d_.neighbors(e.i))
        if (e.beta.root[v] != 0) ends.push_back(v);
      beta = "eta" + name(ends[0]) + "," + name(ends[1]);
      break;
    }
    default: beta = "theta" + name(e.i);
  }
  return "a" + name(e.i) + " v " + beta;
}

Int ht2(const CanonicalBasis& basis, const IntMatrix& s) {
  Int h = 0;
  for (Int x : basis.expand(s)) h = checked::add(h, x);
  return h;
}

bool leq2(const CanonicalBasis& basis, const IntMatrix& t1, const IntMatrix& t2) {
  const IntVector c = basis.expand(t2 - t1);
  return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
}

std::string to_string(SimpleAction::Kind k) {
  switch (k) {
    case SimpleAction::Kind::Fix: return "fix";
    case SimpleAction::Kind::Negate: return "negate";
    case SimpleAction::Kind::Add: return "add";
  }
  return "?";
}

SimpleAction simple_action_on_basis(const CanonicalBasis& basis, Vertex gamma, std::size_t b) {
  if (b >= basis.size()) throw std::out_of_range("simple_action_on_basis: not a basis index");
  const IntMatrix& s = basis[b].s;
  const IntMatrix img = reflect_tworoot_simple(basis.cartan(), gamma, s);
  if (img == s) return {SimpleAction::Kind::Fix, 0};
  if (img == Int{-1} * s) return {SimpleAction::Kind::Negate, 0};
  const auto k = basis.index_of(img - s);
  if (!k) throw std::logic_error("simple reflection sends a basis element outside the three expected cases");
  return {SimpleAction::Kind::Add, *k};
}

IntMatrix word_matrix(const CanonicalBasis& basis, const Word& w) {
  const std::size_t nb = basis.size();
  const std::size_t n = basis.diagram().n();
  for (Vertex v : w)
    if (v >= n) throw std::out_of_range("word letter out of range");
  IntMatrix out(nb, nb);
  for (std::size_t j = 0; j < nb; ++j) {
    const auto& e = basis[j];
    const Root a = apply_word(basis.cartan(), w, simple_root(n, e.i));
    const Root b = apply_word(basis.cartan(), w, e.beta.root);
    const IntVector c = basis.expand(vee(a, b));
    for (std::size_t r = 0; r < nb; ++r) out(r, j) = c[r];
  }
  return out;
}

std::vector<IntMatrix> generator_matrices(const CanonicalBasis& basis) {
  std::vector<IntMatrix> out;
  for (Vertex i = 0; i < basis.diagram().n(); ++i) out.push_back(word_matrix(basis, {i}));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> star_bijection(const CanonicalBasis& basis, Vertex i, Vertex j) {
  if (!basis.diagram().adjacent(i, j)) throw std::invalid_argument("star_bijection: vertices are not adjacent");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k : basis.star_set(i)) {
    const IntMatrix img = apply_word(basis.cartan(), {i, j}, basis[k].s);
    const auto t = basis.index_of(img);
    if (!t) throw std::logic_error("star_bijection: image is not a basis element");
    out.emplace_back(k, *t);
  }
  return out;
}

Word parse_word(const std::string& text, std::size_t n) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("bad word letter '" + tok + "'");
    w.push_back(static_cast<Vertex>(v));
  }
  return w;
}

}  // namespace tworoots
