#include "descentlab/ncsf.hpp"

#include <algorithm>
#include <stdexcept>

#include "descentlab/qcalc.hpp"

namespace descentlab {

namespace {

void check_degree(int d, unsigned trunc_degree) {
  if (d < 0 || static_cast<unsigned>(d) > trunc_degree) {
    throw std::invalid_argument("degree " + std::to_string(d) + " exceeds truncation degree " +
                                std::to_string(trunc_degree));
  }
}

void accumulate(CompositionMap& m, const Composition& L, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(L, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

NcsfElement::NcsfElement(unsigned trunc_degree) : graded_(trunc_degree + 1) {}

NcsfElement NcsfElement::scalar(const RationalFunction& c, unsigned trunc_degree) {
  NcsfElement e(trunc_degree);
  e.add_term(Composition(), c);
  return e;
}

RationalFunction NcsfElement::coefficient(const Composition& L) const {
  if (static_cast<unsigned>(L.size()) > trunc_degree()) return {};
  const auto& m = graded_[static_cast<std::size_t>(L.size())];
  auto it = m.find(L);
  return it == m.end() ? RationalFunction() : it->second;
}

void NcsfElement::add_term(const Composition& L, const RationalFunction& c) {
  check_degree(L.size(), trunc_degree());
  accumulate(graded_[static_cast<std::size_t>(L.size())], L, c);
}

NcsfElement NcsfElement::operator-() const {
  NcsfElement r = *this;
  for (auto& m : r.graded_) {
    for (auto& [L, c] : m) c = -c;
  }
  return r;
}

NcsfElement& NcsfElement::operator+=(const NcsfElement& o) {
  if (o.trunc_degree() < trunc_degree()) graded_.resize(o.graded_.size());
  for (std::size_t d = 0; d < graded_.size(); ++d) {
    for (const auto& [L, c] : o.graded_[d]) accumulate(graded_[d], L, c);
  }
  return *this;
}

NcsfElement& NcsfElement::operator-=(const NcsfElement& o) { return *this += -o; }

NcsfElement operator*(const NcsfElement& a, const NcsfElement& b) {
  unsigned n = std::min(a.trunc_degree(), b.trunc_degree());
  NcsfElement r(n);
  for (unsigned i = 0; i <= n; ++i) {
    for (const auto& [K, c] : a.graded_[i]) {
      for (unsigned j = 0; i + j <= n; ++j) {
        for (const auto& [L, d] : b.graded_[j]) accumulate(r.graded_[i + j], concat(K, L), c * d);
      }
    }
  }
  return r;
}

NcsfElement operator*(const RationalFunction& c, const NcsfElement& a) {
  NcsfElement r(a.trunc_degree());
  if (c.is_zero()) return r;
  for (std::size_t d = 0; d < a.graded_.size(); ++d) {
    for (const auto& [L, v] : a.graded_[d]) accumulate(r.graded_[d], L, c * v);
  }
  return r;
}

NcsfElement NcsfElement::scale_grading(const RationalFunction& c) const {
  NcsfElement r(trunc_degree());
  RationalFunction p(1);
  for (std::size_t d = 0; d < graded_.size(); ++d) {
    if (d > 0) p *= c;
    for (const auto& [L, v] : graded_[d]) accumulate(r.graded_[d], L, p * v);
  }
  return r;
}

bool operator==(const NcsfElement& a, const NcsfElement& b) {
  if (a.graded_.size() != b.graded_.size()) return false;
  for (std::size_t d = 0; d < a.graded_.size(); ++d) {
    const auto& x = a.graded_[d];
    const auto& y = b.graded_[d];
    if (x.size() != y.size()) return false;
    for (auto it = x.begin(), jt = y.begin(); it != x.end(); ++it, ++jt) {
      if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
    }
  }
  return true;
}

NcsfElement h_elem(const Composition& L, unsigned trunc_degree) {
  NcsfElement e(trunc_degree);
  e.add_term(L, RationalFunction(1));
  return e;
}

NcsfElement r_elem(const Composition& L, unsigned trunc_degree) {
  check_degree(L.size(), trunc_degree);
  NcsfElement e(trunc_degree);
  for (const auto& K : coarsenings(L)) e.add_term(K, RationalFunction((L.length() - K.length()) % 2 == 0 ? 1 : -1));
  return e;
}

NcsfElement e_elem(unsigned n, unsigned trunc_degree) {
  check_degree(static_cast<int>(n), trunc_degree);
  NcsfElement e(trunc_degree);
  for (const auto& L : compositions_of(static_cast<int>(n))) {
    e.add_term(L, RationalFunction((static_cast<int>(n) - L.length()) % 2 == 0 ? 1 : -1));
  }
  return e;
}

NcsfElement h_series(unsigned trunc_degree) {
  NcsfElement e = NcsfElement::scalar(1, trunc_degree);
  for (unsigned n = 1; n <= trunc_degree; ++n) e.add_term(Composition({static_cast<int>(n)}), 1);
  return e;
}

NcsfElement e_series(unsigned trunc_degree) {
  NcsfElement e(trunc_degree);
  for (unsigned n = 0; n <= trunc_degree; ++n) e += e_elem(n, trunc_degree);
  return e;
}

NcsfElement ncsf_mul(const NcsfElement& a, const NcsfElement& b) { return a * b; }

NcsfElement ncsf_inverse_unit(const NcsfElement& a) {
  RationalFunction a0 = a.coefficient(Composition());
  if (a0.is_zero()) throw std::domain_error("constant term is not invertible");
  unsigned n = a.trunc_degree();
  RationalFunction inv0 = a0.inverse();

  // b_d = -inv0 * sum_{k=1..d} a_k b_{d-k}
  NcsfElement b = NcsfElement::scalar(inv0, n);
  for (unsigned d = 1; d <= n; ++d) {
    CompositionMap acc;
    for (unsigned k = 1; k <= d; ++k) {
      for (const auto& [K, c] : a.part(k)) {
        for (const auto& [L, v] : b.part(d - k)) accumulate(acc, concat(K, L), c * v);
      }
    }
    for (const auto& [L, c] : acc) b.add_term(L, -(c * inv0));
  }
  return b;
}

CompositionMap to_r_basis(const NcsfElement& a) {
  // h_L = sum_{K <= L} r_K
  CompositionMap r;
  for (const auto& m : a.graded()) {
    for (const auto& [L, c] : m) {
      for (const auto& K : coarsenings(L)) accumulate(r, K, c);
    }
  }
  return r;
}

NcsfElement from_r(const CompositionMap& coeffs, unsigned trunc_degree) {
  NcsfElement e(trunc_degree);
  for (const auto& [L, c] : coeffs) e += c * r_elem(L, trunc_degree);
  return e;
}

TruncatedSeries phi(const NcsfElement& a) {
  auto s = TruncatedSeries::zero(a.trunc_degree());
  for (unsigned n = 0; n <= a.trunc_degree(); ++n) {
    RationalFunction acc;
    for (const auto& [L, c] : a.part(n)) acc += c * RationalFunction(multinomial(L));
    s.set(n, acc * RationalFunction(Rational(1, factorial(n))));
  }
  return s;
}

TruncatedSeries phi_q(const NcsfElement& a) {
  auto s = TruncatedSeries::zero(a.trunc_degree());
  for (unsigned n = 0; n <= a.trunc_degree(); ++n) {
    RationalFunction acc;
    for (const auto& [L, c] : a.part(n)) acc += c * RationalFunction(q_multinomial(n, L));
    s.set(n, acc * inverse_q_factorial(n));
  }
  return s;
}

TruncatedSeries phi_hat(const NcsfElement& a) {
  auto E = euler_numbers(a.trunc_degree());
  auto s = TruncatedSeries::zero(a.trunc_degree());
  for (unsigned n = 0; n <= a.trunc_degree(); ++n) {
    RationalFunction acc;
    for (const auto& [L, c] : a.part(n)) {
      Rational w = 1;
      for (int p : L.parts()) {
        Rational f(E[static_cast<std::size_t>(p)], factorial(static_cast<unsigned>(p)));
        f.canonicalize();
        w *= f;
      }
      acc += c * RationalFunction(w);
    }
    s.set(n, acc);
  }
  return s;
}

int e_basis_rank(unsigned n) {
  if (n > 10) throw std::length_error("composition too large for rank check");
  auto comps = compositions_of(static_cast<int>(n));
  std::map<Composition, std::size_t> index;
  for (std::size_t i = 0; i < comps.size(); ++i) index[comps[i]] = i;

  std::vector<std::vector<Rational>> rows;
  for (const auto& L : comps) {
    NcsfElement prod = NcsfElement::scalar(1, n);
    for (int p : L.parts()) prod = prod * e_elem(static_cast<unsigned>(p), n);
    std::vector<Rational> row(comps.size());
    for (const auto& [K, c] : prod.part(n)) {
      if (!c.is_polynomial() || !c.num().is_constant()) throw std::logic_error("non-integer e-expansion");
      row[index.at(K)] = c.num().constant_term();
    }
    rows.push_back(std::move(row));
  }

  int rank = 0;
  std::size_t cols = comps.size();
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / pr[col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * pr[j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace descentlab
