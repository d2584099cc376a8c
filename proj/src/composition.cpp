#include "descentlab/composition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "descentlab/permutation.hpp"
#include "descentlab/qcalc.hpp"

namespace descentlab {

namespace {

constexpr int kMaxBeta = 10;
constexpr int kMaxBetaHat = 9;

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    n_ += p;
  }
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ')';
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  bool paren = i < text.size() && text[i] == '(';
  if (paren) ++i;
  for (;;) {
    skip();
    if (i == text.size() || text[i] == ')') break;
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("bad composition text");
    int x = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      x = x * 10 + (text[i++] - '0');
      if (x > 1000000) throw std::invalid_argument("composition part too large");
    }
    parts.push_back(x);
    skip();
    if (i < text.size() && text[i] == ',') ++i;
  }
  if (paren) {
    if (i == text.size()) throw std::invalid_argument("unbalanced parenthesis in composition");
    ++i;
  }
  skip();
  if (i != text.size()) throw std::invalid_argument("trailing text after composition");
  return Composition(std::move(parts));
}

Composition comp_from_set(const std::vector<int>& s, int n) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> parts;
  int prev = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    int d = sorted[k];
    if (d < 1 || d > n - 1) throw std::invalid_argument("descent position out of range");
    if (k > 0 && d == sorted[k - 1]) throw std::invalid_argument("repeated descent position");
    parts.push_back(d - prev);
    prev = d;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::vector<int> set_from_comp(const Composition& L) {
  std::vector<int> s;
  int acc = 0;
  for (int i = 0; i + 1 < L.length(); ++i) {
    acc += L[static_cast<std::size_t>(i)];
    s.push_back(acc);
  }
  return s;
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

bool leq_refinement(const Composition& K, const Composition& L) {
  if (K.size() != L.size()) throw std::invalid_argument("compositions of different sizes");
  auto dk = set_from_comp(K);
  auto dl = set_from_comp(L);
  return std::includes(dl.begin(), dl.end(), dk.begin(), dk.end());
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return {Composition()};
  if (n > 24) throw std::length_error("enumeration too large");
  std::vector<Composition> out;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<int> s;
    for (int i = 1; i < n; ++i) {
      if (mask >> (i - 1) & 1) s.push_back(i);
    }
    out.push_back(comp_from_set(s, n));
  }
  return out;
}

std::vector<Composition> coarsenings(const Composition& L) {
  auto d = set_from_comp(L);
  std::vector<Composition> out;
  for (unsigned long mask = 0; mask < (1UL << d.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (mask >> i & 1) s.push_back(d[i]);
    }
    out.push_back(comp_from_set(s, L.size()));
  }
  return out;
}

namespace {

int beta_sign(const Composition& L, const Composition& K) {
  int sign = (L.length() - K.length()) % 2 == 0 ? 1 : -1;
#ifdef DESCENTLAB_MUTATE_BETA
  if (K.length() == 1) sign = -sign;
#endif
  return sign;
}

}  // namespace

Integer beta(const Composition& L) {
  if (L.size() > kMaxBeta) throw std::length_error("composition too large for beta");
  Integer s = 0;
  for (const auto& K : coarsenings(L)) s += beta_sign(L, K) * multinomial(K);
  return s;
}

Poly beta_q(const Composition& L) {
  if (L.size() > kMaxBeta) throw std::length_error("composition too large for beta_q");
  Poly s;
  auto n = static_cast<unsigned>(L.size());
  for (const auto& K : coarsenings(L)) s += beta_sign(L, K) * q_multinomial(n, K);
  return s;
}

Integer beta_hat(const Composition& L) {
  if (L.size() > kMaxBetaHat) throw std::length_error("composition too large for beta_hat");
  Integer c = 0;
  for (const auto& p : enumerate_sn(L.size())) {
    if (alt_comp(p) == L) ++c;
  }
  return c;
}

DescentStat descent_stat_from_name(std::string_view name) {
  if (name == "des") return DescentStat::des;
  if (name == "pk") return DescentStat::pk;
  if (name == "lpk") return DescentStat::lpk;
  if (name == "val") return DescentStat::val;
  if (name == "udr") return DescentStat::udr;
  if (name == "br") return DescentStat::br;
  if (name == "altdes") return DescentStat::altdes;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

Permutation canonical_perm(const Composition& L) {
  std::vector<int> letters(static_cast<std::size_t>(L.size()));
  int next = 1;
  int end = L.size();
  for (int r = L.length() - 1; r >= 0; --r) {
    int len = L[static_cast<std::size_t>(r)];
    for (int k = 0; k < len; ++k) letters[static_cast<std::size_t>(end - len + k)] = next++;
    end -= len;
  }
  return Permutation(std::move(letters));
}

int stat_of_composition(const Composition& L, DescentStat st) {
  if (L.size() == 0) throw std::invalid_argument("empty composition");
  Permutation p = canonical_perm(L);
  switch (st) {
    case DescentStat::des: return des(p);
    case DescentStat::pk: return pk(p);
    case DescentStat::lpk: return lpk(p);
    case DescentStat::val: return val(p);
    case DescentStat::udr: return udr(p);
    case DescentStat::br: return br(p);
    case DescentStat::altdes: return altdes(p);
  }
  throw std::logic_error("unreachable");
}

}  // namespace descentlab
