#include "descentlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace descentlab {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  std::vector<bool> seen(letters_.size() + 1, false);
  for (int v : letters_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters_[i]);
  }
  return s;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad character in permutation: '" + std::string(1, c) + "'");
    }
    int x = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      x = x * 10 + (text[i] - '0');
      if (x > 1000000) throw std::invalid_argument("permutation letter too large");
      ++i;
    }
    v.push_back(x);
  }
  return Permutation(std::move(v));
}

bool advance_lex(Permutation& p) {
  auto& v = p.letters_;
  if (std::next_permutation(v.begin(), v.end())) return true;
  std::reverse(v.begin(), v.end());
  return false;
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> s;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) s.push_back(i);
  }
  return s;
}

int des(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

int pk(const Permutation& p) {
  int c = 0;
  for (int i = 2; i < p.size(); ++i) c += p(i - 1) < p(i) && p(i) > p(i + 1);
  return c;
}

int lpk(const Permutation& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i) {
    int prev = i == 1 ? 0 : p(i - 1);
    c += prev < p(i) && p(i) > p(i + 1);
  }
  return c;
}

int val(const Permutation& p) {
  int c = 0;
  for (int i = 2; i < p.size(); ++i) c += p(i - 1) > p(i) && p(i) < p(i + 1);
  return c;
}

int dasc(const Permutation& p) {
  int c = 0;
  for (int i = 2; i < p.size(); ++i) c += p(i - 1) < p(i) && p(i) < p(i + 1);
  return c;
}

int ddes(const Permutation& p) {
  int c = 0;
  for (int i = 2; i < p.size(); ++i) c += p(i - 1) > p(i) && p(i) > p(i + 1);
  return c;
}

int br(const Permutation& p) {
  int n = p.size();
  if (n < 2) return 0;
  int runs = 1;
  for (int i = 2; i < n; ++i) {
    bool up_before = p(i - 1) < p(i);
    bool up_after = p(i) < p(i + 1);
    runs += up_before != up_after;
  }
  return runs;
}

int udr(const Permutation& p) {
  int n = p.size();
  if (n == 0) return 0;
  if (n == 1) return 1;
  return br(p) + (p(1) > p(2) ? 1 : 0);
}

int inv(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j);
  }
  return c;
}

int maj(const Permutation& p) {
  int s = 0;
  for (int i : descent_set(p)) s += i;
  return s;
}

int imaj(const Permutation& p) { return maj(inverse(p)); }

std::vector<int> alt_descent_set(const Permutation& p) {
  std::vector<int> s;
  for (int i = 1; i < p.size(); ++i) {
    bool descent = p(i) > p(i + 1);
    if ((i % 2 == 1) == descent) s.push_back(i);
  }
  return s;
}

int altdes(const Permutation& p) { return static_cast<int>(alt_descent_set(p).size()); }

Composition comp(const Permutation& p) { return comp_from_set(descent_set(p), p.size()); }

Composition alt_comp(const Permutation& p) { return comp_from_set(alt_descent_set(p), p.size()); }

StatRecord compute_stats(const Permutation& p) {
  StatRecord r;
  r.des_set = descent_set(p);
  r.des = static_cast<int>(r.des_set.size());
  r.pk = pk(p);
  r.lpk = lpk(p);
  r.val = val(p);
  r.udr = udr(p);
  r.dasc = dasc(p);
  r.ddes = ddes(p);
  r.br = br(p);
  r.inv = inv(p);
  r.maj = maj(p);
  r.imaj = imaj(p);
  r.altdes = altdes(p);
  r.comp = comp_from_set(r.des_set, p.size());
  r.alt_comp = alt_comp(p);
  return r;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) v[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(v));
}

Permutation reverse_complement(const Permutation& p) {
  int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) v.push_back(n + 1 - p(i));
  return Permutation(std::move(v));
}

namespace {

void stack_sort_rec(const int* b, const int* e, std::vector<int>& out) {
  if (b == e) return;
  const int* m = std::max_element(b, e);
  stack_sort_rec(b, m, out);
  stack_sort_rec(m + 1, e, out);
  out.push_back(*m);
}

}  // namespace

Permutation stack_sort(const Permutation& p) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  const auto& v = p.letters();
  stack_sort_rec(v.data(), v.data() + v.size(), out);
  return Permutation(std::move(out));
}

bool is_r_stack_sortable(const Permutation& p, int r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  Permutation q = p;
  for (int k = 0; k < r; ++k) q = stack_sort(q);
  return q == Permutation::identity(p.size());
}

bool avoids_231(const Permutation& p) {
  int n = p.size();
  for (int j = 2; j < n; ++j) {
    // Largest earlier letter below pi_j plays the '2'.
    int two = 0;
    for (int i = 1; i < j; ++i) {
      if (p(i) < p(j)) two = std::max(two, p(i));
    }
    if (two == 0) continue;
    for (int k = j + 1; k <= n; ++k) {
      if (p(k) < two) return false;
    }
  }
  return true;
}

bool in_av_2341_and_barred(const Permutation& p) {
  int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          // 2341
          if (p(d) < p(a) && p(a) < p(b) && p(b) < p(c)) return false;
          // 3241 needs some letter between a and b larger than the '4'
          if (p(d) < p(b) && p(b) < p(a) && p(a) < p(c)) {
            bool saved = false;
            for (int m = a + 1; m < b && !saved; ++m) saved = p(m) > p(c);
            if (!saved) return false;
          }
        }
      }
    }
  }
  return true;
}

VincularPattern vincular_from_name(std::string_view name) {
  if (name == "23-1") return VincularPattern::p23_1;
  if (name == "13-2") return VincularPattern::p13_2;
  throw std::invalid_argument("unknown vincular pattern '" + std::string(name) + "'");
}

// 23-1 is read as one letter followed later by an adjacent descent pair that
// straddles it (the 2 before the 31); 13-2 as an adjacent ascent pair
// straddling a later letter. Both readings are constant on MFS orbits.
int count_vincular(const Permutation& p, VincularPattern pattern) {
  int n = p.size(), c = 0;
  if (pattern == VincularPattern::p23_1) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b + 1 <= n; ++b) c += p(b + 1) < p(a) && p(a) < p(b);
    }
    return c;
  }
  for (int a = 1; a + 1 <= n; ++a) {
    for (int b = a + 2; b <= n; ++b) c += p(a) < p(b) && p(b) < p(a + 1);
  }
  return c;
}

int count_vincular(const Permutation& p, std::string_view pattern) {
  return count_vincular(p, vincular_from_name(pattern));
}

PermutationStream::PermutationStream(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kMaxEnumerateSn) throw std::length_error("enumeration too large");
}

PermutationStream::iterator::iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

PermutationStream::iterator& PermutationStream::iterator::operator++() {
  if (!advance_lex(current_)) done_ = true;
  return *this;
}

PermutationStream enumerate_sn(int n) { return PermutationStream(n); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for (const auto& p : enumerate_sn(n)) out.push_back(p);
  return out;
}

}  // namespace descentlab
