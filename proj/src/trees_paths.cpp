#include "descentlab/trees_paths.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "descentlab/qcalc.hpp"

namespace descentlab {

namespace {

void check_catalan_guard(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kMaxCatalanN) throw std::length_error("enumeration too large");
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  BinaryTree run() {
    BinaryTree t = tree();
    skip();
    if (i_ != s_.size()) fail();
    return t;
  }

 private:
  BinaryTree tree() {
    skip();
    if (i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      return {};
    }
    int label = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      label = label * 10 + (s_[i_++] - '0');
      if (label > 1000000) fail();
    }
    expect('(');
    BinaryTree l = tree();
    expect(',');
    BinaryTree r = tree();
    expect(')');
    return BinaryTree::join(l, r, label);
  }

  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail();
    ++i_;
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail() const { throw std::invalid_argument("bad tree text at offset " + std::to_string(i_)); }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Integer catalan(unsigned n) { return binomial(2 * static_cast<long>(n), n) / (n + 1); }

int BinaryTree::copy_from(const BinaryTree& other, int idx) {
  if (idx < 0) return -1;
  const Node& src = other.node(idx);
  int l = copy_from(other, src.left);
  int r = copy_from(other, src.right);
  nodes_.push_back({l, r, src.label});
  return static_cast<int>(nodes_.size()) - 1;
}

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right, int label) {
  BinaryTree t;
  t.nodes_.reserve(static_cast<std::size_t>(left.size() + right.size() + 1));
  int l = t.copy_from(left, left.root_);
  int r = t.copy_from(right, right.root_);
  t.nodes_.push_back({l, r, label});
  t.root_ = static_cast<int>(t.nodes_.size()) - 1;
  return t;
}

bool BinaryTree::labeled() const {
  return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.label != 0; });
}

BinaryTree BinaryTree::unlabeled() const {
  BinaryTree t = *this;
  for (auto& n : t.nodes_) n.label = 0;
  return t;
}

std::vector<int> BinaryTree::postorder_labels() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int i) {
    if (i < 0) return;
    walk(node(i).left);
    walk(node(i).right);
    out.push_back(node(i).label);
  };
  walk(root_);
  return out;
}

std::vector<int> BinaryTree::inorder_labels() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int i) {
    if (i < 0) return;
    walk(node(i).left);
    out.push_back(node(i).label);
    walk(node(i).right);
  };
  walk(root_);
  return out;
}

BinaryTree BinaryTree::postorder_labeled() const {
  BinaryTree t = *this;
  int next = 1;
  std::function<void(int)> walk = [&](int i) {
    if (i < 0) return;
    walk(t.nodes_[static_cast<std::size_t>(i)].left);
    walk(t.nodes_[static_cast<std::size_t>(i)].right);
    t.nodes_[static_cast<std::size_t>(i)].label = next++;
  };
  walk(t.root_);
  return t;
}

std::string BinaryTree::to_string() const {
  std::string s;
  std::function<void(int)> walk = [&](int i) {
    if (i < 0) {
      s += '.';
      return;
    }
    const Node& n = node(i);
    if (n.label != 0) s += std::to_string(n.label);
    s += '(';
    walk(n.left);
    s += ',';
    walk(n.right);
    s += ')';
  };
  walk(root_);
  return s;
}

BinaryTree BinaryTree::parse(std::string_view text) { return TreeParser(text).run(); }

TreeStats tree_stats(const BinaryTree& t) {
  TreeStats s;
  for (int i = 0; i < t.size(); ++i) {
    const auto& n = t.node(i);
    if (n.left < 0) ++s.nlc;
    if (n.left >= 0 && n.right >= 0) ++s.tc;
  }
  return s;
}

namespace {

BinaryTree theta_tilde_of(const std::vector<int>& w) {
  if (w.empty()) return {};
  auto it = std::max_element(w.begin(), w.end());
  std::vector<int> sigma(w.begin(), it);
  std::vector<int> tau(it + 1, w.end());
  return BinaryTree::join(theta_tilde_of(sigma), theta_tilde_of(tau), *it);
}

}  // namespace

BinaryTree theta_tilde(const Permutation& p) { return theta_tilde_of(p.letters()); }

BinaryTree theta(const Permutation& p) {
  if (!avoids_231(p)) throw std::invalid_argument("not 231-avoiding");
  return theta_tilde(p).unlabeled();
}

Permutation theta_inverse(const BinaryTree& t) { return Permutation(t.postorder_labeled().inorder_labels()); }

std::vector<BinaryTree> enumerate_trees(int n) {
  check_catalan_guard(n);
  std::vector<std::vector<BinaryTree>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].emplace_back();
  for (int m = 1; m <= n; ++m) {
    auto& out = by_size[static_cast<std::size_t>(m)];
    for (int l = 0; l < m; ++l) {
      for (const auto& L : by_size[static_cast<std::size_t>(l)]) {
        for (const auto& R : by_size[static_cast<std::size_t>(m - 1 - l)]) out.push_back(BinaryTree::join(L, R));
      }
    }
  }
  return std::move(by_size[static_cast<std::size_t>(n)]);
}

DyckPath::DyckPath(std::string word) : word_(std::move(word)) {
  int h = 0;
  for (char c : word_) {
    if (c == 'U') ++h;
    else if (c == 'D') --h;
    else throw std::invalid_argument("malformed Dyck word: unexpected character");
    if (h < 0) throw std::invalid_argument("malformed Dyck word: path goes below the axis");
  }
  if (h != 0) throw std::invalid_argument("malformed Dyck word: path does not return to the axis");
}

DyckStats dyck_stats(const DyckPath& d) {
  DyckStats s;
  const auto& w = d.word();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 'U' && w[i + 1] == 'D') ++s.pk;
    if (i + 2 < w.size() && w[i] == 'D' && w[i + 1] == 'D' && w[i + 2] == 'U') ++s.hk;
  }
  return s;
}

DyckPath psi(const Permutation& p) {
  if (!avoids_231(p)) throw std::invalid_argument("not 231-avoiding");
  Composition L = comp(p);
  Composition K = comp(inverse(p));
  if (L.length() != K.length()) throw std::invalid_argument("not 231-avoiding");
  std::string w;
  for (int i = 0; i < L.length(); ++i) {
    w.append(static_cast<std::size_t>(K[static_cast<std::size_t>(i)]), 'U');
    w.append(static_cast<std::size_t>(L[static_cast<std::size_t>(i)]), 'D');
  }
  return DyckPath(std::move(w));
}

std::vector<DyckPath> enumerate_dyck(int n) {
  check_catalan_guard(n);
  std::vector<DyckPath> out;
  std::string w;
  std::function<void(int, int)> grow = [&](int ups, int downs) {
    if (downs == n) {
      out.emplace_back(w);
      return;
    }
    if (ups < n) {
      w.push_back('U');
      grow(ups + 1, downs);
      w.pop_back();
    }
    if (downs < ups) {
      w.push_back('D');
      grow(ups, downs + 1);
      w.pop_back();
    }
  };
  grow(0, 0);
  return out;
}

std::vector<Permutation> av231_via_trees(int n) {
  std::vector<Permutation> out;
  for (const auto& t : enumerate_trees(n)) out.push_back(theta_inverse(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace descentlab
