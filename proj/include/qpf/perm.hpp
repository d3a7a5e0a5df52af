#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpf {

/// Permutation of {1..d} in one-line notation: img[k] = w(k+1).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Perm: not a permutation");
      seen[v - 1] = true;
    }
  }
  static Perm identity(int d) {
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }
  /// Adjacent transposition s_i (1-based, swaps i and i+1) in S_d.
  static Perm transposition(int d, int i) {
    assert(i >= 1 && i < d);
    Perm p = identity(d);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; } // 1-based
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i + 1) return false;
    return true;
  }

  /// (a*b)(i) = a(b(i)); with the right multi-index action I.w defined by
  /// (I.w)_k = i_{w(k)} this gives I.(a*b) = (I.a).b.
  friend Perm operator*(const Perm& a, const Perm& b) {
    assert(a.degree() == b.degree());
    std::vector<int> v(a.degree());
    for (int i = 0; i < a.degree(); ++i) v[i] = a.img_[b.img_[i] - 1];
    Perm p;
    p.img_ = std::move(v);
    return p;
  }

  Perm inverse() const {
    std::vector<int> v(degree());
    for (int i = 0; i < degree(); ++i) v[img_[i] - 1] = i + 1;
    Perm p;
    p.img_ = std::move(v);
    return p;
  }

  long length() const { // inversion count
    long inv = 0;
    for (int i = 0; i < degree(); ++i)
      for (int j = i + 1; j < degree(); ++j)
        if (img_[i] > img_[j]) ++inv;
    return inv;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < degree(); ++i) {
      if (i) s += ",";
      s += std::to_string(img_[i]);
    }
    return s;
  }

private:
  std::vector<int> img_;
};

/// Reduced word for w (generator indices, 1-based): product of the s_i in
/// order equals w and the length is the inversion count. Bubble sort of the
/// one-line notation.
inline std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> v = w.one_line();
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(i + 1);
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// A reduced word chosen by a randomized descent strategy; same contract as
/// reduced_word. Used to exercise the Matsumoto property.
inline std::vector<int> reduced_word_random(const Perm& w, std::mt19937_64& rng) {
  std::vector<int> v = w.one_line();
  std::vector<int> word;
  for (;;) {
    std::vector<int> descents;
    for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i)
      if (v[i] > v[i + 1]) descents.push_back(i + 1);
    if (descents.empty()) break;
    int i = descents[rng() % descents.size()];
    std::swap(v[i - 1], v[i]);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline Perm perm_from_word(int d, const std::vector<int>& word) {
  Perm w = Perm::identity(d);
  for (int i : word) w = w * Perm::transposition(d, i);
  return w;
}

/// Block permutation: the braiding word for degrees (d,e) under the pinned
/// right-action convention; sends the leading d-block past the trailing
/// e-block. One-line: i -> i+e for i <= d, i -> i-d otherwise.
inline Perm block_swap_perm(int d, int e) {
  std::vector<int> v(d + e);
  for (int i = 1; i <= d + e; ++i) v[i - 1] = i <= d ? i + e : i - d;
  return Perm(std::move(v));
}

// ---- multi-index utilities ------------------------------------------------

/// Lexicographic rank of a 1-based tuple over {1..n}; first entry most
/// significant. Inverse of index_to_tuple.
inline long tuple_to_index(const std::vector<int>& t, int n) {
  long idx = 0;
  for (int v : t) idx = idx * n + (v - 1);
  return idx;
}

inline std::vector<int> index_to_tuple(long idx, int n, int d) {
  std::vector<int> t(d);
  for (int k = d - 1; k >= 0; --k) {
    t[k] = static_cast<int>(idx % n) + 1;
    idx /= n;
  }
  return t;
}

inline std::vector<int> tuple_content(const std::vector<int>& t, int n) {
  std::vector<int> c(n, 0);
  for (int v : t) ++c[v - 1];
  return c;
}

inline bool tuple_strict(const std::vector<int>& t) {
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j]) return false;
  return true;
}

inline long tuple_inversions(const std::vector<int>& t) {
  long inv = 0;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j)
      if (t[i] > t[j]) ++inv;
  return inv;
}

/// Right action of w on tuples: (I.w)_k = i_{w(k)}.
inline std::vector<int> tuple_act(const std::vector<int>& t, const Perm& w) {
  std::vector<int> r(t.size());
  for (size_t k = 0; k < t.size(); ++k) r[k] = t[w(static_cast<int>(k) + 1) - 1];
  return r;
}

/// All weakly increasing tuples of length d over {1..n}, lex order.
inline std::vector<std::vector<int>> increasing_tuples(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// All strictly increasing tuples of length d over {1..n}, lex order.
inline std::vector<std::vector<int>> strict_tuples(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// All compositions of d into n nonnegative parts, lex order.
inline std::vector<std::vector<int>> compositions(int d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

} // namespace qpf
