#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dtc/diffmod/diff_module.hpp"
#include "dtc/errors.hpp"

namespace dtc::detail {

// Column-compressed matrix over the field. Every stored entry is nonzero and
// each column is sorted by row.
class Sparse {
 public:
  using Column = std::vector<std::pair<std::size_t, RationalFunction>>;

  Sparse(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static Sparse identity(std::size_t n) {
    Sparse s(n, n);
    for (std::size_t i = 0; i < n; ++i) s.columns_[i].emplace_back(i, RationalFunction(1));
    return s;
  }

  static Sparse from_dense(const RFMatrix& m) {
    Sparse s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m(r, c).is_zero()) s.columns_[c].emplace_back(r, m(r, c));
      }
    }
    return s;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_[c]; }

  // Inserts in any order; duplicates accumulate.
  void add(std::size_t r, std::size_t c, const RationalFunction& v) {
    if (v.is_zero()) return;
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t key) { return e.first < key; });
    if (it != col.end() && it->first == r) {
      it->second += v;
      if (it->second.is_zero()) col.erase(it);
    } else {
      col.emplace(it, r, v);
    }
  }

  RFMatrix to_dense() const {
    RFMatrix m(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : columns_[c]) m(r, c) = v;
    }
    return m;
  }

  Sparse transpose() const {
    Sparse t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    }
    return t;
  }

  Sparse operator*(const Sparse& o) const {
    if (cols() != o.rows_) throw ShapeMismatch("sparse product of incompatible shapes");
    Sparse p(rows_, o.cols());
    for (std::size_t c = 0; c < o.cols(); ++c) {
      std::map<std::size_t, RationalFunction> acc;
      for (const auto& [k, b] : o.columns_[c]) {
        for (const auto& [r, a] : columns_[k]) acc[r] += a * b;
      }
      for (auto& [r, v] : acc) {
        if (!v.is_zero()) p.columns_[c].emplace_back(r, std::move(v));
      }
    }
    return p;
  }

  Sparse operator+(const Sparse& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) throw ShapeMismatch("sparse sum of incompatible shapes");
    Sparse s(*this);
    for (std::size_t c = 0; c < cols(); ++c) {
      for (const auto& [r, v] : o.columns_[c]) s.add(r, c, v);
    }
    return s;
  }

  // First differing (row, col) in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Sparse& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) throw ShapeMismatch("compared matrices differ in shape");
    std::optional<std::pair<std::size_t, std::size_t>> best;
    auto consider = [&](std::size_t r, std::size_t c) {
      if (!best || std::make_pair(r, c) < *best) best = std::make_pair(r, c);
    };
    for (std::size_t c = 0; c < cols(); ++c) {
      const auto& a = columns_[c];
      const auto& b = o.columns_[c];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          consider(a[i++].first, c);
        } else if (i == a.size() || b[j].first < a[i].first) {
          consider(b[j++].first, c);
        } else {
          if (!(a[i].second == b[j].second)) consider(a[i].first, c);
          ++i;
          ++j;
        }
      }
    }
    return best;
  }

  RationalFunction at(std::size_t r, std::size_t c) const {
    for (const auto& [row, v] : columns_[c]) {
      if (row == r) return v;
    }
    return RationalFunction();
  }

 private:
  std::size_t rows_;
  std::vector<Column> columns_;
};

inline Sparse kronecker(const Sparse& a, const Sparse& b) {
  Sparse k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ca = 0; ca < a.cols(); ++ca) {
    for (std::size_t cb = 0; cb < b.cols(); ++cb) {
      for (const auto& [ra, va] : a.column(ca)) {
        for (const auto& [rb, vb] : b.column(cb)) k.add(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
      }
    }
  }
  return k;
}

inline Sparse vstack(const Sparse& top, const Sparse& bottom) {
  if (top.cols() != bottom.cols()) throw ShapeMismatch("vstack of different widths");
  Sparse s(top.rows() + bottom.rows(), top.cols());
  for (std::size_t c = 0; c < top.cols(); ++c) {
    for (const auto& [r, v] : top.column(c)) s.add(r, c, v);
    for (const auto& [r, v] : bottom.column(c)) s.add(top.rows() + r, c, v);
  }
  return s;
}

inline Sparse hstack(const Sparse& left, const Sparse& right) {
  if (left.rows() != right.rows()) throw ShapeMismatch("hstack of different heights");
  Sparse s(left.rows(), left.cols() + right.cols());
  for (std::size_t c = 0; c < left.cols(); ++c) {
    for (const auto& [r, v] : left.column(c)) s.add(r, c, v);
  }
  for (std::size_t c = 0; c < right.cols(); ++c) {
    for (const auto& [r, v] : right.column(c)) s.add(r, left.cols() + c, v);
  }
  return s;
}

// F on a matrix: [[X, d_t X], [0, X]] or [[X, 0], [0, X]].
inline Sparse prolong(const DiffField& field, const Sparse& x, ProlongMode mode) {
  Sparse p(2 * x.rows(), 2 * x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    for (const auto& [r, v] : x.column(c)) {
      p.add(r, c, v);
      p.add(x.rows() + r, x.cols() + c, v);
      if (mode == ProlongMode::differential && !v.is_constant()) {
        p.add(r, x.cols() + c, field.derive(v, field.parameter()));
      }
    }
  }
  return p;
}

}  // namespace dtc::detail
