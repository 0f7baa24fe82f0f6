// Utility matrices, matchings and game instances shared by all solvers.
//
// Indices are 0-based throughout. A Matching maps worker i to enterprise
// image[i]; the same type is reused for the job-to-worker direction.
#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bimarket/errors.hpp"
#include "bimarket/rational.hpp"

namespace bimarket {

/// Largest market size for which all n! matchings are enumerated.
inline constexpr std::size_t kEnumerationCap = 8;

class Matching {
 public:
  static Matching identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Matching(std::move(image));
  }

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator[](std::size_t i) const { return image_[i]; }
  std::span<const std::size_t> image() const noexcept { return image_; }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  explicit Matching(std::vector<std::size_t> image) : image_(std::move(image)) {}

  friend Matching matching_from_image(std::vector<std::size_t> image);
  friend Matching inverse(const Matching& m);
  friend Matching compose(const Matching& outer, const Matching& inner);

  std::vector<std::size_t> image_;
};

/// Validates that `image` is a bijection on {0, ..., n-1}.
inline Matching matching_from_image(std::vector<std::size_t> image) {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    const std::size_t j = image[i];
    if (j >= image.size()) {
      throw NotAPermutation("index " + std::to_string(j) + " at position " +
                            std::to_string(i) + " is out of range");
    }
    if (seen[j]) {
      throw NotAPermutation("index " + std::to_string(j) + " appears twice");
    }
    seen[j] = true;
  }
  return Matching(std::move(image));
}

inline Matching inverse(const Matching& m) {
  std::vector<std::size_t> inv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) inv[m[i]] = i;
  return Matching(std::move(inv));
}

/// (outer ∘ inner)[i] = outer[inner[i]].
inline Matching compose(const Matching& outer, const Matching& inner) {
  if (outer.size() != inner.size()) {
    throw DimensionMismatch("cannot compose matchings of different sizes");
  }
  std::vector<std::size_t> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return Matching(std::move(out));
}

/// All n! matchings in lexicographic order of their images.
inline std::vector<Matching> all_matchings(std::size_t n) {
  if (n == 0) throw InputError("market size must be positive");
  if (n > kEnumerationCap) {
    throw SizeTooLarge("cannot enumerate matchings for n = " +
                       std::to_string(n) + " (cap is " +
                       std::to_string(kEnumerationCap) + ")");
  }
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Matching> out;
  do {
    out.push_back(matching_from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

class UtilityMatrix {
 public:
  using Rows = std::vector<std::vector<Rational>>;

  explicit UtilityMatrix(const Rows& rows, std::vector<std::string> row_labels = {},
                std::vector<std::string> col_labels = {})
      : n_(rows.size()),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)) {
    if (n_ == 0) throw DimensionMismatch("utility matrix must be non-empty");
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) {
        throw DimensionMismatch("utility matrix must be square: expected " +
                                std::to_string(n_) + " columns, got " +
                                std::to_string(row.size()));
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
    row_labels_ = labels_or_default(std::move(row_labels_), "row");
    col_labels_ = labels_or_default(std::move(col_labels_), "column");
  }

  UtilityMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : UtilityMatrix(Rows(rows.begin(), rows.end())) {}

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  std::span<const Rational> entries() const noexcept { return entries_; }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

  Rows rows() const {
    Rows out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                    entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
  }

  Rational max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }

  /// Sum of entries (i, m[i]).
  Rational value_of(const Matching& m) const {
    if (m.size() != n_) throw DimensionMismatch("matching size differs from matrix size");
    Rational total = 0;
    for (std::size_t i = 0; i < n_; ++i) total += (*this)(i, m[i]);
    return total;
  }

  friend bool operator==(const UtilityMatrix&, const UtilityMatrix&) = default;

 private:
  std::vector<std::string> labels_or_default(std::vector<std::string> labels,
                                             const char* what) const {
    if (labels.empty()) {
      for (std::size_t i = 0; i < n_; ++i) labels.push_back(std::to_string(i + 1));
    } else if (labels.size() != n_) {
      throw DimensionMismatch(std::string(what) + " label count " +
                              std::to_string(labels.size()) +
                              " differs from matrix size " + std::to_string(n_));
    }
    return labels;
  }

  std::size_t n_;
  std::vector<Rational> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// A = worker_utilities (worker row, enterprise column);
/// B = enterprise_utilities (enterprise row, worker column).
class GameInstance {
 public:
  GameInstance(UtilityMatrix workers, UtilityMatrix enterprises)
      : workers_(std::move(workers)), enterprises_(std::move(enterprises)) {
    if (workers_.size() != enterprises_.size()) {
      throw DimensionMismatch("worker and enterprise matrices differ in size");
    }
  }

  std::size_t size() const noexcept { return workers_.size(); }
  const UtilityMatrix& worker_utilities() const noexcept { return workers_; }
  const UtilityMatrix& enterprise_utilities() const noexcept { return enterprises_; }

 private:
  UtilityMatrix workers_;
  UtilityMatrix enterprises_;
};

}  // namespace bimarket
