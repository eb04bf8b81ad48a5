#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace renyi {

/// Index of a symbol in a finite alphabet {0, ..., s-1}.
using Symbol = std::uint32_t;

/// Largest total count a histogram may hold.
inline constexpr std::uint64_t kMaxTotalCount = 0x7fffffffffffffffULL;

/// Observed counts over an alphabet of explicitly declared size.
///
/// Zero-count symbols are part of the alphabet: the alphabet size is never
/// inferred from the largest symbol seen.
class Histogram {
 public:
  explicit Histogram(std::vector<std::uint64_t> counts,
                     std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t alphabet_size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t operator[](std::size_t i) const { return counts_.at(i); }

  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }
  /// Label of symbol i, or its decimal index when the histogram is unlabeled.
  std::string label(std::size_t i) const;

  /// Entry-wise sum; both operands must share the alphabet (and labels, if any).
  Histogram merged(const Histogram& other) const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::optional<std::vector<std::string>> labels_;
  std::uint64_t total_ = 0;
};

/// Counts over the pair alphabet X × Y, stored row-major (x rows, y columns).
class JointHistogram {
 public:
  JointHistogram(std::size_t size_x, std::size_t size_y, std::vector<std::uint64_t> counts,
                 std::optional<std::vector<std::string>> labels_x = std::nullopt,
                 std::optional<std::vector<std::string>> labels_y = std::nullopt);

  /// Builds from nested rows; every row must have the same length.
  static JointHistogram from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

  std::size_t size_x() const noexcept { return size_x_; }
  std::size_t size_y() const noexcept { return size_y_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t at(std::size_t x, std::size_t y) const;
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }

  const std::optional<std::vector<std::string>>& labels_x() const noexcept { return labels_x_; }
  const std::optional<std::vector<std::string>>& labels_y() const noexcept { return labels_y_; }

 private:
  std::size_t size_x_;
  std::size_t size_y_;
  std::vector<std::uint64_t> counts_;
  std::optional<std::vector<std::string>> labels_x_;
  std::optional<std::vector<std::string>> labels_y_;
  std::uint64_t total_ = 0;
};

/// Counts occurrences of each index in [0, alphabet_size).
Histogram from_samples(std::span<const Symbol> samples, std::size_t alphabet_size);
/// Signed variant; negative indices raise IndexOutOfAlphabet.
Histogram from_samples(std::span<const std::int64_t> samples, std::size_t alphabet_size);

/// Parses `symbol,count` records, one per line, labels kept in file order.
Histogram from_counts_csv(std::istream& in);
Histogram from_counts_csv(std::string_view text);

/// Parses `x,y,count` records. Symbol alphabets are the distinct labels in
/// order of first appearance; pairs never listed count as zero.
JointHistogram from_joint_csv(std::istream& in);
JointHistogram from_joint_csv(std::string_view text);

/// Splits each byte most-significant-bit first into symbols of the given width.
/// `symbol_bits` must be 1, 2, 4 or 8.
std::vector<Symbol> unpack_symbols(std::span<const std::uint8_t> bytes, int symbol_bits);

/// Histogram over 2^symbol_bits symbols of the unpacked byte stream.
Histogram from_raw_bytes(std::span<const std::uint8_t> bytes, int symbol_bits);

/// Writes `label,count` records that from_counts_csv reads back unchanged.
void write_counts_csv(std::ostream& out, const Histogram& h);

/// Row sums (X marginal) and column sums (Y marginal).
std::pair<Histogram, Histogram> marginals(const JointHistogram& j);

}  // namespace renyi
