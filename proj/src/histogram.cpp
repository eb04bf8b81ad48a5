#include "renyi/histogram.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "renyi/error.hpp"

namespace renyi {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > kMaxTotalCount - a) {
    throw CountOverflow("total count exceeds 2^63-1");
  }
  return a + b;
}

std::uint64_t checked_total(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total = checked_add(total, c);
  return total;
}

void check_labels(const std::optional<std::vector<std::string>>& labels, std::size_t size,
                  const char* what) {
  if (!labels) return;
  if (labels->size() != size) {
    throw InvalidArgument(std::string(what) + ": label count does not match alphabet size");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : *labels) {
    if (!seen.insert(l).second) {
      throw DuplicateSymbol(std::string(what) + ": duplicate label '" + l + "'");
    }
  }
}

// Splits one CSV record into fields. Commas are never part of a symbol, so
// there is no quoting.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
  if (!field.empty() && field.front() == '-') {
    bool digits = field.size() > 1 && std::all_of(field.begin() + 1, field.end(), [](char c) {
                    return c >= '0' && c <= '9';
                  });
    if (digits) {
      throw NegativeCount("line " + std::to_string(line_no) + ": negative count " +
                          std::string(field));
    }
  }
  if (field.empty() || !std::all_of(field.begin(), field.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line_no, "count is not a base-10 non-negative integer: '" +
                                  std::string(field) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value > kMaxTotalCount) {
    throw ParseError(line_no, "count out of range: '" + std::string(field) + "'");
  }
  return value;
}

void check_symbol(std::string_view field, std::size_t line_no) {
  if (field.empty()) throw ParseError(line_no, "empty symbol");
}

// Reads records line by line, handing (line number, fields) to the visitor.
// A leading UTF-8 byte-order mark, trailing carriage returns and empty lines
// are ignored.
template <typename Visitor>
void for_each_record(std::istream& in, std::size_t expected_fields, Visitor&& visit) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty()) continue;
    auto fields = split_fields(view);
    if (fields.size() != expected_fields) {
      throw ParseError(line_no, "expected " + std::to_string(expected_fields) +
                                    " comma-separated fields, found " +
                                    std::to_string(fields.size()));
    }
    visit(line_no, fields);
  }
  if (in.bad()) throw Error("read error on counts input");
}

}  // namespace

Histogram::Histogram(std::vector<std::uint64_t> counts,
                     std::optional<std::vector<std::string>> labels)
    : counts_(std::move(counts)), labels_(std::move(labels)) {
  if (counts_.empty()) throw InvalidArgument("histogram alphabet must have at least one symbol");
  check_labels(labels_, counts_.size(), "histogram");
  total_ = checked_total(counts_);
}

std::string Histogram::label(std::size_t i) const {
  if (i >= counts_.size()) throw IndexOutOfAlphabet("symbol index out of range");
  return labels_ ? (*labels_)[i] : std::to_string(i);
}

Histogram Histogram::merged(const Histogram& other) const {
  if (other.alphabet_size() != alphabet_size()) {
    throw AlphabetMismatch("cannot merge histograms over different alphabets");
  }
  if (labels_ != other.labels_) {
    throw AlphabetMismatch("cannot merge histograms with different labels");
  }
  std::vector<std::uint64_t> sum(counts_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = checked_add(counts_[i], other.counts_[i]);
  return Histogram(std::move(sum), labels_);
}

JointHistogram::JointHistogram(std::size_t size_x, std::size_t size_y,
                               std::vector<std::uint64_t> counts,
                               std::optional<std::vector<std::string>> labels_x,
                               std::optional<std::vector<std::string>> labels_y)
    : size_x_(size_x),
      size_y_(size_y),
      counts_(std::move(counts)),
      labels_x_(std::move(labels_x)),
      labels_y_(std::move(labels_y)) {
  if (size_x_ == 0 || size_y_ == 0) {
    throw InvalidArgument("joint histogram alphabets must be non-empty");
  }
  if (counts_.size() != size_x_ * size_y_) {
    throw InvalidArgument("joint histogram has " + std::to_string(counts_.size()) +
                          " cells, expected " + std::to_string(size_x_ * size_y_));
  }
  check_labels(labels_x_, size_x_, "joint histogram x");
  check_labels(labels_y_, size_y_, "joint histogram y");
  total_ = checked_total(counts_);
}

JointHistogram JointHistogram::from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidArgument("joint histogram alphabets must be non-empty");
  }
  const auto cols = rows.front().size();
  std::vector<std::uint64_t> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw InvalidArgument("ragged joint histogram rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return JointHistogram(rows.size(), cols, std::move(flat));
}

std::uint64_t JointHistogram::at(std::size_t x, std::size_t y) const {
  if (x >= size_x_ || y >= size_y_) throw IndexOutOfAlphabet("joint cell out of range");
  return counts_[x * size_y_ + y];
}

Histogram from_samples(std::span<const Symbol> samples, std::size_t alphabet_size) {
  std::vector<std::uint64_t> counts(alphabet_size, 0);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (samples[k] >= alphabet_size) {
      throw IndexOutOfAlphabet("sample " + std::to_string(k) + " has index " +
                               std::to_string(samples[k]) + ", alphabet size is " +
                               std::to_string(alphabet_size));
    }
    ++counts[samples[k]];
  }
  return Histogram(std::move(counts));
}

Histogram from_samples(std::span<const std::int64_t> samples, std::size_t alphabet_size) {
  std::vector<std::uint64_t> counts(alphabet_size, 0);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    auto v = samples[k];
    if (v < 0 || static_cast<std::uint64_t>(v) >= alphabet_size) {
      throw IndexOutOfAlphabet("sample " + std::to_string(k) + " has index " + std::to_string(v) +
                               ", alphabet size is " + std::to_string(alphabet_size));
    }
    ++counts[static_cast<std::size_t>(v)];
  }
  return Histogram(std::move(counts));
}

Histogram from_counts_csv(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::unordered_map<std::string, std::size_t> first_line;
  for_each_record(in, 2, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    check_symbol(f[0], line_no);
    auto [it, inserted] = first_line.emplace(std::string(f[0]), line_no);
    if (!inserted) {
      throw DuplicateSymbol("line " + std::to_string(line_no) + ": symbol '" + it->first +
                            "' already defined on line " + std::to_string(it->second));
    }
    counts.push_back(parse_count(f[1], line_no));
    labels.emplace_back(f[0]);
  });
  if (counts.empty()) throw ParseError(1, "counts table has no records");
  return Histogram(std::move(counts), std::move(labels));
}

Histogram from_counts_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_counts_csv(in);
}

JointHistogram from_joint_csv(std::istream& in) {
  std::vector<std::string> labels_x;
  std::vector<std::string> labels_y;
  std::unordered_map<std::string, std::size_t> index_x;
  std::unordered_map<std::string, std::size_t> index_y;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> cells;

  auto intern = [](std::string_view label, std::vector<std::string>& labels,
                   std::unordered_map<std::string, std::size_t>& index) {
    auto [it, inserted] = index.emplace(std::string(label), labels.size());
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  for_each_record(in, 3, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    check_symbol(f[0], line_no);
    check_symbol(f[1], line_no);
    auto count = parse_count(f[2], line_no);
    auto x = intern(f[0], labels_x, index_x);
    auto y = intern(f[1], labels_y, index_y);
    if (!cells.emplace(std::make_pair(x, y), count).second) {
      throw DuplicateSymbol("line " + std::to_string(line_no) + ": pair (" + std::string(f[0]) +
                            "," + std::string(f[1]) + ") listed twice");
    }
  });
  if (cells.empty()) throw ParseError(1, "joint counts table has no records");

  const auto sx = labels_x.size();
  const auto sy = labels_y.size();
  std::vector<std::uint64_t> flat(sx * sy, 0);
  for (const auto& [key, count] : cells) flat[key.first * sy + key.second] = count;
  return JointHistogram(sx, sy, std::move(flat), std::move(labels_x), std::move(labels_y));
}

JointHistogram from_joint_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_joint_csv(in);
}

std::vector<Symbol> unpack_symbols(std::span<const std::uint8_t> bytes, int symbol_bits) {
  if (symbol_bits != 1 && symbol_bits != 2 && symbol_bits != 4 && symbol_bits != 8) {
    throw InvalidArgument("symbol width must be 1, 2, 4 or 8 bits, got " +
                          std::to_string(symbol_bits));
  }
  const int per_byte = 8 / symbol_bits;
  const unsigned mask = (1u << symbol_bits) - 1u;
  std::vector<Symbol> symbols;
  symbols.reserve(bytes.size() * static_cast<std::size_t>(per_byte));
  for (auto byte : bytes) {
    for (int k = per_byte - 1; k >= 0; --k) {
      symbols.push_back((static_cast<unsigned>(byte) >> (k * symbol_bits)) & mask);
    }
  }
  return symbols;
}

Histogram from_raw_bytes(std::span<const std::uint8_t> bytes, int symbol_bits) {
  auto symbols = unpack_symbols(bytes, symbol_bits);
  return from_samples(std::span<const Symbol>(symbols), std::size_t{1} << symbol_bits);
}

void write_counts_csv(std::ostream& out, const Histogram& h) {
  for (std::size_t i = 0; i < h.alphabet_size(); ++i) {
    auto label = h.label(i);
    if (label.empty() || label.find_first_of(",\r\n") != std::string::npos) {
      throw InvalidArgument("label '" + label + "' cannot be written as a CSV symbol");
    }
    out << label << ',' << h[i] << '\n';
  }
}

std::pair<Histogram, Histogram> marginals(const JointHistogram& j) {
  std::vector<std::uint64_t> row(j.size_x(), 0);
  std::vector<std::uint64_t> col(j.size_y(), 0);
  for (std::size_t x = 0; x < j.size_x(); ++x) {
    for (std::size_t y = 0; y < j.size_y(); ++y) {
      auto c = j.at(x, y);
      row[x] += c;
      col[y] += c;
    }
  }
  return {Histogram(std::move(row), j.labels_x()), Histogram(std::move(col), j.labels_y())};
}

}  // namespace renyi
