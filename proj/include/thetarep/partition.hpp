#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace thetarep {

// Integer partition, canonical form (weakly decreasing, no trailing zeros).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // delta(n) = (n-1, ..., 2, 1)
  static Partition staircase(int n);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int i) const {  // 0-based, 0 beyond the end
    return i < length() ? parts_[i] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // mu_i <= this_i for all i
  bool fits_in_box(int rows, int cols) const;
  // complement inside a rows x cols box (requires fits_in_box)
  Partition box_complement(int rows, int cols) const;

  // parts <= 15 and length <= 16 pack into a sortable key
  std::uint64_t pack() const;
  static Partition unpack(std::uint64_t key);

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  friend bool operator<(const Partition& a, const Partition& b) {  // lex
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// All partitions of weight w with length <= max_len and parts <= max_part.
std::vector<Partition> partitions_of(int w, int max_len, int max_part);
// All partitions inside a rows x cols box (any weight), lex order.
std::vector<Partition> partitions_in_box(int rows, int cols);

// mu plus a horizontal strip of size k (no two added boxes in a column),
// optionally constrained to max_len rows / max_part columns.
std::vector<Partition> add_horizontal_strip(const Partition& mu, int k,
                                            int max_len, int max_part);
// mu plus a vertical strip of size k (no two added boxes in a row).
std::vector<Partition> add_vertical_strip(const Partition& mu, int k,
                                          int max_len, int max_part);
// All nu with nu <= lambda and lambda/nu a horizontal strip.
std::vector<Partition> remove_horizontal_strips(const Partition& lambda);

// lambda plus a border strip of r boxes; appends (result, height) pairs,
// height = number of rows spanned minus one (Murnaghan-Nakayama sign).
void add_border_strips(const Partition& lambda, int r, int max_len,
                       int max_part,
                       std::vector<std::pair<Partition, int>>& out);

}  // namespace thetarep

namespace std {
template <>
struct hash<thetarep::Partition> {
  size_t operator()(const thetarep::Partition& p) const {
    return std::hash<std::uint64_t>()(p.pack());
  }
};
}  // namespace std
