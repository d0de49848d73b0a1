#include "thetarep/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetarep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("negative part");
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::staircase(int n) {
  std::vector<int> p;
  for (int i = n - 1; i >= 1; --i) p.push_back(i);
  return Partition(std::move(p));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

Partition Partition::box_complement(int rows, int cols) const {
  if (!fits_in_box(rows, cols))
    throw std::invalid_argument("partition does not fit in box");
  std::vector<int> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = cols - part(rows - 1 - i);
  return Partition(std::move(c));
}

std::uint64_t Partition::pack() const {
  if (length() > 16 || (!parts_.empty() && parts_[0] > 15))
    throw std::runtime_error("partition too large to pack: " + str());
  std::uint64_t k = 0;
  for (int i = 0; i < 16; ++i)
    k = (k << 4) | static_cast<std::uint64_t>(part(i));
  return k;
}

Partition Partition::unpack(std::uint64_t key) {
  std::vector<int> p(16);
  for (int i = 15; i >= 0; --i) {
    p[i] = static_cast<int>(key & 0xF);
    key >>= 4;
  }
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {
void gen_partitions(int w, int max_len, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (w == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (static_cast<int>(cur.size()) >= max_len) return;
  int hi = cur.empty() ? max_part : std::min(max_part, cur.back());
  for (int p = std::min(hi, w); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(w - p, max_len, max_part, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int w, int max_len, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(w, max_len, max_part, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int w = 0; w <= rows * cols; ++w) {
    auto v = partitions_of(w, rows, cols);
    out.insert(out.end(), v.begin(), v.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> add_horizontal_strip(const Partition& mu, int k,
                                            int max_len, int max_part) {
  // add a_i boxes to row i (0-based); interlacing: new_0 >= old_0 >= new_1 ...
  std::vector<Partition> out;
  int rows = std::min(mu.length() + 1, max_len);
  std::vector<int> nu(rows);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left == 0) {
        std::vector<int> v(nu.begin(), nu.begin() + rows);
        out.push_back(Partition(std::move(v)));
      }
      return;
    }
    int lo = mu.part(row);
    int hi = row == 0 ? max_part : std::min(mu.part(row - 1), max_part);
    for (int v = lo; v <= std::min(hi, lo + left); ++v) {
      nu[row] = v;
      rec(row + 1, left - (v - lo));
    }
  };
  rec(0, k);
  return out;
}

std::vector<Partition> add_vertical_strip(const Partition& mu, int k,
                                          int max_len, int max_part) {
  // conjugate trick: vertical strips on mu = horizontal strips on mu'
  std::vector<Partition> out;
  for (const Partition& nu :
       add_horizontal_strip(mu.conjugate(), k, max_part, max_len))
    out.push_back(nu.conjugate());
  return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda) {
  std::vector<Partition> out;
  int rows = lambda.length();
  std::vector<int> nu(rows);
  std::function<void(int)> rec = [&](int row) {
    if (row == rows) {
      std::vector<int> v(nu.begin(), nu.begin() + rows);
      out.push_back(Partition(std::move(v)));
      return;
    }
    // interlacing: lambda_row >= nu_row >= lambda_{row+1}
    for (int v = lambda.part(row); v >= lambda.part(row + 1); --v) {
      nu[row] = v;
      if (row > 0 && v > nu[row - 1]) continue;
      rec(row + 1);
    }
  };
  if (rows == 0)
    out.push_back(Partition());
  else
    rec(0);
  return out;
}

void add_border_strips(const Partition& lambda, int r, int max_len,
                       int max_part,
                       std::vector<std::pair<Partition, int>>& out) {
  // Beta-number encoding: beta_i = lambda_i + (L - 1 - i).
  int upper = std::max(lambda.length(), std::min(max_len, lambda.length() + r));
  std::vector<long> beta(upper);
  for (int i = 0; i < upper; ++i) beta[i] = lambda.part(i) + (upper - 1 - i);
  // adding an r-border-strip == replacing some beta_i by beta_i + r,
  // provided beta_i + r is not already in the set; sign height = number of
  // beta_j strictly between beta_i and beta_i + r.
  for (int i = 0; i < upper; ++i) {
    long nb = beta[i] + r;
    bool clash = false;
    int between = 0;
    for (int j = 0; j < upper; ++j) {
      if (j == i) continue;
      if (beta[j] == nb) clash = true;
      if (beta[j] > beta[i] && beta[j] < nb) ++between;
    }
    if (clash) continue;
    std::vector<long> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> parts(upper);
    bool valid = true;
    for (int j = 0; j < upper; ++j) {
      long pj = nbeta[j] - (upper - 1 - j);
      if (pj < 0) {
        valid = false;
        break;
      }
      parts[j] = static_cast<int>(pj);
    }
    if (!valid) continue;
    Partition nu(parts);
    if (!nu.fits_in_box(max_len, max_part)) continue;
    out.emplace_back(nu, between);
  }
}

}  // namespace thetarep
