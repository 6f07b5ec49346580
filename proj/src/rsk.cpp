#include "permlab/rsk.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "permlab/numeric.hpp"

namespace permlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::weight() const noexcept {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(parts_.front(), 0);
    for (int p : parts_) {
      for (int c = 0; c < p; ++c) ++cols[c];
    }
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

bool StandardTableau::is_standard() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    n += rows[i].size();
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
      seen[v] = true;
      if (j > 0 && rows[i][j - 1] >= v) return false;
      if (i > 0 && rows[i - 1][j] >= v) return false;
    }
  }
  return true;
}

std::string format_tableau(const StandardTableau& t) {
  std::string out;
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

TableauPair rsk(const Permutation& perm) {
  TableauPair tp;
  auto& P = tp.insertion.rows;
  auto& Q = tp.recording.rows;
  int step = 0;
  for (int x : perm.values()) {
    ++step;
    std::size_t row = 0;
    while (true) {
      if (row == P.size()) {
        P.push_back({x});
        Q.push_back({step});
        break;
      }
      auto& r = P[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        Q[row].push_back(step);
        break;
      }
      std::swap(*it, x);
      ++row;
    }
  }
  return tp;
}

Partition shape(const Permutation& perm) { return rsk(perm).insertion.shape(); }

std::size_t longest_decreasing(const Permutation& perm) {
  const auto v = perm.values();
  std::vector<std::size_t> best(v.size(), 1);
  std::size_t overall = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (v[j] > v[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    overall = std::max(overall, best[i]);
  }
  return overall;
}

std::size_t longest_k21_avoiding(const Permutation& perm, unsigned k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (perm.size() > 16) throw cap_exceeded("longest_k21_avoiding: n must be at most 16");
  const auto v = perm.values();
  const std::size_t n = v.size();

  // chosen_val[i] / chain[i]: value and longest decreasing chain ending at the
  // i-th chosen entry.
  std::vector<int> chosen_val;
  std::vector<unsigned> chain;
  std::size_t best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (chosen_val.size() + (n - pos) <= best) return;
    if (pos == n) {
      best = chosen_val.size();
      return;
    }
    unsigned longest = 1;
    for (std::size_t i = 0; i < chosen_val.size(); ++i) {
      if (chosen_val[i] > v[pos]) longest = std::max(longest, chain[i] + 1);
    }
    if (longest < k) {
      chosen_val.push_back(v[pos]);
      chain.push_back(longest);
      rec(pos + 1);
      chosen_val.pop_back();
      chain.pop_back();
    }
    rec(pos + 1);
  };
  rec(0);
  return best;
}

bool shape_membership_321p1(const Partition& lambda) {
  if (lambda.rows() <= 2) return true;
  return lambda.rows() == 3 && lambda.part(2) == 1;
}

bool shape_membership_321p1(const Permutation& perm) { return shape_membership_321p1(shape(perm)); }

std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
  const int n = lambda.weight();
  if (n > kMaxSytEnumerationWeight) {
    throw cap_exceeded("enumerate_syt: weight " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxSytEnumerationWeight));
  }
  std::vector<StandardTableau> out;
  StandardTableau cur;
  cur.rows.resize(lambda.rows());
  // Place 1..n one at a time in any cell that keeps the filled region a
  // partition shape inside lambda.
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < lambda.rows(); ++r) {
      const auto len = cur.rows[r].size();
      if (static_cast<int>(len) >= lambda.part(r)) continue;
      if (r > 0 && cur.rows[r - 1].size() <= len) continue;
      cur.rows[r].push_back(next);
      rec(next + 1);
      cur.rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

} // namespace permlab
