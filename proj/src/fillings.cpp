#include "horn/fillings.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace horn {

FillingMatrix::FillingMatrix(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("FillingMatrix: r < 1");
  data_.assign(static_cast<std::size_t>(r) * (r + 1) / 2, 0);
}

std::size_t FillingMatrix::offset(int l, int k) const {
  if (l < 1 || l > r_ || k < 1 || k > l) throw std::out_of_range("FillingMatrix index");
  return static_cast<std::size_t>(l) * (l - 1) / 2 + static_cast<std::size_t>(k) - 1;
}

std::string FillingMatrix::str() const {
  std::ostringstream os;
  for (int l = 1; l <= r_; ++l) {
    if (l > 1) os << "; ";
    for (int k = 1; k <= l; ++k) {
      if (k > 1) os << ' ';
      os << at(l, k);
    }
  }
  return os.str();
}

bool is_valid_filling(const FillingMatrix& f, const PartitionTriple& pt) {
  const int r = pt.length();
  if (f.r() != r) return false;
  const auto& lam = pt.lambda;
  const auto& mu = pt.mu;
  const auto& nu = pt.nu;
  for (int l = 1; l <= r; ++l) {
    long s = 0;
    for (int k = 1; k <= l; ++k) s += f.at(l, k);
    if (lam.part(l) + s != nu.part(l)) return false;  // (e1)
  }
  for (int k = 1; k <= r; ++k) {
    long s = 0;
    for (int l = k; l <= r; ++l) s += f.at(l, k);
    if (s != mu.part(k)) return false;  // (e2)
  }
  for (int l = 1; l < r; ++l) {
    for (int p = 0; p < l; ++p) {
      long lhs = lam.part(l + 1), rhs = lam.part(l);
      for (int k = 1; k <= p + 1; ++k) lhs += f.at(l + 1, k);
      for (int k = 1; k <= p; ++k) rhs += f.at(l, k);
      if (lhs > rhs) return false;  // (e3)
    }
  }
  for (int k = 1; k < r; ++k) {
    for (int p = k; p < r; ++p) {
      long lhs = 0, rhs = 0;
      for (int l = k + 1; l <= p + 1; ++l) lhs += f.at(l, k + 1);
      for (int l = k; l <= p; ++l) rhs += f.at(l, k);
      if (lhs > rhs) return false;  // (e4)
    }
  }
  return true;
}

namespace {

// Row-by-row assignment. Within row l the entries are chosen in column order
// with values ascending, which makes the visit order row-major lexicographic.
// Pruning: (e1) fixes each row's total, (e2) caps column budgets, (e3) is
// checked as soon as a prefix is complete, (e4) once a row is complete.
struct FillingSearch {
  const PartitionTriple& pt;
  const std::function<bool(const FillingMatrix&)>& visit;
  int r;
  FillingMatrix f;
  std::vector<long> col_used;   // per column, rows assigned so far
  std::vector<long> row_need;   // nu_l - lambda_l
  std::vector<long> tail_need;  // sum of row_need for rows > l
  bool stopped = false;

  FillingSearch(const PartitionTriple& p, const std::function<bool(const FillingMatrix&)>& v)
      : pt(p), visit(v), r(p.length()), f(p.length()) {
    col_used.assign(static_cast<std::size_t>(r) + 1, 0);
    row_need.assign(static_cast<std::size_t>(r) + 1, 0);
    tail_need.assign(static_cast<std::size_t>(r) + 2, 0);
  }

  bool feasible_start() {
    for (int l = 1; l <= r; ++l) {
      row_need[static_cast<std::size_t>(l)] = pt.nu.part(l) - pt.lambda.part(l);
      if (row_need[static_cast<std::size_t>(l)] < 0) return false;
    }
    for (int l = r; l >= 1; --l)
      tail_need[static_cast<std::size_t>(l)] =
          tail_need[static_cast<std::size_t>(l) + 1] + row_need[static_cast<std::size_t>(l)];
    return true;
  }

  // (e3) with rows (l-1, l) and prefix length c on row l, c <= l-1.
  bool prefix_ok(int l, int c) const {
    long lhs = pt.lambda.part(l), rhs = pt.lambda.part(l - 1);
    for (int k = 1; k <= c; ++k) lhs += f.at(l, k);
    for (int k = 1; k < c; ++k) rhs += f.at(l - 1, k);
    return lhs <= rhs;
  }

  // (e4) with p = l-1 against every column pair, once row l is complete.
  bool row_complete_ok(int l) const {
    for (int k = 1; k < l; ++k) {
      long lhs = 0, rhs = 0;
      for (int lp = k + 1; lp <= l; ++lp) lhs += f.at(lp, k + 1);
      for (int lp = k; lp <= l - 1; ++lp) rhs += f.at(lp, k);
      if (lhs > rhs) return false;
    }
    return true;
  }

  // Remaining column budgets must exactly absorb the remaining row totals.
  bool budget_ok(int next_row) const {
    long budget = 0;
    for (int k = 1; k <= r; ++k) budget += pt.mu.part(k) - col_used[static_cast<std::size_t>(k)];
    return budget == tail_need[static_cast<std::size_t>(next_row)];
  }

  void fill_row(int l, int k, long remaining) {
    if (stopped) return;
    if (k == l) {
      const long need = pt.mu.part(k) - col_used[static_cast<std::size_t>(k)];
      if (remaining > need) return;
      f.at(l, k) = remaining;
      col_used[static_cast<std::size_t>(k)] += remaining;
      if (row_complete_ok(l) && budget_ok(l + 1)) {
        if (l == r) {
          bool cols_exact = true;
          for (int kk = 1; kk <= r; ++kk)
            if (col_used[static_cast<std::size_t>(kk)] != pt.mu.part(kk)) cols_exact = false;
          if (cols_exact && !visit(f)) stopped = true;
        } else {
          fill_row(l + 1, 1, row_need[static_cast<std::size_t>(l) + 1]);
        }
      }
      col_used[static_cast<std::size_t>(k)] -= remaining;
      f.at(l, k) = 0;
      return;
    }
    const long cap = std::min(remaining, pt.mu.part(k) - col_used[static_cast<std::size_t>(k)]);
    for (long val = 0; val <= cap && !stopped; ++val) {
      f.at(l, k) = val;
      col_used[static_cast<std::size_t>(k)] += val;
      if (l == 1 || prefix_ok(l, k)) fill_row(l, k + 1, remaining - val);
      col_used[static_cast<std::size_t>(k)] -= val;
      f.at(l, k) = 0;
    }
  }

  void run() {
    if (!feasible_start()) return;
    if (pt.mu.sum() != tail_need[1]) return;
    fill_row(1, 1, row_need[1]);
  }
};

}  // namespace

void for_each_filling(const PartitionTriple& pt,
                      const std::function<bool(const FillingMatrix&)>& visit) {
  FillingSearch search(pt, visit);
  search.run();
}

std::vector<FillingMatrix> enumerate_fillings(const PartitionTriple& pt) {
  std::vector<FillingMatrix> out;
  for_each_filling(pt, [&](const FillingMatrix& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

long lr_coefficient(const PartitionTriple& pt) {
  long count = 0;
  for_each_filling(pt, [&](const FillingMatrix&) {
    if (count == std::numeric_limits<long>::max())
      throw std::overflow_error("lr_coefficient: count exceeds 64-bit range");
    ++count;
    return true;
  });
  return count;
}

bool lr_positive(const PartitionTriple& pt) {
  bool found = false;
  for_each_filling(pt, [&](const FillingMatrix&) {
    found = true;
    return false;
  });
  return found;
}

long lr_of_triple(const HornTriple& t) {
  return lr_coefficient(partition_triple(t));
}

bool lambda_membership(const PartitionTriple& pt, int n) {
  const int r = pt.length();
  if (r > n) throw std::invalid_argument("lambda_membership: r > n");
  if (pt.lambda.sum() + pt.mu.sum() != pt.nu.sum()) return false;
  if (r >= 1 && pt.nu.part(1) > n - r) return false;
  return lr_positive(pt);
}

PartitionTriple reduced_partitions(const PartitionTriple& pt, int a, int b) {
  const int r = pt.length();
  const int c = a + b;
  if (a < 0 || b < 0 || c > r) throw std::invalid_argument("reduced_partitions: bad (a,b)");
  auto drop = [](const Partition& p, int upto) {
    std::vector<long> parts = p.parts();
    for (int i = 0; i < upto; ++i) --parts[static_cast<std::size_t>(i)];
    return Partition(std::move(parts));
  };
  return PartitionTriple{drop(pt.lambda, a), drop(pt.mu, b), drop(pt.nu, c)};
}

FillingMatrix unreduce_filling(const FillingMatrix& ft, int a, int b) {
  if (a < 0 || b < 0 || a + b > ft.r())
    throw std::invalid_argument("unreduce_filling: bad (a,b)");
  FillingMatrix f = ft;
  for (int k = 1; k <= b; ++k) ++f.at(k + a, k);
  return f;
}

}  // namespace horn
