#include "gaudin/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gaudin {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition();
  t.resize(static_cast<size_t>(parts_[0]));
  for (size_t j = 0; j < t.size(); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p > static_cast<int>(j)) ++count;
    t[j] = count;
  }
  return Partition(std::move(t));
}

std::vector<Partition> Partition::corners_removed() const {
  std::vector<Partition> out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    const bool corner = (i + 1 == parts_.size()) || (parts_[i] > parts_[i + 1]);
    if (!corner) continue;
    std::vector<int> p = parts_;
    p[i] -= 1;
    out.emplace_back(std::move(p));
  }
  return out;
}

unsigned long Partition::tableau_count() const {
  const Partition conj = conjugate();
  mpz_class num = 1;
  for (int v = 2; v <= size(); ++v) num *= v;
  mpz_class den = 1;
  for (size_t i = 0; i < parts_.size(); ++i) {
    for (int j = 0; j < parts_[i]; ++j) {
      const int hook = parts_[i] - j + conj.part(static_cast<size_t>(j)) - static_cast<int>(i) - 1;
      den *= hook;
    }
  }
  mpz_class q = num / den;
  if (q * den != num) throw std::logic_error("tableau_count: hook product does not divide n!");
  return q.get_ui();
}

std::vector<std::vector<std::vector<int>>> Partition::standard_tableaux() const {
  using Tab = std::vector<std::vector<int>>;
  const int n = size();
  if (n == 0) return {Tab{}};
  std::vector<Tab> out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    const bool corner = (i + 1 == parts_.size()) || (parts_[i] > parts_[i + 1]);
    if (!corner) continue;
    std::vector<int> p = parts_;
    p[i] -= 1;
    for (Tab t : Partition(p).standard_tableaux()) {
      if (t.size() <= i) t.resize(i + 1);
      t[i].push_back(n);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  s += ")";
  return s;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    prefix.push_back(p);
    gen_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(n, n, prefix, out);
  return out;
}

std::vector<Rat> central_character(const Partition& shape) {
  static std::map<std::vector<int>, std::vector<Rat>> cache;
  auto it = cache.find(shape.parts());
  if (it != cache.end()) return it->second;

  const int n = shape.size();
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  const bool single_column = shape.rows() == static_cast<size_t>(n);
  c[0] = single_column ? Rat(1) : Rat(0);
  if (n > 0) {
    std::vector<std::vector<Rat>> below;
    for (const Partition& mu : shape.corners_removed()) below.push_back(central_character(mu));
    for (int k = 1; k <= n; ++k) {
      Rat sum(0);
      for (const auto& cm : below)
        if (k - 1 < static_cast<int>(cm.size())) sum += cm[static_cast<size_t>(k - 1)];
      c[static_cast<size_t>(k)] = sum / k;
    }
  }
  cache.emplace(shape.parts(), c);
  return c;
}

Rat central_scalar(const Partition& shape, int k) {
  const int n = shape.size();
  if (k < 0 || k > n) throw std::invalid_argument("central_scalar: index out of range");
  mpz_class fact = 1;
  for (int v = 2; v <= n; ++v) fact *= v;
  Rat ratio(fact, mpz_class(shape.tableau_count()));
  ratio.canonicalize();
  return ratio * central_character(shape)[static_cast<size_t>(k)];
}

}  // namespace gaudin
