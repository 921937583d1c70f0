#include "gaudin/irrep.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gaudin {

namespace {

// (row, col) of each letter, 0-based, indexed by letter value (1-based).
std::vector<std::pair<int, int>> letter_positions(const std::vector<std::vector<int>>& tab,
                                                  size_t n) {
  std::vector<std::pair<int, int>> pos(n + 1, {-1, -1});
  for (size_t r = 0; r < tab.size(); ++r)
    for (size_t c = 0; c < tab[r].size(); ++c)
      pos[static_cast<size_t>(tab[r][c])] = {static_cast<int>(r), static_cast<int>(c)};
  return pos;
}

}  // namespace

IrrepModel::IrrepModel(Partition shape)
    : shape_(std::move(shape)), n_(static_cast<size_t>(shape_.size())) {
  tabs_ = shape_.standard_tableaux();
  if (tabs_.size() != shape_.tableau_count())
    throw std::logic_error("IrrepModel: tableau enumeration disagrees with the hook count");

  std::map<std::vector<std::vector<int>>, size_t> index;
  for (size_t t = 0; t < tabs_.size(); ++t) index.emplace(tabs_[t], t);

  const size_t d = tabs_.size();
  for (size_t i = 1; i + 1 <= n_; ++i) {
    Matrix<Rat> m(d, d);
    for (size_t t = 0; t < d; ++t) {
      const auto pos = letter_positions(tabs_[t], n_);
      const auto [r1, c1] = pos[i];
      const auto [r2, c2] = pos[i + 1];
      if (r1 == r2) {
        m.at(t, t) = Rat(1);
      } else if (c1 == c2) {
        m.at(t, t) = Rat(-1);
      } else {
        // Swapping the two letters yields another standard tableau; the
        // axial distance decides the mixing coefficients.
        const int dist = (c2 - r2) - (c1 - r1);
        auto swapped = tabs_[t];
        for (auto& row : swapped)
          for (auto& v : row) {
            if (v == static_cast<int>(i)) v = static_cast<int>(i) + 1;
            else if (v == static_cast<int>(i) + 1) v = static_cast<int>(i);
          }
        for (auto& row : swapped) std::sort(row.begin(), row.end());
        auto it = index.find(swapped);
        if (it == index.end()) throw std::logic_error("IrrepModel: swapped tableau not found");
        const size_t tp = it->second;
        m.at(t, t) = Rat(1) / dist;
        m.at(tp, t) = dist > 0 ? Rat(1) : Rat(1) - Rat(1) / (Rat(dist) * Rat(dist));
      }
    }
    gens_.push_back(std::move(m));
  }
  verify_relations();
  cache_.emplace(Perm::identity(n_), Matrix<Rat>::identity(d));
}

void IrrepModel::verify_relations() const {
  const size_t d = dim();
  const Matrix<Rat> id = Matrix<Rat>::identity(d);
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (!(gens_[i] * gens_[i] == id))
      throw std::logic_error("IrrepModel: transposition matrix does not square to identity");
    if (i + 1 < gens_.size()) {
      const Matrix<Rat>& a = gens_[i];
      const Matrix<Rat>& b = gens_[i + 1];
      if (!(a * b * a == b * a * b))
        throw std::logic_error("IrrepModel: braid relation fails");
    }
    for (size_t j = i + 2; j < gens_.size(); ++j) {
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i]))
        throw std::logic_error("IrrepModel: distant transpositions do not commute");
    }
  }
}

const Matrix<Rat>& IrrepModel::adjacent(size_t i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("IrrepModel::adjacent: index out of range");
  return gens_[i - 1];
}

const Matrix<Rat>& IrrepModel::act(const Perm& p) const {
  if (p.n() != n_) throw std::invalid_argument("IrrepModel::act: rank mismatch");
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;

  // Sort p to the identity by right multiplications with adjacent
  // transpositions at descents; the product of those generators in reverse
  // order is p itself.
  std::vector<size_t> word;
  Perm q = p;
  while (!q.is_identity()) {
    bool found = false;
    for (size_t i = 0; i + 1 < n_; ++i) {
      if (q(static_cast<int>(i)) > q(static_cast<int>(i) + 1)) {
        q = q * Perm::transposition(n_, static_cast<int>(i), static_cast<int>(i) + 1);
        word.push_back(i + 1);  // 1-based generator index
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("IrrepModel::act: no descent in non-identity permutation");
  }
  Matrix<Rat> m = Matrix<Rat>::identity(dim());
  for (auto w = word.rbegin(); w != word.rend(); ++w) m = m * gens_[*w - 1];
  return cache_.emplace(p, std::move(m)).first->second;
}

Matrix<Rat> IrrepModel::act_on(const GroupElemQ& g) const {
  if (g.n() != n_) throw std::invalid_argument("IrrepModel::act_on: rank mismatch");
  Matrix<Rat> out(dim(), dim());
  for (const auto& [p, c] : g.terms()) {
    const Matrix<Rat>& m = act(p);
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = 0; j < dim(); ++j) out.at(i, j) += c * m.at(i, j);
  }
  return out;
}

Matrix<PolyQ> IrrepModel::act_on(const GroupElemPolyQ& g) const {
  if (g.n() != n_) throw std::invalid_argument("IrrepModel::act_on: rank mismatch");
  Matrix<PolyQ> out(dim(), dim());
  for (const auto& [p, c] : g.terms()) {
    const Matrix<Rat>& m = act(p);
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = 0; j < dim(); ++j) {
        if (!is_zero(m.at(i, j))) out.at(i, j) += m.at(i, j) * c;
      }
  }
  return out;
}

}  // namespace gaudin
