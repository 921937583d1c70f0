#include "gaudin/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gaudin {

Perm Perm::identity(size_t n) {
  Perm p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Perm Perm::from_images(std::vector<uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint8_t v : images) {
    if (v >= images.size() || seen[v]) throw std::invalid_argument("Perm: not a bijection");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::transposition(size_t n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img_[static_cast<size_t>(a)], p.img_[static_cast<size_t>(b)]);
  return p;
}

Perm Perm::from_cycle(size_t n, const std::vector<int>& cyc) {
  Perm p = identity(n);
  for (size_t i = 0; i < cyc.size(); ++i)
    p.img_[static_cast<size_t>(cyc[i])] = static_cast<uint8_t>(cyc[(i + 1) % cyc.size()]);
  std::vector<bool> seen(n, false);
  for (int c : cyc) {
    if (c < 0 || static_cast<size_t>(c) >= n || seen[static_cast<size_t>(c)])
      throw std::invalid_argument("Perm::from_cycle: bad cycle");
    seen[static_cast<size_t>(c)] = true;
  }
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) p.img_[img_[i]] = static_cast<uint8_t>(i);
  return p;
}

int Perm::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> c;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j));
      j = img_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type_on(uint32_t mask) const {
  std::vector<int> lens;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (!(mask & (1u << i)) || seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      if (!(mask & (1u << j)))
        throw std::invalid_argument("cycle_type_on: permutation leaves the mask");
      seen[j] = true;
      ++len;
      j = img_[j];
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return lens;
}

uint32_t Perm::support() const {
  uint32_t m = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) m |= (1u << i);
  return m;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
  return v;
}

Perm Perm::from_one_line(const std::vector<int>& images_one_based) {
  std::vector<uint8_t> img(images_one_based.size());
  for (size_t i = 0; i < img.size(); ++i) {
    int v = images_one_based[i] - 1;
    if (v < 0 || static_cast<size_t>(v) >= img.size())
      throw std::invalid_argument("Perm::from_one_line: entry out of range");
    img[i] = static_cast<uint8_t>(v);
  }
  return from_images(std::move(img));
}

std::string Perm::to_string() const {
  std::string s;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i] + 1);
  }
  return s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Perm: size mismatch");
  Perm p;
  p.img_.resize(a.n());
  for (size_t i = 0; i < a.n(); ++i) p.img_[i] = a.img_[b.img_[i]];
  return p;
}

std::vector<int> mask_elements(uint32_t mask) {
  std::vector<int> v;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) v.push_back(i);
  return v;
}

uint32_t full_mask(size_t n) { return n >= 32 ? 0xffffffffu : ((1u << n) - 1u); }

std::vector<uint32_t> k_subsets_of(uint32_t mask, int k) {
  std::vector<int> elems = mask_elements(mask);
  std::vector<uint32_t> out;
  if (k < 0 || static_cast<size_t>(k) > elems.size()) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    uint32_t s = 0;
    for (int i : idx) s |= (1u << elems[static_cast<size_t>(i)]);
    out.push_back(s);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == static_cast<int>(elems.size()) - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint32_t> all_submasks(uint32_t mask) {
  std::vector<uint32_t> out;
  uint32_t s = 0;
  while (true) {
    out.push_back(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
  return out;
}

std::vector<Perm> all_perms(size_t n) {
  return perms_moving_within(n, full_mask(n));
}

std::vector<Perm> perms_moving_within(size_t n, uint32_t mask) {
  std::vector<int> elems = mask_elements(mask);
  std::vector<int> images = elems;
  std::vector<Perm> out;
  std::sort(images.begin(), images.end());
  do {
    std::vector<uint8_t> img(n);
    for (size_t i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i);
    for (size_t i = 0; i < elems.size(); ++i)
      img[static_cast<size_t>(elems[i])] = static_cast<uint8_t>(images[i]);
    out.push_back(Perm::from_images(std::move(img)));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SupportedPerm> all_supported_perms(size_t n) {
  std::vector<SupportedPerm> out;
  uint32_t full = full_mask(n);
  for (uint32_t z = 0; z <= full; ++z)
    for (const Perm& p : perms_moving_within(n, z)) out.push_back({p, z});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gaudin
