#include "wheelgebra/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace wg {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::cycle(int n, const std::vector<int>& cyc) {
  Perm p(n);
  if (cyc.empty()) return p;
  for (size_t k = 0; k + 1 < cyc.size(); ++k) p.img_[cyc[k]] = cyc[k + 1];
  p.img_[cyc.back()] = cyc.front();
  return p;
}

Perm Perm::rotation(int n, int j) {
  std::vector<int> cyc(j);
  std::iota(cyc.begin(), cyc.end(), 0);
  return cycle(n, cyc);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

Perm Perm::after(const Perm& first) const {
  if (degree() != first.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = img_[first(i)];
  return Perm(std::move(out));
}

Perm Perm::block(const Perm& sigma, const std::vector<int>& sizes) {
  if (sigma.degree() != static_cast<int>(sizes.size()))
    throw std::invalid_argument("Perm::block: block count mismatch");
  int total = 0;
  std::vector<int> start(sizes.size());
  for (size_t b = 0; b < sizes.size(); ++b) {
    start[b] = total;
    total += sizes[b];
  }
  // New start of block b = sum of sizes of blocks placed before it.
  std::vector<int> newstart(sizes.size());
  {
    // Block at target position t is sigma^{-1}(t).
    Perm inv = sigma.inverse();
    int acc = 0;
    for (int t = 0; t < sigma.degree(); ++t) {
      newstart[inv(t)] = acc;
      acc += sizes[inv(t)];
    }
  }
  std::vector<int> img(total);
  for (size_t b = 0; b < sizes.size(); ++b)
    for (int k = 0; k < sizes[b]; ++k) img[start[b] + k] = newstart[b] + k;
  return Perm(std::move(img));
}

Perm Perm::block_swap(int m, int n) {
  return block(Perm::cycle(2, {0, 1}), {m, n});
}

Perm Perm::drop(int removed_src, int removed_img) const {
  std::vector<int> img;
  img.reserve(img_.size() - 1);
  for (int i = 0; i < degree(); ++i) {
    if (i == removed_src) continue;
    int v = img_[i];
    img.push_back(v > removed_img ? v - 1 : v);
  }
  return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += "(";
    int j = i;
    bool firstel = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!firstel) out += " ";
      out += std::to_string(j + 1);
      firstel = false;
      j = img_[j];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

int perm_sign(const Perm& p) {
  int sign = 1;
  for (int i = 0; i < p.degree(); ++i)
    for (int j = i + 1; j < p.degree(); ++j)
      if (p(i) > p(j)) sign = -sign;
  return sign;
}

int koszul_sign(const Perm& sigma, const std::vector<Parity>& parities) {
  if (sigma.degree() != static_cast<int>(parities.size()))
    throw std::invalid_argument("koszul_sign: length mismatch");
  int sign = 1;
  for (int i = 0; i < sigma.degree(); ++i)
    for (int j = i + 1; j < sigma.degree(); ++j)
      if (sigma(i) > sigma(j)) sign *= swap_sign(parities[i], parities[j]);
  return sign;
}

int koszul_sign(const Perm& sigma, const std::vector<int>& parities) {
  std::vector<Parity> ps(parities.size());
  for (size_t i = 0; i < parities.size(); ++i)
    ps[i] = Parity{static_cast<uint8_t>(parities[i] & 1), 0};
  return koszul_sign(sigma, ps);
}

int reorder_sign(const std::vector<int>& pos, const std::vector<Parity>& parities) {
  return koszul_sign(Perm(pos), parities);
}

}  // namespace wg
