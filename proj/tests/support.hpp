#pragma once

#include "skein/diagram.hpp"

#include <random>
#include <string>

namespace skein_test {

inline std::string corpus_path(const std::string& name) { return std::string(SKEIN_CORPUS_DIR) + "/" + name; }

// Random slice word from 2n to 2n points, at most max_width points in any slice.
inline skein::SliceWord random_word(std::mt19937& rng, int n, int length, int max_width = 8) {
  using K = skein::SliceToken::Kind;
  std::vector<skein::SliceToken> toks;
  int w = 2 * n;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int left = length; left > 0; --left) {
    int need = std::abs(w - 2 * n) / 2;
    std::vector<K> kinds;
    if (need < left) {
      if (w >= 2) kinds.insert(kinds.end(), {K::CrossPos, K::CrossNeg, K::CrossPos, K::CrossNeg});
      if (w + 2 <= max_width && need + 1 < left) kinds.push_back(K::Cup);
      if (w >= 2 && (w > 2 || n == 0) && need + 1 < left) kinds.push_back(K::Cap);
    }
    if (w < 2 * n && need == left) kinds = {K::Cup};
    if (w > 2 * n && need == left) kinds = {K::Cap};
    if (need < left && w > 2 * n && need + 1 == left) kinds.push_back(K::Cap);
    if (need < left && w < 2 * n && need + 1 == left) kinds.push_back(K::Cup);
    if (kinds.empty()) kinds = {K::Cup};
    K k = kinds[static_cast<std::size_t>(pick(0, static_cast<int>(kinds.size()) - 1))];
    if ((k == K::CrossPos || k == K::CrossNeg) && w < 2) k = K::Cup;
    int pos = 1;
    if (k == K::Cup) pos = pick(1, w + 1);
    else pos = pick(1, w - 1);
    toks.push_back({k, pos});
    w += k == K::Cup ? 2 : k == K::Cap ? -2 : 0;
  }
  while (w < 2 * n) {
    toks.push_back({K::Cup, 1});
    w += 2;
  }
  while (w > 2 * n) {
    toks.push_back({K::Cap, 1});
    w -= 2;
  }
  return skein::SliceWord(2 * n, std::move(toks));
}

}  // namespace skein_test
