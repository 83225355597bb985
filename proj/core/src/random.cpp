#include "polar/random.hpp"

#include "polar/errors.hpp"

namespace polar {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below needs a positive bound");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  Rng mix(seed ^ h);
  mix.next();
  Rng mix2(mix.next() ^ (index * 0x9e3779b97f4a7c15ull));
  return mix2.next();
}

Rational sample_rational(Rng& rng, unsigned height) {
  if (height < 1) throw InvalidArgument("height must be positive");
  auto h = static_cast<std::int64_t>(height);
  while (true) {
    std::int64_t num = rng.between(-h, h);
    std::int64_t den = rng.between(1, h);
    Integer g;
    Integer a(static_cast<long>(num)), b(static_cast<long>(den));
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g == 1) return make_rational(a, b);
  }
}

}  // namespace polar
