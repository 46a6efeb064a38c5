#pragma once

#include "bialg/graded.hpp"

#include <cstdint>

namespace bialg {

struct SampleConfig {
  std::uint64_t seed = 1;
  int max_degree = 2;
  int trials = 32;
};

/// Deterministic sample stream over splitmix64. The exact update rule and
/// the derivation of every sampled object from the raw stream are documented
/// in the README so an independent implementation can reproduce the stream.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [lo, hi] via modulo; bias is irrelevant here.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// Small nonzero rational: numerator in [-3,3] minus 0, denominator 1 or 2.
  Rational coefficient() {
    std::int64_t num = 0;
    while (num == 0) num = range(-3, 3);
    const std::int64_t den = range(1, 2);
    return Rational(num, den);
  }

  /// Polynomial with 1..3 terms of total degree <= max_degree.
  Scalar scalar(int nvars, int max_degree) {
    Scalar out(nvars);
    const int nterms = 1 + static_cast<int>(next() % 3);
    for (int t = 0; t < nterms; ++t) {
      Monomial m(static_cast<size_t>(nvars), 0u);
      int budget = max_degree;
      for (int i = 0; i < nvars; ++i) {
        const int e = static_cast<int>(next() % static_cast<std::uint64_t>(budget + 1));
        m[static_cast<size_t>(i)] = static_cast<unsigned>(e);
        budget -= e;
      }
      out += Scalar::monomial(nvars, std::move(m), coefficient());
    }
    return out;
  }

  Multivector multivector(int rank, int degree, int nvars, int max_degree) {
    return sample_graded<Variance::primal>(rank, degree, nvars, max_degree);
  }

  Form form(int rank, int degree, int nvars, int max_degree) {
    return sample_graded<Variance::dual>(rank, degree, nvars, max_degree);
  }

 private:
  std::uint64_t state_;

  template <Variance V>
  Graded<V> sample_graded(int rank, int degree, int nvars, int max_degree) {
    Graded<V> out(rank, degree, nvars);
    IndexTuple idx;
    enumerate(rank, degree, 0, idx, out, max_degree);
    return out;
  }

  // Basis tuples visited in lexicographic order; each kept with probability
  // 3/4 so samples stay dense but not full.
  template <Variance V>
  void enumerate(int rank, int degree, int start, IndexTuple& idx, Graded<V>& out, int max_degree) {
    if (static_cast<int>(idx.size()) == degree) {
      if (next() % 4 != 0) out.add_component(idx, scalar(out.nvars(), max_degree));
      return;
    }
    for (int i = start; i < rank; ++i) {
      idx.push_back(i);
      enumerate(rank, degree, i + 1, idx, out, max_degree);
      idx.pop_back();
    }
  }
};

}  // namespace bialg
