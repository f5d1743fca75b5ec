#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "latsize/io.hpp"

namespace latsize {

struct GenOptions {
  int dim = 2;
  int count = 1;
  std::int64_t max_coord = 12;
  int num_points = 6;
  std::uint64_t seed = 0;
};

// Deterministic instance generator: mt19937_64 has a pinned output sequence,
// and the modulo draw keeps the stream compiler-independent (the slight bias
// is irrelevant for fuzzing). Degenerate draws are emitted as-is; consumers
// must cope.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const GenOptions& opts) : opts_(opts), rng_(opts.seed) {}

  PolytopeDocument next() {
    PolytopeDocument doc;
    doc.dim = opts_.dim;
    doc.name = "gen-" + std::to_string(opts_.seed) + "-" + std::to_string(index_++);
    for (int i = 0; i < opts_.num_points; ++i) {
      std::vector<std::int64_t> p;
      for (int c = 0; c < opts_.dim; ++c)
        p.push_back(static_cast<std::int64_t>(rng_() %
                                              static_cast<std::uint64_t>(opts_.max_coord + 1)));
      doc.points.push_back(std::move(p));
    }
    return doc;
  }

 private:
  GenOptions opts_;
  std::mt19937_64 rng_;
  int index_ = 0;
};

}  // namespace latsize
