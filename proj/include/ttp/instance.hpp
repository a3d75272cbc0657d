#pragma once

#include <iosfwd>
#include <vector>

#include "ttp/rational.hpp"

namespace ttp {

enum class InstanceFormat { plain, tsplib_full_matrix };
enum class InstanceKind { unit, circle, euclidean_random };

// Symmetric metric on n venues. Immutable after construction; construction
// checks all invariants (even n >= 4, zero diagonal, symmetry, triangle
// inequality) exactly and reports the lexicographically smallest violation.
class DistanceMatrix {
 public:
  static DistanceMatrix from_entries(int n, std::vector<Rat> entries);

  int size() const { return n_; }
  const Rat& operator()(int i, int j) const { return d_[i * n_ + j]; }

 private:
  DistanceMatrix() = default;
  int n_ = 0;
  std::vector<Rat> d_;  // row-major n*n
};

struct InstanceStats {
  std::vector<Rat> s;  // s[i] = sum of distances incident on venue i
  Rat delta;           // sum of all s[i], i.e. twice the total edge weight
};

DistanceMatrix load_instance(std::istream& in, InstanceFormat format);
void save_instance(const DistanceMatrix& m, std::ostream& out);

// unit: all off-diagonal distances 1.
// circle: n equally spaced points, shortest-arc distance with unit arcs.
// euclidean_random: points drawn on the integer grid [0,1000]^2 from
// mt19937_64(seed); distances are Euclidean lengths rounded UP to the next
// integer, which keeps the triangle inequality exact. Pure in (kind,n,seed).
DistanceMatrix generate_instance(InstanceKind kind, int n,
                                 unsigned long long seed);

InstanceStats instance_stats(const DistanceMatrix& m);

// Distances scaled to a common denominator so combinatorial kernels can run
// on exact 64-bit integers. `scale` receives the denominator used.
std::vector<long long> scale_to_integers(const DistanceMatrix& m,
                                         long long& scale);

}  // namespace ttp
