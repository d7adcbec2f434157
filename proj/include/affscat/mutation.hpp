#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "affscat/instance.hpp"

namespace affscat {

// Matrix mutation at k of an extended exchange matrix: n columns, the first
// n rows are the exchange matrix, any further rows mutate by the same rule.
Mat mutate(const Mat& extended, int k);

// mu_word with the word read right to left: the last letter acts first.
Mat mutate_word(const Mat& extended, const std::vector<int>& word);

// The mutation map: adjoin x as a row below b, mutate along the word and
// read off the last row.
Vec eta(const Mat& b, const std::vector<int>& word, const Vec& x);

std::vector<int> sign_vector(const Vec& x);

struct ProbeResult {
  bool distinguished = false;
  std::vector<int> witness;  // a word separating the sign vectors
  long long words = 0;       // words examined
};

// Compares sign vectors of eta^b_k(x) and eta^b_k(y) over all words of length
// at most max_length without immediate repetitions (mutation is an
// involution). A separating word proves different b-classes; otherwise the
// result is only evidence up to that length.
ProbeResult b_class_probe(const Mat& b, const Vec& x, const Vec& y, int max_length);

struct Discrepancy {
  std::string kind;
  Vec p, q;
};

struct FanComparison {
  // Codimension-1 faces of the cluster fan image against the walls.
  int faces = 0;
  int faces_outside_walls = 0;
  int walls_without_faces = 0;
  // Sampled pairs.
  int pairs = 0;
  int unresolved = 0;  // a point outside every enumerated cone
  int same_cone = 0;
  int exact_discrepancies = 0;
  int probe_contradictions = 0;  // scattering-equivalent but separated by mutation
  int probe_separated = 0;
  int probe_inconclusive = 0;
  std::vector<Discrepancy> discrepancies;

  bool walls_match() const { return faces_outside_walls == 0 && walls_without_faces == 0; }
  bool ok() const { return walls_match() && exact_discrepancies == 0 && probe_contradictions == 0; }
};

// Samples are integer points in a box drawn from a generator seeded with seed.
FanComparison fans_compare(const Instance& inst, int max_height, int k, int probe_length, int samples,
                           std::uint64_t seed, std::size_t element_cap = 200000);

}  // namespace affscat
