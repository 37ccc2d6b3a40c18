#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ekzero/polynomial.hpp"

namespace ekzero {

// Random polynomial ensembles: Class I draws coefficients uniformly from the
// open interval (0, 10), Class II from (1, 5).
struct BenchClass {
  enum class Kind { I, II };
  Kind kind = Kind::I;
  int degree = 10;
  int samples = 1000;
  std::uint64_t seed = 0;
};

BenchClass::Kind bench_kind_from_string(const std::string& s);
std::string to_string(BenchClass::Kind kind);

struct BenchRow {
  std::string method;
  int degree = 0;
  double median = 0.0;
};

struct BenchTable {
  std::string statistic;  // upper-bound-ratio | inclusion-radius | union-radius
  std::vector<BenchRow> rows;
};

// Deterministic function of (seed, index): the generator is a SplitMix64 hash
// keyed by (seed, sample index, coefficient index), so parallel sampling gives
// identical results for any worker count.
Polynomial sample_polynomial(const BenchClass& c, std::int64_t index);

// Median over the class's samples of bound / |largest zero| for
// {cauchy s1, ek, thm32, thm33-1, thm33-2}. Every ratio is >= 1.
BenchTable table_upper_ratios(const BenchClass& c, int workers = 1);

// Median radii of the inclusion disks centered at -a_{n-1}/a_n for
// {cauchy s2-disk, thm41, cor41, thm43}.
BenchTable table_inclusion_radii(const BenchClass& c, int workers = 1);

// Median radii of the two-disk unions centered at 0 and -a_{n-1}/a_n for
// {cauchy (s2^2 + (a_{n-1}/a_n) s2)^(1/2), thm51, cor51}.
BenchTable table_union_radii(const BenchClass& c, int workers = 1);

std::string to_csv(const BenchTable& t);
std::string to_json(const BenchTable& t);

}  // namespace ekzero
