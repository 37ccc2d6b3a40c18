#include "ekzero/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "ekzero/cauchy.hpp"
#include "ekzero/roots.hpp"
#include "ekzero/theorems.hpp"

namespace ekzero {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Uniform in the open interval (0, 1): midpoints of 2^52 equal cells.
double unit_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1p-52;
}

double draw(std::uint64_t seed, std::int64_t sample, Eigen::Index coeff, double lo, double hi) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(sample + 1)));
  h = splitmix(h ^ (0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(coeff + 1)));
  double v = lo + unit_open(h) * (hi - lo);
  if (v <= lo) v = std::nextafter(lo, hi);
  if (v >= hi) v = std::nextafter(hi, lo);
  return v;
}

std::pair<double, double> class_interval(BenchClass::Kind kind) {
  return kind == BenchClass::Kind::I ? std::pair{0.0, 10.0} : std::pair{1.0, 5.0};
}

using SampleEval = std::function<std::vector<double>(const Polynomial&)>;

// Evaluates `eval` on the class's samples, in parallel over sample indices.
// Failed samples (numeric errors) are replaced by drawing further indices, so
// the final count is exact and independent of the worker count.
std::vector<std::vector<double>> collect_samples(const BenchClass& c, int workers,
                                                 const SampleEval& eval) {
  const int count = c.samples;
  if (count < 1) {
    throw validation_error(errc::hypothesis_violated, "bench needs at least one sample");
  }
  std::vector<std::optional<std::vector<double>>> slots(count);
  std::vector<std::int64_t> failed;

  // Numeric failures skip the sample (a replacement is drawn below);
  // validation errors mean the whole table is ill-posed and propagate.
  std::mutex fatal_mutex;
  std::exception_ptr fatal;

  auto run_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      try {
        slots[i] = eval(sample_polynomial(c, i));
      } catch (const numeric_error&) {
        slots[i] = std::nullopt;
      } catch (...) {
        std::lock_guard<std::mutex> lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    run_range(0, count);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);

  std::int64_t next = count;
  const std::int64_t replacement_cap = count + 100LL * count + 100;
  for (int i = 0; i < count; ++i) {
    if (!slots[i]) failed.push_back(i);
    while (!slots[i]) {
      if (next >= replacement_cap) {
        throw numeric_error(errc::non_convergence, "bench: replacement draws exhausted");
      }
      try {
        slots[i] = eval(sample_polynomial(c, next++));
      } catch (const numeric_error&) {
      }
    }
  }
  for (std::int64_t idx : failed) {
    std::fprintf(stderr, "bench: sample %lld skipped, drew a replacement\n",
                 static_cast<long long>(idx));
  }

  std::vector<std::vector<double>> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Lower-middle element for even counts; deterministic under reordering.
double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[(v.size() - 1) / 2];
}

BenchTable build_table(const BenchClass& c, int workers, std::string statistic,
                       const std::vector<std::string>& methods, const SampleEval& eval) {
  const auto samples = collect_samples(c, workers, eval);
  BenchTable t;
  t.statistic = std::move(statistic);
  for (std::size_t m = 0; m < methods.size(); ++m) {
    std::vector<double> column;
    column.reserve(samples.size());
    for (const auto& row : samples) column.push_back(row[m]);
    t.rows.push_back(BenchRow{methods[m], c.degree, median_of(std::move(column))});
  }
  return t;
}

}  // namespace

BenchClass::Kind bench_kind_from_string(const std::string& s) {
  if (s == "I" || s == "i" || s == "1") return BenchClass::Kind::I;
  if (s == "II" || s == "ii" || s == "2") return BenchClass::Kind::II;
  throw validation_error(errc::hypothesis_violated, "unknown class '" + s + "' (want I or II)");
}

std::string to_string(BenchClass::Kind kind) { return kind == BenchClass::Kind::I ? "I" : "II"; }

Polynomial sample_polynomial(const BenchClass& c, std::int64_t index) {
  if (c.degree < 1) {
    throw validation_error(errc::too_short, "bench degree must be >= 1");
  }
  const auto [lo, hi] = class_interval(c.kind);
  Vec coeffs(c.degree + 1);
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) coeffs(j) = draw(c.seed, index, j, lo, hi);
  return Polynomial(std::move(coeffs));
}

BenchTable table_upper_ratios(const BenchClass& c, int workers) {
  const auto eval = [](const Polynomial& p) {
    const double largest = moduli_extremes(all_roots(p)).second;
    return std::vector<double>{
        cauchy_radius(p, 1).value / largest,    ek_bounds(p).upper / largest,
        thm32_bounds(p).upper / largest,        thm33_bounds(p, 1).upper / largest,
        thm33_bounds(p, 2).upper / largest,
    };
  };
  return build_table(c, workers, "upper-bound-ratio",
                     {"cauchy", "ek", "thm32", "thm33-1", "thm33-2"}, eval);
}

BenchTable table_inclusion_radii(const BenchClass& c, int workers) {
  const auto eval = [](const Polynomial& p) {
    const Eigen::Index n = p.degree();
    const double ratio = p[n - 1] / p[n];
    return std::vector<double>{
        cauchy_radius(p, 2).value + ratio,
        thm41_disks(p).inclusion[0].radius,
        cor41_disks(p).inclusion[0].radius,
        thm43_disks(p).inclusion[0].radius,
    };
  };
  return build_table(c, workers, "inclusion-radius", {"cauchy", "thm41", "cor41", "thm43"}, eval);
}

BenchTable table_union_radii(const BenchClass& c, int workers) {
  const auto eval = [](const Polynomial& p) {
    const Eigen::Index n = p.degree();
    const double ratio = p[n - 1] / p[n];
    const double s2 = cauchy_radius(p, 2).value;
    return std::vector<double>{
        std::sqrt(s2 * s2 + ratio * s2),
        thm51_region(p).inclusion[0].radius,
        cor51_region(p).inclusion[0].radius,
    };
  };
  return build_table(c, workers, "union-radius", {"cauchy", "thm51", "cor51"}, eval);
}

std::string to_csv(const BenchTable& t) {
  std::string out = "method,degree,median\n";
  char buf[128];
  for (const auto& row : t.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%.12g\n", row.method.c_str(), row.degree, row.median);
    out += buf;
  }
  return out;
}

std::string to_json(const BenchTable& t) {
  std::ostringstream os;
  os << "{\"statistic\":\"" << t.statistic << "\",\"rows\":[";
  char buf[128];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    std::snprintf(buf, sizeof(buf), "{\"method\":\"%s\",\"degree\":%d,\"median\":%.12g}",
                  row.method.c_str(), row.degree, row.median);
    os << (i ? "," : "") << buf;
  }
  os << "]}";
  return os.str();
}

}  // namespace ekzero
