#include "pushsort/bench.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <iostream>
#include <map>

namespace pushsort {

namespace {

constexpr int kMaxRejectionAttempts = 10000;

Point2 sample_in_box(Rng& rng, Point2 lo, Point2 hi) {
  return {rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
}

void append_csv_time(std::string& out, double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  out += buf;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t base_seed, int n, int run_index) {
  return mix_seeds(mix_seeds(base_seed, static_cast<std::uint64_t>(n)),
                   static_cast<std::uint64_t>(run_index));
}

WorldState generate_instance(int n, std::uint64_t seed, const BenchConfig& cfg) {
  if (n < 1) {
    throw GenerationFailure("instance size must be at least 1");
  }
  const InstanceGeometry& g = cfg.geometry;
  Rng rng(seed);

  WorldState w;
  w.table = g.table;
  w.robot = g.robot;

  const double R = g.goal_radius;
  const double r = g.object_radius;
  const Point2 goal_lo = w.table.min + Vec2{R, R};
  const Point2 goal_hi = w.table.max - Vec2{R, R};

  // Goal regions: fully on the table, containment interiors disjoint.
  w.goal_for(ObjectKind::kRed) = {ObjectKind::kRed, sample_in_box(rng, goal_lo, goal_hi), R};
  bool placed = false;
  for (int attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
    const Point2 cand = sample_in_box(rng, goal_lo, goal_hi);
    if (distance(cand, w.goal_for(ObjectKind::kRed).center) >= 2.0 * (R - r)) {
      w.goal_for(ObjectKind::kBlue) = {ObjectKind::kBlue, cand, R};
      placed = true;
      break;
    }
  }
  if (!placed) {
    throw GenerationFailure("could not place disjoint goal regions");
  }

  const Point2 obj_lo = w.table.min + Vec2{r, r};
  const Point2 obj_hi = w.table.max - Vec2{r, r};
  for (int i = 0; i < n; ++i) {
    const ObjectKind kind = (i % 2 == 0) ? ObjectKind::kRed : ObjectKind::kBlue;
    bool ok = false;
    for (int attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
      const Point2 cand = sample_in_box(rng, obj_lo, obj_hi);
      bool rejected = false;
      for (const ObjectKind k : kAllKinds) {
        if (distance(cand, w.goal_for(k).center) < w.goal_for(k).radius + r) {
          rejected = true;  // disc would intersect a goal circle
          break;
        }
      }
      if (!rejected) {
        for (const auto& other : w.objects) {
          if (distance(cand, other.footprint.center) < r + other.footprint.radius) {
            rejected = true;
            break;
          }
        }
      }
      if (!rejected) {
        w.objects.push_back({i, kind, {cand, r}});
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw GenerationFailure("table too crowded to place all objects");
    }
  }

  assert(validate(w).empty());
  return w;
}

std::vector<ResultRow> run_experiment(const BenchConfig& cfg) {
  if (cfg.runs_per_n < 10) {
    std::cerr << "warning: runs_per_n = " << cfg.runs_per_n
              << " gives noisy means; 10 or more is recommended\n";
  }

  std::vector<int> ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  const auto row_from = [](const EpisodeTrace& trace, int n, std::uint64_t seed) {
    ResultRow row;
    row.n = n;
    row.seed = seed;
    row.method = trace.method;
    row.total_time_s = trace.total_time;
    row.steps = static_cast<int>(trace.steps.size());
    row.pushes = trace.push_count();
    row.picks = trace.pick_count();
    row.terminated = trace.terminated;
    return row;
  };

  std::vector<ResultRow> rows;
  for (const int n : ns) {
    for (int run = 0; run < cfg.runs_per_n; ++run) {
      const std::uint64_t seed = instance_seed(cfg.base_seed, n, run);
      WorldState w;
      try {
        w = generate_instance(n, seed, cfg);
      } catch (const GenerationFailure& e) {
        std::cerr << "warning: skipping cell n=" << n << " run=" << run << ": " << e.what() << "\n";
        continue;
      }
      rows.push_back(row_from(run_sorter(w, seed, Method::kPickPlaceOnly, cfg.params), n, seed));
      rows.push_back(row_from(run_sorter(w, seed, Method::kPushPlusPickPlace, cfg.params), n, seed));
    }
  }
  return rows;
}

Summary summarize(const std::vector<ResultRow>& rows) {
  assert(rows.size() % 2 == 0);

  std::map<int, std::pair<double, int>> base_by_n;   // sum, count
  std::map<int, std::pair<double, int>> mixed_by_n;
  double speedup_sum = 0.0;
  int pair_count = 0;

  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const ResultRow& base = rows[i];
    const ResultRow& mixed = rows[i + 1];
    assert(base.method == Method::kPickPlaceOnly && mixed.method == Method::kPushPlusPickPlace);
    assert(base.n == mixed.n && base.seed == mixed.seed);

    base_by_n[base.n].first += base.total_time_s;
    base_by_n[base.n].second += 1;
    mixed_by_n[mixed.n].first += mixed.total_time_s;
    mixed_by_n[mixed.n].second += 1;
    if (base.total_time_s > 0.0) {
      speedup_sum += (base.total_time_s - mixed.total_time_s) / base.total_time_s;
      ++pair_count;
    }
  }

  Summary summary;
  for (const auto& [n, acc] : base_by_n) {
    SummaryRow row;
    row.n = n;
    row.mean_time_pickplace_s = acc.first / acc.second;
    row.mean_time_mixed_s = mixed_by_n[n].first / mixed_by_n[n].second;
    summary.per_n.push_back(row);
  }
  summary.overall_speedup_pct = pair_count > 0 ? 100.0 * speedup_sum / pair_count : 0.0;
  return summary;
}

std::string results_to_csv(const std::vector<ResultRow>& rows) {
  std::string out = "n,seed,method,total_time_s,steps,pushes,picks,terminated\n";
  for (const auto& row : rows) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d,%llu,%s,", row.n,
                  static_cast<unsigned long long>(row.seed), to_string(row.method));
    out += buf;
    append_csv_time(out, row.total_time_s);
    std::snprintf(buf, sizeof(buf), ",%d,%d,%d,%s\n", row.steps, row.pushes, row.picks,
                  to_string(row.terminated));
    out += buf;
  }
  return out;
}

std::string summary_to_csv(const Summary& summary) {
  std::string out = "n,mean_time_pickplace_s,mean_time_mixed_s\n";
  for (const auto& row : summary.per_n) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%d,", row.n);
    out += buf;
    append_csv_time(out, row.mean_time_pickplace_s);
    out += ',';
    append_csv_time(out, row.mean_time_mixed_s);
    out += '\n';
  }
  out += "overall_speedup_pct,";
  append_csv_time(out, summary.overall_speedup_pct);
  out += '\n';
  return out;
}

}  // namespace pushsort
