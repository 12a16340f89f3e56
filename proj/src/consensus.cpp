#include "jfactor/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "jfactor/dshb.hpp"
#include "jfactor/errors.hpp"
#include "jfactor/rhb.hpp"
#include "jfactor/sds.hpp"

namespace jfactor {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::phase1: return "phase1";
    case Phase::phase2: return "phase2";
    case Phase::phase3: return "phase3";
  }
  return "?";
}

const char* phase2_method_name(Phase2Method m) {
  switch (m) {
    case Phase2Method::rhb: return "rhb";
    case Phase2Method::dshb: return "dshb";
    case Phase2Method::sds_left: return "sds-left";
    case Phase2Method::sds_right: return "sds-right";
    case Phase2Method::t_sequence: return "t-factors";
  }
  return "?";
}

const char* intra_method_name(IntraMethod m) {
  switch (m) {
    case IntraMethod::dense: return "dense";
    case IntraMethod::one_peer_exp: return "one-peer-exp";
  }
  return "?";
}

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

std::int64_t log2_exact(std::int64_t v) {
  std::int64_t e = 0;
  while (v > 1) {
    v >>= 1;
    ++e;
  }
  return e;
}

// (I + P^shift)/2 on a cluster of the given size: agent r averages with
// agent (r + shift) mod size.
SparseMatrix half_shift_mix(std::int64_t size, std::int64_t shift) {
  std::vector<SparseMatrix::Entry> es;
  const Rational half(1, 2);
  for (std::int64_t r = 0; r < size; ++r) {
    es.push_back({r, r, half});
    es.push_back({r, (r + shift) % size, half});
  }
  return SparseMatrix::from_triplets(size, size, std::move(es));
}

}  // namespace

std::vector<SparseMatrix> intra_cluster_schedule(const Partition& partition, IntraMethod method) {
  if (method == IntraMethod::dense) {
    return {block_diag_j(partition)};
  }

  std::vector<std::int64_t> exps(static_cast<std::size_t>(partition.tau()));
  std::int64_t q = 0;
  for (std::int64_t k = 1; k <= partition.tau(); ++k) {
    const std::int64_t nk = partition.part(k);
    if (!is_power_of_two(nk)) throw NotPowerOfTwo(k, nk);
    exps[static_cast<std::size_t>(k - 1)] = log2_exact(nk);
    q = std::max(q, exps[static_cast<std::size_t>(k - 1)]);
  }

  std::vector<SparseMatrix> rounds;
  rounds.reserve(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    SparseMatrix round(0, 0);
    for (std::int64_t k = 1; k <= partition.tau(); ++k) {
      const std::int64_t nk = partition.part(k);
      const SparseMatrix block = i < exps[static_cast<std::size_t>(k - 1)]
                                     ? half_shift_mix(nk, std::int64_t{1} << i)
                                     : SparseMatrix::identity(nk);
      round = direct_sum(round, block);
    }
    rounds.push_back(std::move(round));
  }
  return rounds;
}

MixingSchedule build_schedule(const Partition& partition, Phase2Method phase2, IntraMethod intra,
                              bool reverse_t_order) {
  MixingSchedule schedule{{}, partition};
  const std::vector<SparseMatrix> intra_rounds = intra_cluster_schedule(partition, intra);

  for (std::size_t i = 0; i < intra_rounds.size(); ++i) {
    schedule.rounds.push_back(
        {intra_rounds[i], Phase::phase1, "intra round " + std::to_string(i + 1)});
  }

  switch (phase2) {
    case Phase2Method::rhb:
      schedule.rounds.push_back({rhb_factorize(partition).A, Phase::phase2, "A_rhb"});
      break;
    case Phase2Method::dshb:
      schedule.rounds.push_back({dshb_factorize(partition).A, Phase::phase2, "A_dshb"});
      break;
    case Phase2Method::sds_left:
      schedule.rounds.push_back({sds_factorize(partition).a_left, Phase::phase2, "A_L"});
      break;
    case Phase2Method::sds_right:
      schedule.rounds.push_back({sds_factorize(partition).a_right, Phase::phase2, "A_R"});
      break;
    case Phase2Method::t_sequence: {
      const auto sds = sds_factorize(partition);
      const std::int64_t tau = partition.tau();
      // Applied left products accumulate right-to-left, so emitting levels
      // tau-1 .. 1 realizes a_left; the reverse realizes a_right. That^(tau)
      // is the identity and is skipped.
      if (!reverse_t_order) {
        for (std::int64_t k = tau - 1; k >= 1; --k) {
          schedule.rounds.push_back({sds.hat_factors[static_cast<std::size_t>(k - 1)],
                                     Phase::phase2, "T_hat_" + std::to_string(k)});
        }
      } else {
        for (std::int64_t k = 1; k <= tau - 1; ++k) {
          schedule.rounds.push_back({sds.hat_factors[static_cast<std::size_t>(k - 1)],
                                     Phase::phase2, "T_hat_" + std::to_string(k)});
        }
      }
      break;
    }
  }

  for (std::size_t i = 0; i < intra_rounds.size(); ++i) {
    schedule.rounds.push_back(
        {intra_rounds[i], Phase::phase3, "intra round " + std::to_string(i + 1)});
  }
  return schedule;
}

SparseMatrix schedule_product(const MixingSchedule& schedule) {
  SparseMatrix acc = SparseMatrix::identity(schedule.n());
  for (const Round& r : schedule.rounds) acc = matmul(r.matrix, acc);
  return acc;
}

std::vector<double> random_state(std::int64_t n, std::int64_t dim, std::uint64_t seed) {
  if (n < 1 || dim < 1) throw std::invalid_argument("random_state needs n >= 1 and dim >= 1");
  std::mt19937_64 engine(seed);
  std::vector<double> out(static_cast<std::size_t>(n * dim));
  for (double& v : out) {
    // 53-bit mantissa taken straight from the generator keeps the stream
    // identical across standard libraries.
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    v = 2.0 * u - 1.0;
  }
  return out;
}

ConsensusTrace simulate(const MixingSchedule& schedule, const std::vector<double>& x0,
                        std::int64_t dim, double tolerance, std::uint64_t seed) {
  const std::int64_t n = schedule.n();
  if (dim < 1) throw std::invalid_argument("simulate needs dim >= 1");
  if (!(tolerance > 0)) throw std::invalid_argument("simulate needs tolerance > 0");
  if (static_cast<std::int64_t>(x0.size()) != n * dim) {
    throw ShapeError("state size " + std::to_string(x0.size()) + " does not match n*dim");
  }

  ConsensusTrace trace;
  trace.n = n;
  trace.dim = dim;
  trace.seed = seed;
  trace.tolerance = tolerance;

  std::vector<double> mean(static_cast<std::size_t>(dim), 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) {
      mean[static_cast<std::size_t>(j)] += x0[static_cast<std::size_t>(i * dim + j)];
    }
  }
  for (double& v : mean) v /= static_cast<double>(n);

  auto deviation = [&](const std::vector<double>& state) {
    double worst = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = 0; j < dim; ++j) {
        worst = std::max(worst, std::abs(state[static_cast<std::size_t>(i * dim + j)] -
                                         mean[static_cast<std::size_t>(j)]));
      }
    }
    return worst;
  };

  std::vector<double> state = x0;
  trace.states.push_back(state);
  trace.errors.push_back(deviation(state));

  for (const Round& round : schedule.rounds) {
    std::vector<double> next(static_cast<std::size_t>(n * dim), 0.0);
    for (const auto& e : round.matrix.entries()) {
      const double w = to_double(e.value);
      for (std::int64_t j = 0; j < dim; ++j) {
        next[static_cast<std::size_t>(e.row * dim + j)] +=
            w * state[static_cast<std::size_t>(e.col * dim + j)];
      }
    }
    state = std::move(next);
    trace.states.push_back(state);
    trace.errors.push_back(deviation(state));
    trace.round_costs.emplace_back(nnz(round.matrix), d_max(round.matrix));
  }

  trace.reached = trace.errors.back() <= tolerance;
  return trace;
}

CostReport cost_report(const Partition& partition) {
  CostReport report{partition, {}, {}};
  const std::int64_t tau = partition.tau();

  const auto rhb = rhb_factorize(partition);
  report.rows.push_back({"rhb", nnz(rhb.A), d_max(rhb.A), 1});

  const auto dshb = dshb_factorize(partition);
  report.rows.push_back({"dshb", nnz(dshb.A), d_max(dshb.A), 1});

  const auto sds = sds_factorize(partition);
  report.rows.push_back({"sds-left", nnz(sds.a_left), d_max(sds.a_left), 1});
  report.rows.push_back({"sds-right", nnz(sds.a_right), d_max(sds.a_right), 1});

  std::int64_t t_nnz = 0;
  std::int64_t t_dmax = 0;
  for (std::int64_t k = 1; k <= tau - 1; ++k) {
    const auto& hat = sds.hat_factors[static_cast<std::size_t>(k - 1)];
    report.t_round_costs.emplace_back(nnz(hat), d_max(hat));
    t_nnz = std::max(t_nnz, nnz(hat));
    t_dmax = std::max(t_dmax, d_max(hat));
  }
  report.rows.push_back({"t-factors", t_nnz, t_dmax, tau - 1});
  return report;
}

}  // namespace jfactor
