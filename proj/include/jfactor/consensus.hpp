#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jfactor/partition.hpp"
#include "jfactor/sparse_matrix.hpp"

namespace jfactor {

enum class Phase { phase1, phase2, phase3 };

enum class Phase2Method { rhb, dshb, sds_left, sds_right, t_sequence };

enum class IntraMethod { dense, one_peer_exp };

const char* phase_name(Phase p);
const char* phase2_method_name(Phase2Method m);
const char* intra_method_name(IntraMethod m);

struct Round {
  SparseMatrix matrix;
  Phase phase;
  std::string label;
};

// Ordered mixing rounds applied as X <- W X; the accumulated product over
// the whole schedule equals J exactly.
struct MixingSchedule {
  std::vector<Round> rounds;
  Partition partition;

  std::int64_t n() const { return partition.n(); }
};

// Rounds whose exact product is J_0. dense: the single round J_0 itself.
// one_peer_exp: max_k log2(n_k) rounds of per-cluster (I + P^(2^i))/2
// averaging with the cyclic shift P; requires power-of-two cluster sizes.
std::vector<SparseMatrix> intra_cluster_schedule(const Partition& partition, IntraMethod method);

// Phase 1 intra rounds, Phase 2 inter-cluster factor(s), Phase 3 repeats
// Phase 1. For t_sequence the non-identity That factors are applied
// starting from level tau-1 so the accumulated product is a_left;
// reverse_t_order applies them the other way round, realizing a_right.
MixingSchedule build_schedule(const Partition& partition, Phase2Method phase2,
                              IntraMethod intra, bool reverse_t_order = false);

// Exact product in applied order (last round leftmost).
SparseMatrix schedule_product(const MixingSchedule& schedule);

struct ConsensusTrace {
  std::int64_t n = 0;
  std::int64_t dim = 0;
  std::uint64_t seed = 0;  // informational, recorded by the caller
  double tolerance = 0;
  std::vector<std::vector<double>> states;  // row-major n*dim, index 0 is the input
  std::vector<double> errors;               // max deviation from the true average
  std::vector<std::pair<std::int64_t, std::int64_t>> round_costs;  // (nnz, d_max)
  bool reached = false;
};

// Deterministic uniform [-1, 1) state, row-major n*dim.
std::vector<double> random_state(std::int64_t n, std::int64_t dim, std::uint64_t seed);

// Floating-point averaging X <- W X over the schedule; matrices are
// converted to nearest doubles at application time. Deterministic: entries
// are accumulated in sorted coordinate order.
ConsensusTrace simulate(const MixingSchedule& schedule, const std::vector<double>& x0,
                        std::int64_t dim, double tolerance, std::uint64_t seed = 0);

struct CostRow {
  std::string method;
  std::int64_t nnz = 0;
  std::int64_t d_max = 0;
  std::int64_t phase2_rounds = 0;
};

struct CostReport {
  Partition partition;
  std::vector<CostRow> rows;
  // Per-round (nnz, d_max) of the applied That factors; empty when tau = 1.
  std::vector<std::pair<std::int64_t, std::int64_t>> t_round_costs;
};

// One row per Phase-2 choice, every figure counted on the constructed
// matrices. The t-factors row reports the per-round maxima.
CostReport cost_report(const Partition& partition);

}  // namespace jfactor
