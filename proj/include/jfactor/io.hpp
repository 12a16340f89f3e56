#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "jfactor/consensus.hpp"
#include "jfactor/partition.hpp"
#include "jfactor/sparse_matrix.hpp"

namespace jfactor {

// Matrix Market coordinate format, 1-based indices, values rendered as
// decimals with 17 significant digits. Reading converts decimals exactly,
// so a round trip preserves values to the printed precision.
void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& m);
SparseMatrix read_matrix_market(const std::filesystem::path& path);

// Lossless JSON form: 0-based coordinates, num/den as decimal strings.
nlohmann::json matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const nlohmann::json& j);

void write_matrix_json(const std::filesystem::path& path, const SparseMatrix& m);
SparseMatrix read_matrix_json(const std::filesystem::path& path);

// Self-contained factorization document: the partition, the factor (or the
// ordered That list for "t-factors"), and method metadata. This is the
// form `verify` consumes.
struct FactorDocument {
  std::string method;  // rhb | dshb | sds-left | sds-right | t-factors
  Partition partition;
  std::vector<SparseMatrix> matrices;  // single factor, or left-product order
  nlohmann::json extras;               // method-specific metadata
};

// Builds the document for a partition/method pair: the factor matrix (the
// ordered That list for t_sequence) plus method metadata such as the RHB
// alpha/beta tables or the DSHB sequence scales.
FactorDocument build_factor_document(const Partition& partition, Phase2Method method);

nlohmann::json factor_document_to_json(const FactorDocument& doc);
FactorDocument factor_document_from_json(const nlohmann::json& j);
void write_factor_document(const std::filesystem::path& path, const FactorDocument& doc);
FactorDocument read_factor_document(const std::filesystem::path& path);

// Product of the document's matrices in left-to-right order.
SparseMatrix document_factor_product(const FactorDocument& doc);

struct VerifyResult {
  bool pass = false;
  Rational max_diff;
};

// Exact check J_0 A J_0 = J for the document's partition and factor.
VerifyResult verify_factor_document(const FactorDocument& doc);

// One matrix file per round plus manifest.json listing filenames, phase
// tags, and the partition. format is "mtx" or "json".
void write_schedule_files(const std::filesystem::path& dir, const MixingSchedule& schedule,
                          const std::string& format);

void write_trace_csv(const std::filesystem::path& path, const MixingSchedule& schedule,
                     const ConsensusTrace& trace);

std::string cost_report_text(const CostReport& report);
std::string cost_report_csv(const CostReport& report);
nlohmann::json cost_report_json(const CostReport& report);

}  // namespace jfactor
