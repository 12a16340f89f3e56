#include "jfactor/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jfactor/dshb.hpp"
#include "jfactor/errors.hpp"
#include "jfactor/rhb.hpp"
#include "jfactor/sds.hpp"

namespace jfactor {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

nlohmann::json partition_to_json(const Partition& p) {
  return nlohmann::json{{"n", p.n()}, {"parts", p.parts()}, {"text", p.to_text()}};
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.contains("parts")) throw IoError("partition object lacks parts");
  std::vector<std::int64_t> parts = j.at("parts").get<std::vector<std::int64_t>>();
  Partition p = Partition::from_parts(std::move(parts));
  if (j.contains("n") && j.at("n").get<std::int64_t>() != p.n()) {
    throw IoError("partition n field does not match part sum");
  }
  return p;
}

std::string bigint_string(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw IoError("expected an integer or string rational component");
}

}  // namespace

void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& m) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << nnz(m) << '\n';
  for (const auto& e : m.entries()) {
    out << (e.row + 1) << ' ' << (e.col + 1) << ' ' << to_decimal_string(e.value) << '\n';
  }
  write_file(path, out.str());
}

SparseMatrix read_matrix_market(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty Matrix Market file " + path.string());

  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || object != "matrix" || format != "coordinate") {
    throw IoError("unsupported Matrix Market banner in " + path.string());
  }
  if (field != "real" && field != "integer") {
    throw IoError("unsupported Matrix Market field '" + field + "'");
  }
  const bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general") {
    throw IoError("unsupported Matrix Market symmetry '" + symmetry + "'");
  }

  do {
    if (!std::getline(in, line)) throw IoError("truncated Matrix Market file " + path.string());
  } while (!line.empty() && line[0] == '%');

  std::int64_t rows = 0, cols = 0, count = 0;
  {
    std::istringstream size(line);
    if (!(size >> rows >> cols >> count)) {
      throw IoError("bad Matrix Market size line in " + path.string());
    }
  }

  std::vector<SparseMatrix::Entry> es;
  es.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw IoError("truncated Matrix Market file " + path.string());
    std::istringstream entry(line);
    std::int64_t r = 0, c = 0;
    std::string value;
    if (!(entry >> r >> c >> value)) {
      throw IoError("bad Matrix Market entry in " + path.string());
    }
    Rational v;
    try {
      v = rational_from_decimal(value);
    } catch (const std::exception& ex) {
      throw IoError("bad Matrix Market value '" + value + "': " + ex.what());
    }
    es.push_back({r - 1, c - 1, v});
    if (symmetric && r != c) es.push_back({c - 1, r - 1, v});
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(es));
}

nlohmann::json matrix_to_json(const SparseMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : m.entries()) {
    entries.push_back({{"row", e.row},
                       {"col", e.col},
                       {"num", num(e.value).str()},
                       {"den", den(e.value).str()}});
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

SparseMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw IoError("matrix object lacks rows/cols/entries");
  }
  const std::int64_t rows = j.at("rows").get<std::int64_t>();
  const std::int64_t cols = j.at("cols").get<std::int64_t>();
  std::vector<SparseMatrix::Entry> es;
  es.reserve(j.at("entries").size());
  for (const auto& item : j.at("entries")) {
    BigInt n, d;
    try {
      n = BigInt(bigint_string(item.at("num")));
      d = BigInt(bigint_string(item.at("den")));
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& ex) {
      throw IoError(std::string("bad rational entry: ") + ex.what());
    }
    if (d == 0) throw IoError("entry with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    es.push_back({item.at("row").get<std::int64_t>(), item.at("col").get<std::int64_t>(),
                  Rational(n, d)});
  }
  try {
    return SparseMatrix::from_triplets(rows, cols, std::move(es));
  } catch (const ShapeError& ex) {
    throw IoError(std::string("bad matrix object: ") + ex.what());
  }
}

void write_matrix_json(const std::filesystem::path& path, const SparseMatrix& m) {
  write_file(path, matrix_to_json(m).dump(2) + "\n");
}

SparseMatrix read_matrix_json(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& ex) {
    throw IoError("bad JSON in " + path.string() + ": " + ex.what());
  }
  return matrix_from_json(j);
}

FactorDocument build_factor_document(const Partition& partition, Phase2Method method) {
  auto rationals = [](const std::vector<Rational>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : values) out.push_back(to_fraction_string(v));
    return out;
  };

  switch (method) {
    case Phase2Method::rhb: {
      const auto f = rhb_factorize(partition);
      nlohmann::json betas = nlohmann::json::array();
      for (const auto& level : f.betas) betas.push_back(rationals(level));
      nlohmann::json extras{{"alphas", rationals(f.alphas)},
                            {"betas", std::move(betas)},
                            {"stats", {{"nnz", nnz(f.A)}, {"d_max", d_max(f.A)}}}};
      return FactorDocument{"rhb", partition, {f.A}, std::move(extras)};
    }
    case Phase2Method::dshb: {
      const auto f = dshb_factorize(partition);
      std::vector<Rational> scales;
      for (std::int64_t k = 1; k <= partition.tau(); ++k) {
        scales.push_back(Rational(partition.n(), partition.m(k - 1)));
      }
      nlohmann::json extras{{"sequence_scales", rationals(scales)},
                            {"stats", {{"nnz", nnz(f.A)}, {"d_max", d_max(f.A)}}}};
      return FactorDocument{"dshb", partition, {f.A}, std::move(extras)};
    }
    case Phase2Method::sds_left:
    case Phase2Method::sds_right: {
      const auto f = sds_factorize(partition);
      const bool left = method == Phase2Method::sds_left;
      const SparseMatrix& a = left ? f.a_left : f.a_right;
      nlohmann::json extras{{"stats", {{"nnz", nnz(a)}, {"d_max", d_max(a)}}}};
      return FactorDocument{left ? "sds-left" : "sds-right", partition, {a}, std::move(extras)};
    }
    case Phase2Method::t_sequence: {
      const auto f = sds_factorize(partition);
      nlohmann::json per_factor = nlohmann::json::array();
      for (const auto& hat : f.hat_factors) {
        per_factor.push_back({{"nnz", nnz(hat)}, {"d_max", d_max(hat)}});
      }
      nlohmann::json extras{{"order", "left-product"},
                            {"per_factor_stats", std::move(per_factor)}};
      return FactorDocument{"t-factors", partition, f.hat_factors, std::move(extras)};
    }
  }
  throw std::logic_error("unreachable factorization method");
}

nlohmann::json factor_document_to_json(const FactorDocument& doc) {
  nlohmann::json j{{"kind", "jfactor.factorization"},
                   {"version", 1},
                   {"method", doc.method},
                   {"partition", partition_to_json(doc.partition)}};
  if (doc.matrices.size() == 1) {
    j["matrix"] = matrix_to_json(doc.matrices.front());
  } else {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& m : doc.matrices) list.push_back(matrix_to_json(m));
    j["matrices"] = std::move(list);
  }
  if (!doc.extras.is_null()) j["extras"] = doc.extras;
  return j;
}

FactorDocument factor_document_from_json(const nlohmann::json& j) {
  if (!j.contains("method") || !j.contains("partition")) {
    throw IoError("factor document lacks method/partition");
  }
  Partition p = [&] {
    try {
      return partition_from_json(j.at("partition"));
    } catch (const PartitionError& ex) {
      throw IoError(std::string("bad partition in factor document: ") + ex.what());
    }
  }();

  std::vector<SparseMatrix> matrices;
  if (j.contains("matrix")) {
    matrices.push_back(matrix_from_json(j.at("matrix")));
  } else if (j.contains("matrices")) {
    for (const auto& item : j.at("matrices")) matrices.push_back(matrix_from_json(item));
  }
  if (matrices.empty()) throw IoError("factor document holds no matrices");

  nlohmann::json extras = j.contains("extras") ? j.at("extras") : nlohmann::json();
  return FactorDocument{j.at("method").get<std::string>(), std::move(p), std::move(matrices),
                        std::move(extras)};
}

void write_factor_document(const std::filesystem::path& path, const FactorDocument& doc) {
  write_file(path, factor_document_to_json(doc).dump(2) + "\n");
}

FactorDocument read_factor_document(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& ex) {
    throw IoError("bad JSON in " + path.string() + ": " + ex.what());
  }
  return factor_document_from_json(j);
}

SparseMatrix document_factor_product(const FactorDocument& doc) {
  SparseMatrix acc = SparseMatrix::identity(doc.partition.n());
  for (const auto& m : doc.matrices) acc = matmul(acc, m);
  return acc;
}

VerifyResult verify_factor_document(const FactorDocument& doc) {
  const std::int64_t n = doc.partition.n();
  for (const auto& m : doc.matrices) {
    if (m.rows() != n || m.cols() != n) {
      throw IoError("factor matrix shape does not match the partition order");
    }
  }
  const SparseMatrix j0 = block_diag_j(doc.partition);
  const SparseMatrix product = matmul(matmul(j0, document_factor_product(doc)), j0);
  Rational diff = max_abs_diff(product, ones_j(n));
  const bool pass = diff == 0;
  return VerifyResult{pass, std::move(diff)};
}

void write_schedule_files(const std::filesystem::path& dir, const MixingSchedule& schedule,
                          const std::string& format) {
  if (format != "mtx" && format != "json") {
    throw std::invalid_argument("schedule format must be mtx or json");
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string());

  nlohmann::json rounds = nlohmann::json::array();
  for (std::size_t i = 0; i < schedule.rounds.size(); ++i) {
    const Round& round = schedule.rounds[i];
    char name[32];
    std::snprintf(name, sizeof name, "round_%03zu.%s", i + 1, format.c_str());
    const std::filesystem::path file = dir / name;
    if (format == "mtx") {
      write_matrix_market(file, round.matrix);
    } else {
      write_matrix_json(file, round.matrix);
    }
    rounds.push_back({{"index", i + 1},
                      {"file", name},
                      {"phase", phase_name(round.phase)},
                      {"label", round.label},
                      {"nnz", nnz(round.matrix)},
                      {"d_max", d_max(round.matrix)}});
  }

  const bool exact = max_abs_diff(schedule_product(schedule), ones_j(schedule.n())) == 0;
  nlohmann::json manifest{{"kind", "jfactor.schedule"},
                          {"version", 1},
                          {"partition", partition_to_json(schedule.partition)},
                          {"format", format},
                          {"rounds", std::move(rounds)},
                          {"product_is_exact", exact}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

void write_trace_csv(const std::filesystem::path& path, const MixingSchedule& schedule,
                     const ConsensusTrace& trace) {
  std::ostringstream out;
  out << "round,phase,label,max_error,nnz,d_max\n";
  char value[32];
  std::snprintf(value, sizeof value, "%.17g", trace.errors.front());
  out << "0,init,initial," << value << ",,\n";
  for (std::size_t i = 0; i < schedule.rounds.size(); ++i) {
    std::snprintf(value, sizeof value, "%.17g", trace.errors[i + 1]);
    out << (i + 1) << ',' << phase_name(schedule.rounds[i].phase) << ',' << '"'
        << schedule.rounds[i].label << '"' << ',' << value << ',' << trace.round_costs[i].first
        << ',' << trace.round_costs[i].second << '\n';
  }
  write_file(path, out.str());
}

std::string cost_report_text(const CostReport& report) {
  std::ostringstream out;
  out << "partition " << report.partition.to_text() << "\n";
  char line[128];
  std::snprintf(line, sizeof line, "%-12s %8s %8s %8s\n", "phase-2", "nnz", "d_max", "rounds");
  out << line;
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%-12s %8lld %8lld %8lld\n", row.method.c_str(),
                  static_cast<long long>(row.nnz), static_cast<long long>(row.d_max),
                  static_cast<long long>(row.phase2_rounds));
    out << line;
  }
  return out.str();
}

std::string cost_report_csv(const CostReport& report) {
  std::ostringstream out;
  out << "method,nnz,d_max,phase2_rounds\n";
  for (const auto& row : report.rows) {
    out << row.method << ',' << row.nnz << ',' << row.d_max << ',' << row.phase2_rounds << '\n';
  }
  return out.str();
}

nlohmann::json cost_report_json(const CostReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"method", row.method},
                    {"nnz", row.nnz},
                    {"d_max", row.d_max},
                    {"phase2_rounds", row.phase2_rounds}});
  }
  nlohmann::json t_rounds = nlohmann::json::array();
  for (const auto& [n, d] : report.t_round_costs) {
    t_rounds.push_back({{"nnz", n}, {"d_max", d}});
  }
  return nlohmann::json{{"partition", partition_to_json(report.partition)},
                        {"rows", std::move(rows)},
                        {"t_factor_rounds", std::move(t_rounds)}};
}

}  // namespace jfactor
