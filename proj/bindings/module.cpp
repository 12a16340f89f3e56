// Python bindings: the library's main operations with rationals surfaced as
// fractions.Fraction and dense views as numpy arrays.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jfactor/consensus.hpp"
#include "jfactor/dshb.hpp"
#include "jfactor/errors.hpp"
#include "jfactor/io.hpp"
#include "jfactor/partition.hpp"
#include "jfactor/rhb.hpp"
#include "jfactor/sds.hpp"

namespace py = pybind11;
using namespace jfactor;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(py::str(to_fraction_string(r)));
}

py::list entries_list(const SparseMatrix& m) {
  py::list out;
  for (const auto& e : m.entries()) {
    out.append(py::make_tuple(e.row, e.col, to_fraction(e.value)));
  }
  return out;
}

py::array_t<double> dense_array(const SparseMatrix& m) {
  auto data = to_dense(m);
  py::array_t<double> out({m.rows(), m.cols()});
  std::copy(data.begin(), data.end(), out.mutable_data());
  return out;
}

py::list matrices_list(const std::vector<SparseMatrix>& ms) {
  py::list out;
  for (const auto& m : ms) out.append(m);
  return out;
}

Phase2Method method_from_name(const std::string& name) {
  if (name == "rhb") return Phase2Method::rhb;
  if (name == "dshb") return Phase2Method::dshb;
  if (name == "sds-left" || name == "sds_left") return Phase2Method::sds_left;
  if (name == "sds-right" || name == "sds_right") return Phase2Method::sds_right;
  if (name == "t-factors" || name == "t_sequence") return Phase2Method::t_sequence;
  throw std::invalid_argument("unknown phase-2 method '" + name + "'");
}

IntraMethod intra_from_name(const std::string& name) {
  if (name == "dense") return IntraMethod::dense;
  if (name == "one-peer-exp" || name == "one_peer_exp") return IntraMethod::one_peer_exp;
  throw std::invalid_argument("unknown intra method '" + name + "'");
}

std::vector<double> state_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& x0) {
  if (x0.ndim() != 2) throw std::invalid_argument("state must be a 2-d array");
  return std::vector<double>(x0.data(), x0.data() + x0.size());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse factorizations J = J0 A J0 of the scaled all-ones matrix, "
            "with finite-time consensus schedules";

  py::register_exception<PartitionError>(m, "PartitionError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Partition>(m, "Partition")
      .def_property_readonly("n", &Partition::n)
      .def_property_readonly("tau", &Partition::tau)
      .def_property_readonly("parts", [](const Partition& p) { return p.parts(); })
      .def_property_readonly("suffix_sums", [](const Partition& p) { return p.suffix_sums(); })
      .def("m", &Partition::m, py::arg("k"))
      .def("to_text", &Partition::to_text)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__repr__", [](const Partition& p) { return "Partition(" + p.to_text() + ")"; });

  m.def("partition_from_parts", &Partition::from_parts, py::arg("parts"));
  m.def("partition_from_base", &Partition::from_base, py::arg("n"), py::arg("base"));
  m.def("partition_from_text", &Partition::from_text, py::arg("text"));

  py::class_<SparseMatrix>(m, "SparseMatrix")
      .def_property_readonly("rows", &SparseMatrix::rows)
      .def_property_readonly("cols", &SparseMatrix::cols)
      .def("entries", &entries_list, "List of (row, col, Fraction) triples")
      .def("at", [](const SparseMatrix& m_, std::int64_t r, std::int64_t c) {
        return to_fraction(m_.at(r, c));
      })
      .def("to_dense", &dense_array, "Dense float64 view (nearest-double per entry)")
      .def("transpose", &SparseMatrix::transpose)
      .def("nnz", [](const SparseMatrix& m_) { return nnz(m_); })
      .def("d_max", [](const SparseMatrix& m_) { return d_max(m_); })
      .def("is_symmetric", [](const SparseMatrix& m_) { return is_symmetric(m_); })
      .def("is_doubly_stochastic", [](const SparseMatrix& m_) { return is_doubly_stochastic(m_); })
      .def("__matmul__", [](const SparseMatrix& a, const SparseMatrix& b) { return matmul(a, b); })
      .def("__eq__", [](const SparseMatrix& a, const SparseMatrix& b) { return a == b; })
      .def("__repr__", [](const SparseMatrix& m_) {
        return "SparseMatrix(" + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
               ", nnz=" + std::to_string(nnz(m_)) + ")";
      });

  m.def("identity", &SparseMatrix::identity, py::arg("n"));
  m.def("ones_j", &ones_j, py::arg("n"));
  m.def("block_diag_j", &block_diag_j, py::arg("partition"));
  m.def("matmul", &matmul, py::arg("a"), py::arg("b"));
  m.def("direct_sum", &direct_sum, py::arg("a"), py::arg("b"));
  m.def("max_abs_diff",
        [](const SparseMatrix& a, const SparseMatrix& b) { return to_fraction(max_abs_diff(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def("is_hierarchically_banded", &is_hierarchically_banded, py::arg("matrix"),
        py::arg("partition"));
  m.def(
      "is_exact_factor",
      [](const SparseMatrix& a, const Partition& p) {
        const SparseMatrix j0 = block_diag_j(p);
        return max_abs_diff(matmul(matmul(j0, a), j0), ones_j(p.n())) == 0;
      },
      py::arg("factor"), py::arg("partition"),
      "Exact check J0 @ factor @ J0 == J for the partition");

  py::class_<HBSequence>(m, "HBSequence")
      .def_property_readonly("matrices", [](const HBSequence& s) { return matrices_list(s.matrices); })
      .def_readonly("partition", &HBSequence::partition);

  py::class_<RhbFactorization>(m, "RhbFactorization")
      .def_readonly("A", &RhbFactorization::A)
      .def_readonly("sequence", &RhbFactorization::sequence)
      .def_readonly("partition", &RhbFactorization::partition)
      .def_property_readonly("alphas",
                             [](const RhbFactorization& f) {
                               py::list out;
                               for (const auto& a : f.alphas) out.append(to_fraction(a));
                               return out;
                             })
      .def_property_readonly("betas", [](const RhbFactorization& f) {
        py::list out;
        for (const auto& level : f.betas) {
          py::list row;
          for (const auto& b : level) row.append(to_fraction(b));
          out.append(row);
        }
        return out;
      });

  py::class_<DshbFactorization>(m, "DshbFactorization")
      .def_readonly("A", &DshbFactorization::A)
      .def_readonly("sequence", &DshbFactorization::sequence)
      .def_property_readonly("scaled_sequence",
                             [](const DshbFactorization& f) { return matrices_list(f.scaled_sequence); })
      .def_readonly("partition", &DshbFactorization::partition);

  py::class_<SdsFactorization>(m, "SdsFactorization")
      .def_property_readonly("t_factors",
                             [](const SdsFactorization& f) { return matrices_list(f.t_factors); })
      .def_property_readonly("hat_factors",
                             [](const SdsFactorization& f) { return matrices_list(f.hat_factors); })
      .def_readonly("a_left", &SdsFactorization::a_left)
      .def_readonly("a_right", &SdsFactorization::a_right)
      .def_readonly("partition", &SdsFactorization::partition);

  m.def("rhb_two_block", &rhb_two_block, py::arg("n1"), py::arg("n2"));
  m.def("rhb_factorize", &rhb_factorize, py::arg("partition"));
  m.def("dshb_two_block", &dshb_two_block, py::arg("n1"), py::arg("n2"));
  m.def("dshb_factorize", &dshb_factorize, py::arg("partition"));
  m.def("t_factor", &t_factor, py::arg("partition"), py::arg("level"));
  m.def("sds_factorize", &sds_factorize, py::arg("partition"));
  m.def("v_recursion", &v_recursion, py::arg("partition"));

  py::class_<Round>(m, "Round")
      .def_readonly("matrix", &Round::matrix)
      .def_property_readonly("phase", [](const Round& r) { return std::string(phase_name(r.phase)); })
      .def_readonly("label", &Round::label);

  py::class_<MixingSchedule>(m, "MixingSchedule")
      .def_property_readonly("rounds",
                             [](const MixingSchedule& s) {
                               py::list out;
                               for (const auto& r : s.rounds) out.append(r);
                               return out;
                             })
      .def_readonly("partition", &MixingSchedule::partition)
      .def_property_readonly("n", &MixingSchedule::n);

  m.def(
      "intra_cluster_schedule",
      [](const Partition& p, const std::string& method) {
        return intra_cluster_schedule(p, intra_from_name(method));
      },
      py::arg("partition"), py::arg("method"));
  m.def(
      "build_schedule",
      [](const Partition& p, const std::string& phase2, const std::string& intra,
         bool reverse_t_order) {
        return build_schedule(p, method_from_name(phase2), intra_from_name(intra), reverse_t_order);
      },
      py::arg("partition"), py::arg("phase2"), py::arg("intra") = "dense",
      py::arg("reverse_t_order") = false);
  m.def("schedule_product", &schedule_product, py::arg("schedule"));

  py::class_<ConsensusTrace>(m, "ConsensusTrace")
      .def_readonly("n", &ConsensusTrace::n)
      .def_readonly("dim", &ConsensusTrace::dim)
      .def_readonly("seed", &ConsensusTrace::seed)
      .def_readonly("tolerance", &ConsensusTrace::tolerance)
      .def_readonly("errors", &ConsensusTrace::errors)
      .def_readonly("round_costs", &ConsensusTrace::round_costs)
      .def_readonly("reached", &ConsensusTrace::reached)
      .def_property_readonly("final_state", [](const ConsensusTrace& t) {
        py::array_t<double> out({t.n, t.dim});
        std::copy(t.states.back().begin(), t.states.back().end(), out.mutable_data());
        return out;
      });

  m.def(
      "random_state",
      [](std::int64_t n, std::int64_t dim, std::uint64_t seed) {
        auto data = random_state(n, dim, seed);
        py::array_t<double> out({n, dim});
        std::copy(data.begin(), data.end(), out.mutable_data());
        return out;
      },
      py::arg("n"), py::arg("dim"), py::arg("seed"));
  m.def(
      "simulate",
      [](const MixingSchedule& schedule,
         const py::array_t<double, py::array::c_style | py::array::forcecast>& x0, double tolerance,
         std::uint64_t seed) {
        const auto state = state_from_array(x0);
        const std::int64_t dim = x0.shape(1);
        return simulate(schedule, state, dim, tolerance, seed);
      },
      py::arg("schedule"), py::arg("x0"), py::arg("tolerance") = 1e-10, py::arg("seed") = 0);

  py::class_<CostRow>(m, "CostRow")
      .def_readonly("method", &CostRow::method)
      .def_readonly("nnz", &CostRow::nnz)
      .def_readonly("d_max", &CostRow::d_max)
      .def_readonly("phase2_rounds", &CostRow::phase2_rounds);

  py::class_<CostReport>(m, "CostReport")
      .def_readonly("partition", &CostReport::partition)
      .def_property_readonly("rows",
                             [](const CostReport& r) {
                               py::list out;
                               for (const auto& row : r.rows) out.append(row);
                               return out;
                             })
      .def_readonly("t_round_costs", &CostReport::t_round_costs);

  m.def("cost_report", &cost_report, py::arg("partition"));

  m.def("write_matrix_market",
        [](const std::string& path, const SparseMatrix& m_) { write_matrix_market(path, m_); },
        py::arg("path"), py::arg("matrix"));
  m.def("read_matrix_market",
        [](const std::string& path) { return read_matrix_market(path); }, py::arg("path"));
  m.def("write_matrix_json",
        [](const std::string& path, const SparseMatrix& m_) { write_matrix_json(path, m_); },
        py::arg("path"), py::arg("matrix"));
  m.def("read_matrix_json", [](const std::string& path) { return read_matrix_json(path); },
        py::arg("path"));
  m.def(
      "write_factor_file",
      [](const std::string& path, const Partition& p, const std::string& method) {
        write_factor_document(path, build_factor_document(p, method_from_name(method)));
      },
      py::arg("path"), py::arg("partition"), py::arg("method"),
      "Writes the self-contained factor document `verify` consumes");
  m.def(
      "verify_factor_file",
      [](const std::string& path) {
        const auto result = verify_factor_document(read_factor_document(path));
        return py::make_tuple(result.pass, to_fraction(result.max_diff));
      },
      py::arg("path"), "Returns (passed, max_abs_diff) for a factor document on disk");
}
