#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cyclosig/composite.hpp"
#include "cyclosig/conductor.hpp"
#include "cyclosig/errors.hpp"
#include "cyclosig/gf2.hpp"
#include "cyclosig/sigmatrix.hpp"
#include "cyclosig/version.hpp"

namespace py = pybind11;
using namespace cyclosig;

namespace {

std::vector<int> vector_bits(const SignVector& v) {
  std::vector<int> bits(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) bits[i] = v.get(i) ? 1 : 0;
  return bits;
}

std::vector<std::vector<int>> matrix_lists(const SignMatrix& mat) {
  std::vector<std::vector<int>> out;
  out.reserve(mat.n_rows());
  for (const auto& r : mat.rows()) out.push_back(vector_bits(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signature matrices and signature ranks of circular units in "
            "real cyclotomic fields";
  m.attr("__version__") = kToolkitVersion;

  py::register_exception<falsification_error>(m, "FalsificationError");

  py::class_<Conductor>(m, "Conductor")
      .def_readonly("m", &Conductor::m)
      .def_readonly("factorization", &Conductor::factorization)
      .def_readonly("phi_half", &Conductor::phi_half)
      .def_property_readonly("omega", &Conductor::omega)
      .def("is_prime_power", &Conductor::is_prime_power)
      .def("is_odd_prime_power", &Conductor::is_odd_prime_power)
      .def("is_two_power", &Conductor::is_two_power)
      .def("__repr__", [](const Conductor& c) {
        std::ostringstream os;
        os << "Conductor(m=" << c.m << ", phi_half=" << c.phi_half << ")";
        return os.str();
      });

  py::class_<ResidueIndexMap>(m, "ResidueIndexMap")
      .def(py::init<Conductor>())
      .def_property_readonly("residues", &ResidueIndexMap::residues)
      .def("__len__", &ResidueIndexMap::size)
      .def("residue_at", &ResidueIndexMap::residue_at, py::arg("i"))
      .def("index_of", &ResidueIndexMap::index_of, py::arg("a"));

  py::class_<SignVector>(m, "SignVector")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def_static("ones", &SignVector::ones, py::arg("dim"))
      .def_static("from_bits",
                  [](const std::vector<int>& bits) {
                    return SignVector::from_bits(
                        std::span<const int>(bits.data(), bits.size()));
                  })
      .def_static("from_hex", &SignVector::from_hex, py::arg("hex"),
                  py::arg("dim"))
      .def_property_readonly("dim", &SignVector::dim)
      .def("__len__", &SignVector::dim)
      .def("__getitem__",
           [](const SignVector& v, std::size_t i) {
             if (i >= v.dim()) throw py::index_error();
             return v.get(i) ? 1 : 0;
           })
      .def("set", &SignVector::set, py::arg("i"), py::arg("value"))
      .def("is_zero", &SignVector::is_zero)
      .def("to_hex", &SignVector::to_hex)
      .def("bits", &vector_bits)
      .def("__xor__",
           [](const SignVector& a, const SignVector& b) { return a ^ b; })
      .def("__eq__", [](const SignVector& a, const SignVector& b) {
        return a == b;
      });

  py::class_<SignMatrix>(m, "SignMatrix")
      .def_property_readonly("n_rows", &SignMatrix::n_rows)
      .def_property_readonly("n_cols", &SignMatrix::n_cols)
      .def_property_readonly("row_labels", &SignMatrix::row_labels)
      .def_property_readonly("col_labels", &SignMatrix::col_labels)
      .def("at", &SignMatrix::at, py::arg("i"), py::arg("j"))
      .def("row", &SignMatrix::row, py::arg("i"))
      .def("to_lists", &matrix_lists);

  py::class_<SpanBasis>(m, "SpanBasis")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def_property_readonly("dim", &SpanBasis::dim)
      .def_property_readonly("rank", &SpanBasis::rank)
      .def("insert", &SpanBasis::insert, py::arg("v"))
      .def("contains", &SpanBasis::contains, py::arg("v"));

  py::class_<LemmaWitness>(m, "LemmaWitness")
      .def_readonly("m", &LemmaWitness::m)
      .def_readonly("k", &LemmaWitness::k)
      .def_readonly("b0", &LemmaWitness::b0)
      .def_readonly("b1", &LemmaWitness::b1)
      .def_readonly("chosen_B", &LemmaWitness::chosen_B)
      .def_readonly("parities", &LemmaWitness::parities);

  py::class_<TwoPowerWitness>(m, "TwoPowerWitness")
      .def_readonly("m", &TwoPowerWitness::m)
      .def_readonly("k", &TwoPowerWitness::k)
      .def_readonly("col_label", &TwoPowerWitness::col_label)
      .def_readonly("entries", &TwoPowerWitness::entries)
      .def_readonly("holds", &TwoPowerWitness::holds);

  py::class_<RankReport>(m, "RankReport")
      .def_readonly("m", &RankReport::m)
      .def_property_readonly(
          "kind",
          [](const RankReport& r) { return std::string(to_string(r.kind)); })
      .def_readonly("rank", &RankReport::rank)
      .def_readonly("phi_half", &RankReport::phi_half)
      .def_readonly("circular_deficiency", &RankReport::circular_deficiency)
      .def_readonly("log_bound", &RankReport::log_bound)
      .def_readonly("bound_satisfied", &RankReport::bound_satisfied)
      .def_readonly("full_rank", &RankReport::full_rank)
      .def("__repr__", [](const RankReport& r) {
        std::ostringstream os;
        os << "RankReport(m=" << r.m << ", rank=" << r.rank
           << ", deficiency=" << r.circular_deficiency << ")";
        return os.str();
      });

  py::class_<CompositeRank>(m, "CompositeRank")
      .def_readonly("rank", &CompositeRank::rank)
      .def_readonly("predicted", &CompositeRank::predicted);

  py::class_<CompositeBoundReport>(m, "CompositeBoundReport")
      .def_readonly("m", &CompositeBoundReport::m)
      .def_readonly("omega", &CompositeBoundReport::omega)
      .def_readonly("theorem_bound_real",
                    &CompositeBoundReport::theorem_bound_real)
      .def_readonly("theorem_bound", &CompositeBoundReport::theorem_bound)
      .def_readonly("per_factor_bounds",
                    &CompositeBoundReport::per_factor_bounds)
      .def_readonly("combined_sum", &CompositeBoundReport::combined_sum)
      .def_readonly("combined_bound", &CompositeBoundReport::combined_bound);

  py::class_<CorollaryEntry>(m, "CorollaryEntry")
      .def_readonly("m", &CorollaryEntry::m)
      .def_readonly("rank", &CorollaryEntry::rank);

  py::class_<CorollaryResult>(m, "CorollaryResult")
      .def_readonly("entries", &CorollaryResult::entries)
      .def_readonly("exception_m", &CorollaryResult::exception_m)
      .def_readonly("exception_note", &CorollaryResult::exception_note);

  m.def("make_conductor", &make_conductor, py::arg("m"),
        "Validate and factor a conductor (m >= 3, odd or divisible by 4).");
  m.def("least_positive_residue", &least_positive_residue, py::arg("x"),
        py::arg("modulus"));
  m.def("half_interval_sign", &half_interval_sign, py::arg("r"),
        py::arg("modulus"),
        "0 for the lower open half-interval, 1 for the upper.");

  m.def("build_matrix_odd_prime_power", &build_matrix_odd_prime_power,
        py::arg("conductor"));
  m.def("build_matrix_two_power", &build_matrix_two_power,
        py::arg("conductor"));
  m.def("build_circular_matrix", &build_circular_matrix, py::arg("conductor"));
  m.def("build_modified_matrix", &build_modified_matrix, py::arg("C"));
  m.def("sine_oracle_entry", &sine_oracle_entry, py::arg("a"), py::arg("b"),
        py::arg("conductor"),
        "Float cross-check of one entry; the integer rule is authoritative.");

  m.def("lemma_witness", &lemma_witness, py::arg("conductor"), py::arg("k"));
  m.def("column_witness_holds", &column_witness_holds, py::arg("M"),
        py::arg("witness"));
  m.def("two_power_column_witness", &two_power_column_witness,
        py::arg("conductor"), py::arg("k"));
  m.def("verify_lower_bound", &verify_lower_bound, py::arg("conductor"));

  m.def("rank",
        [](const SignMatrix& matrix) { return rank(matrix); },
        py::arg("matrix"), "F2 rank of the row span.");
  m.def("row_space_basis", &row_space_basis, py::arg("matrix"));

  m.def("embed_left", &embed_left, py::arg("v"), py::arg("right_dims"));
  m.def("embed_right", &embed_right, py::arg("w"), py::arg("left_dims"));
  m.def("composite_rank", &composite_rank, py::arg("left"), py::arg("right"));
  m.def("theorem_bound", &theorem_bound, py::arg("conductor"));
  m.def("corollary_check", &corollary_check);
  m.def("two_adic_bound", &two_adic_bound, py::arg("archimedean_deficiency"));
}
