#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rol/io.hpp"
#include "rol/rolkit.hpp"

namespace py = pybind11;
using namespace rol;

namespace {

Matrix from_numpy(const py::array& in)
{
    const py::array arr = in.ndim() == 1 ? py::array(in.attr("reshape")(-1, 1)) : in;
    if (arr.ndim() != 2) throw DimensionMismatch("expected a 2-D array");
    const auto rows = static_cast<std::size_t>(arr.shape(0)), cols = static_cast<std::size_t>(arr.shape(1));
    const bool complex = py::isinstance<py::array_t<std::complex<double>>>(arr) ||
                         arr.dtype().kind() == 'c';
    const auto c = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>::ensure(arr);
    std::vector<Complex> data(c.data(), c.data() + rows * cols);
    return Matrix(rows, cols, std::move(data), complex ? Field::Complex : Field::Real);
}

py::array to_numpy(const Matrix& m)
{
    const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())};
    if (m.is_real()) {
        py::array_t<double> out(shape);
        auto* p = out.mutable_data();
        for (std::size_t i = 0; i < m.size(); ++i) p[i] = m.data()[i].real();
        return out;
    }
    py::array_t<std::complex<double>> out(shape);
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

py::object from_json(const io::Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

py::tuple svd_tuple(const SvdFactors& s)
{
    return py::make_tuple(to_numpy(s.U), s.sigma, to_numpy(s.V));
}

Tolerances tolerances(double tol, double angle_tol, std::optional<double> rank_tol)
{
    return Tolerances{tol, angle_tol, rank_tol};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Pseudoinverse reverse-order-law toolkit";

    static py::exception<Error> base(m, "Error");
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<AmbientMismatch>(m, "AmbientMismatch", base.ptr());
    py::register_exception<EmptySubspace>(m, "EmptySubspace", base.ptr());
    py::register_exception<NotUnitary>(m, "NotUnitary", base.ptr());
    py::register_exception<NotOrthonormal>(m, "NotOrthonormal", base.ptr());
    py::register_exception<BlockShapeMismatch>(m, "BlockShapeMismatch", base.ptr());
    py::register_exception<PlanInfeasible>(m, "PlanInfeasible", base.ptr());
    py::register_exception<RolNotSatisfied>(m, "RolNotSatisfied", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    m.def("svd", [](const py::array& a, std::optional<double> rank_tol) {
        return svd_tuple(compute_svd(from_numpy(a), rank_tol));
    }, py::arg("a"), py::arg("rank_tol") = py::none(),
       "Full SVD (U, sigma, V) with A = U diag(sigma) V^*; sigma holds the positive values only.");

    m.def("pinv", [](const py::array& a, std::optional<double> rank_tol) {
        return to_numpy(pinv(from_numpy(a), rank_tol));
    }, py::arg("a"), py::arg("rank_tol") = py::none());

    m.def("pinv_oracle", [](const py::array& a) { return to_numpy(pinv_oracle(from_numpy(a))); },
          py::arg("a"), "Pseudoinverse from a rank factorization, independent of the SVD.");

    m.def("penrose", [](const py::array& a, const py::array& x, double tol) {
        const InverseClass cls = penrose_conditions(from_numpy(a), from_numpy(x), tol);
        py::dict d;
        d["residuals"] = std::vector<double>(cls.residuals.begin(), cls.residuals.end());
        d["conditions"] = cls.satisfied();
        d["label"] = cls.label();
        return d;
    }, py::arg("a"), py::arg("x"), py::arg("tol") = kClassifyTol);

    m.def("principal_angles", [](const py::array& s1, const py::array& s2) {
        return principal_angles(range_basis(from_numpy(s1)), range_basis(from_numpy(s2))).angles;
    }, py::arg("s1"), py::arg("s2"), "Principal angles between the column spaces of two matrices.");

    m.def("classify", [](const py::array& a, const py::array& b, double tol, double angle_tol,
                         std::optional<double> rank_tol) {
        const Matrix ma = from_numpy(a), mb = from_numpy(b);
        const Tolerances t = tolerances(tol, angle_tol, rank_tol);
        io::Json doc;
        doc["report"] = io::report_to_json(classify_pair(ma, mb, t));
        doc["twelve_way"] = io::twelve_way_to_json(twelve_way_suite(ma, mb, t), tol);
        doc["weak_class"] = io::weak_class_to_json(classify_123_124(ma, mb, t), tol);
        return from_json(doc);
    }, py::arg("a"), py::arg("b"), py::arg("tol") = kClassifyTol, py::arg("angle_tol") = kAngleTol,
       py::arg("rank_tol") = py::none());

    m.def("derived_rols", [](const py::array& a, const py::array& b, double tol) {
        py::dict d;
        for (const auto& [name, r] : derived_rols_check(from_numpy(a), from_numpy(b), {tol}).residuals)
            d[py::str(name)] = r;
        return d;
    }, py::arg("a"), py::arg("b"), py::arg("tol") = kClassifyTol);

    m.def("construct_partner", [](const py::array& a, std::size_t s, std::size_t t, std::size_t k,
                                  std::vector<double> sigma_b, std::uint64_t seed,
                                  std::optional<std::vector<std::size_t>> j, bool mix) {
        ConstructionPlan plan{s, t, k, std::move(sigma_b), seed, std::move(j), mix};
        return to_numpy(construct_partner(from_numpy(a), plan));
    }, py::arg("a"), py::arg("s"), py::arg("t"), py::arg("k"), py::arg("sigma_b"), py::arg("seed") = 0,
       py::arg("j") = py::none(), py::arg("mix") = true);

    m.def("construct_pair", [](const std::string& kind, std::size_t m_, std::size_t n, std::size_t k,
                               std::size_t rank_a, std::size_t rank_b, std::size_t shared, std::uint64_t seed,
                               const std::string& field) {
        const PairSpec spec{m_, n, k, rank_a, rank_b, shared, seed, field_from_string(field), {}, {}};
        std::pair<Matrix, Matrix> p;
        if (kind == "cls12") p = construct_pair_12(spec);
        else if (kind == "cls123") p = construct_pair_123(spec);
        else if (kind == "cls124") p = construct_pair_124(spec);
        else throw InvalidArgument("kind must be cls12, cls123 or cls124");
        return py::make_tuple(to_numpy(p.first), to_numpy(p.second));
    }, py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("k"), py::arg("rank_a"), py::arg("rank_b"),
       py::arg("shared"), py::arg("seed") = 0, py::arg("field") = "real");

    m.def("aligned_svds", [](const py::array& a, const py::array& b) {
        const auto [sa, sb] = aligned_svds(from_numpy(a), from_numpy(b));
        return py::make_tuple(svd_tuple(sa), svd_tuple(sb));
    }, py::arg("a"), py::arg("b"));
}
