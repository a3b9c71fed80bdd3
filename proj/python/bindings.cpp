#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hodgemaps/datasets.hpp"
#include "hodgemaps/diffusion_map.hpp"
#include "hodgemaps/eval.hpp"
#include "hodgemaps/pipeline.hpp"

namespace py = pybind11;
using namespace hodgemaps;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hodge diffusion maps: exterior-derivative estimation and Hodge-Laplacian embeddings";

    py::class_<NeighborGraph>(m, "NeighborGraph")
        .def_readonly("indices", &NeighborGraph::indices)
        .def_readonly("distances", &NeighborGraph::distances)
        .def_readonly("K", &NeighborGraph::K)
        .def_readonly("t", &NeighborGraph::t);

    py::class_<TangentFrameSet>(m, "TangentFrameSet")
        .def_readonly("frames", &TangentFrameSet::frames)
        .def_readonly("raw_dims", &TangentFrameSet::raw_dims)
        .def_readonly("d", &TangentFrameSet::d);

    py::class_<CoefficientField>(m, "CoefficientField")
        .def(py::init([](int order, const Eigen::MatrixXd& values) {
                 CoefficientField f;
                 f.order = order;
                 f.values = values;
                 return f;
             }),
             py::arg("order"), py::arg("values"))
        .def_readonly("order", &CoefficientField::order)
        .def_readonly("values", &CoefficientField::values);

    py::class_<BlockSparseOperator>(m, "BlockSparseOperator")
        .def_readonly("order", &BlockSparseOperator::order)
        .def_readonly("N", &BlockSparseOperator::N)
        .def_readonly("d", &BlockSparseOperator::d)
        .def_readonly("t", &BlockSparseOperator::t)
        .def_readonly("block_rows", &BlockSparseOperator::block_rows)
        .def_readonly("block_cols", &BlockSparseOperator::block_cols)
        .def("block",
             [](const BlockSparseOperator& ed, int i, int j) -> py::object {
                 const Eigen::MatrixXd* b = ed.block(i, j);
                 return b ? py::cast(*b) : py::none();
             })
        .def("to_dense", [](const BlockSparseOperator& ed) {
            return Eigen::MatrixXd(ed.to_sparse());
        });

    py::class_<HodgeMatrix>(m, "HodgeMatrix")
        .def_readonly("order", &HodgeMatrix::order)
        .def_readonly("t", &HodgeMatrix::t)
        .def_readonly("block_size", &HodgeMatrix::block_size)
        .def_readonly("matrix", &HodgeMatrix::matrix);

    py::class_<HodgeSpectrum>(m, "HodgeSpectrum")
        .def_readonly("eigenvalues", &HodgeSpectrum::eigenvalues)
        .def_readonly("eigenvectors", &HodgeSpectrum::eigenvectors)
        .def_readonly("block_size", &HodgeSpectrum::block_size)
        .def_readonly("tm", &HodgeSpectrum::tm);

    py::class_<Embedding>(m, "Embedding")
        .def_readonly("m", &Embedding::m)
        .def_readonly("tm", &Embedding::tm)
        .def_readonly("normalized", &Embedding::normalized)
        .def_readonly("eta", &Embedding::eta);

    py::class_<DiffusionMap>(m, "DiffusionMap")
        .def_readonly("transition", &DiffusionMap::transition)
        .def_readonly("eigenvalues", &DiffusionMap::eigenvalues)
        .def_readonly("coordinates", &DiffusionMap::coordinates);

    m.def("torus_grid", &torus_grid, py::arg("steps"));
    m.def("sphere_grid", &sphere_grid, py::arg("steps"));
    m.def("circle", &circle, py::arg("n"));

    m.def("knn", &knn, py::arg("cloud"), py::arg("k"), py::arg("threads") = 1);
    m.def("default_bandwidth", &default_bandwidth, py::arg("cloud"));
    m.def("set_bandwidth", &set_bandwidth, py::arg("graph"), py::arg("t"));
    m.def("normalizer", &normalizer, py::arg("graph"), py::arg("i"));

    m.def("local_frames", &local_frames, py::arg("cloud"), py::arg("graph"), py::arg("gamma") = 0.9,
          py::arg("threads") = 1);
    m.def("intrinsic_dimension", &intrinsic_dimension, py::arg("frames"));

    m.def("build_ed", &build_ed, py::arg("cloud"), py::arg("graph"), py::arg("frames"), py::arg("k"),
          py::arg("threads") = 1);
    m.def("apply_exterior_derivative", &apply_exterior_derivative, py::arg("ed"), py::arg("field"));

    m.def(
        "build_hodge",
        [](const BlockSparseOperator& ed_k, py::object ed_km1) {
            return build_hodge(ed_k, ed_km1.is_none() ? nullptr : ed_km1.cast<BlockSparseOperator*>());
        },
        py::arg("ed_k"), py::arg("ed_km1") = py::none());
    m.def("spectrum", &spectrum, py::arg("hodge"), py::arg("m_request"), py::arg("tm") = 1);
    m.def("affinity", &affinity, py::arg("spectrum"), py::arg("i"), py::arg("j"));
    m.def("normalized_affinity", &normalized_affinity, py::arg("spectrum"), py::arg("i"), py::arg("j"));
    m.def("embed", &embed, py::arg("spectrum"), py::arg("m"));
    m.def("normalized_embed", &normalized_embed, py::arg("spectrum"), py::arg("m"));
    m.def("hodge_distance", &hodge_distance, py::arg("embedding"), py::arg("i"), py::arg("j"));
    m.def("truncation_bound", &truncation_bound, py::arg("spectrum"), py::arg("m"));

    m.def("diffusion_map", &diffusion_map, py::arg("cloud"), py::arg("epsilon"), py::arg("m"));

    m.def(
        "run_eval_suite",
        [](const std::string& suite, int threads, unsigned seed) {
            py::list out;
            for (const auto& r : eval::run_suite(suite, threads, seed)) {
                py::dict item;
                item["id"] = r.id;
                item["name"] = r.name;
                item["pass"] = r.pass;
                item["detail"] = r.detail;
                out.append(item);
            }
            return out;
        },
        py::arg("suite"), py::arg("threads") = 1, py::arg("seed") = 12345u);
}
