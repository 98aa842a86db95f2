// Python bindings for the core train/eval operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dgae/config.hpp"
#include "dgae/eval.hpp"
#include "dgae/gradcheck.hpp"
#include "dgae/losses.hpp"
#include "dgae/trainer.hpp"

namespace py = pybind11;
using namespace dgae;

PYBIND11_MODULE(_dgae, mod) {
  mod.doc() = "Masked graph autoencoder with neighbor-similarity distillation";

  py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);
  py::register_exception<DataError>(mod, "DataError", PyExc_ValueError);
  py::register_exception<NumericError>(mod, "NumericError", PyExc_ArithmeticError);

  py::class_<Matrix>(mod, "Matrix")
      .def(py::init<Index, Index>(), py::arg("rows"), py::arg("cols"))
      .def(py::init([](Index rows, Index cols, std::vector<double> values) {
             return Matrix(rows, cols, std::move(values));
           }),
           py::arg("rows"), py::arg("cols"), py::arg("values"))
      .def_readonly("rows", &Matrix::rows)
      .def_readonly("cols", &Matrix::cols)
      .def_readonly("data", &Matrix::data)
      .def("at", [](const Matrix& m, Index r, Index c) { return m.at(r, c); })
      .def("tolist", [](const Matrix& m) {
        std::vector<std::vector<double>> out;
        out.reserve(static_cast<size_t>(m.rows));
        for (Index r = 0; r < m.rows; ++r) {
          out.emplace_back(m.row(r).begin(), m.row(r).end());
        }
        return out;
      });

  py::enum_<Split>(mod, "Split")
      .value("none", Split::none)
      .value("train", Split::train)
      .value("val", Split::val)
      .value("test", Split::test);

  py::class_<Graph>(mod, "Graph")
      .def_readonly("num_nodes", &Graph::num_nodes)
      .def_readonly("features", &Graph::features)
      .def_readonly("labels", &Graph::labels)
      .def_readonly("splits", &Graph::splits)
      .def_property_readonly("feature_dim", &Graph::feature_dim)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("num_undirected_edges", &Graph::num_undirected_edges)
      .def("neighbors", [](const Graph& g, Index v) {
        const auto nb = g.neighbors(v);
        return std::vector<std::int32_t>(nb.begin(), nb.end());
      });

  mod.def("load_graph", &load_graph, py::arg("dataset_dir"));
  mod.def("row_normalize_features", &row_normalize_features, py::arg("graph"),
          "Copy of the graph with every feature row scaled to unit L2 norm.");
  mod.def("synth_sbm", &synth_sbm, py::arg("block_sizes"), py::arg("p_in"), py::arg("p_out"),
          py::arg("feature_dim"), py::arg("seed"));

  py::enum_<LossKind>(mod, "LossKind").value("sce", LossKind::sce).value("mse", LossKind::mse);

  py::class_<TrainConfig>(mod, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("mask_ratio", &TrainConfig::lambda)
      .def_readwrite("tau", &TrainConfig::tau)
      .def_readwrite("alpha", &TrainConfig::alpha)
      .def_readwrite("gamma", &TrainConfig::gamma)
      .def_readwrite("loss_kind", &TrainConfig::loss_kind)
      .def_readwrite("lr", &TrainConfig::lr)
      .def_readwrite("epochs", &TrainConfig::epochs)
      .def_readwrite("seed", &TrainConfig::seed)
      .def_readwrite("hidden_dim", &TrainConfig::hidden_dim)
      .def_readwrite("remask", &TrainConfig::remask)
      .def_readwrite("track_similarity_every", &TrainConfig::track_similarity_every);

  py::class_<MetricsRecord>(mod, "MetricsRecord")
      .def_readonly("epoch", &MetricsRecord::epoch)
      .def_readonly("l_rec", &MetricsRecord::l_rec)
      .def_readonly("l_kl", &MetricsRecord::l_kl)
      .def_readonly("l_total", &MetricsRecord::l_total)
      .def_readonly("tracked", &MetricsRecord::tracked)
      .def_readonly("enc_sim_mean", &MetricsRecord::enc_sim_mean)
      .def_readonly("dec_sim_mean", &MetricsRecord::dec_sim_mean);

  py::class_<GaeModel>(mod, "GaeModel")
      .def_readonly("feature_dim", &GaeModel::feature_dim)
      .def_readonly("hidden_dim", &GaeModel::hidden_dim);

  py::class_<TrainResult>(mod, "TrainResult")
      .def_readonly("model", &TrainResult::model)
      .def_readonly("history", &TrainResult::history);

  mod.def("train", &train, py::arg("graph"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
  mod.def("save_checkpoint", &save_checkpoint, py::arg("model"), py::arg("path"));
  mod.def("load_checkpoint", &load_checkpoint, py::arg("path"));
  mod.def("export_metrics_csv", &export_metrics_csv, py::arg("history"), py::arg("path"));
  mod.def("parse_metrics_csv", &parse_metrics_csv, py::arg("path"));

  mod.def("embed", &embed, py::arg("model"), py::arg("graph"));

  py::class_<SimilarityReport>(mod, "SimilarityReport")
      .def_readonly("per_node", &SimilarityReport::per_node)
      .def_readonly("mean", &SimilarityReport::mean);
  mod.def("mean_neighbor_similarity", &mean_neighbor_similarity, py::arg("features"),
          py::arg("graph"));

  py::class_<SimilarityTable>(mod, "SimilarityTable")
      .def_readonly("raw", &SimilarityTable::raw)
      .def_readonly("encoder", &SimilarityTable::encoder)
      .def_readonly("decoder", &SimilarityTable::decoder)
      .def_readonly("decoder_draws", &SimilarityTable::decoder_draws);
  mod.def("similarity_table", &similarity_table, py::arg("model"), py::arg("graph"),
          py::arg("mask_ratio"), py::arg("seed"), py::arg("draws") = 5,
          py::arg("remask") = false);

  py::class_<ProbeOptions>(mod, "ProbeOptions")
      .def(py::init<>())
      .def_readwrite("lr", &ProbeOptions::lr)
      .def_readwrite("steps", &ProbeOptions::steps)
      .def_readwrite("seed", &ProbeOptions::seed);
  py::class_<ProbeResult>(mod, "ProbeResult")
      .def_readonly("test_accuracy", &ProbeResult::test_accuracy)
      .def_readonly("val_accuracy", &ProbeResult::val_accuracy)
      .def_readonly("selected_step", &ProbeResult::selected_step);
  mod.def("linear_probe", &linear_probe, py::arg("z"), py::arg("labels"), py::arg("splits"),
          py::arg("options") = ProbeOptions{}, py::call_guard<py::gil_scoped_release>());

  py::class_<RankingMetrics>(mod, "RankingMetrics")
      .def_readonly("auc", &RankingMetrics::auc)
      .def_readonly("ap", &RankingMetrics::ap);
  mod.def(
      "ranking_metrics",
      [](const std::vector<double>& pos, const std::vector<double>& neg) {
        return ranking_metrics(pos, neg);
      },
      py::arg("pos_scores"), py::arg("neg_scores"));

  py::class_<EdgeSplit>(mod, "EdgeSplit")
      .def_readonly("train_graph", &EdgeSplit::train_graph)
      .def_readonly("test_pos", &EdgeSplit::test_pos)
      .def_readonly("test_neg", &EdgeSplit::test_neg);
  mod.def("split_edges", &split_edges, py::arg("graph"), py::arg("test_ratio"), py::arg("seed"));
  mod.def(
      "link_scores",
      [](const Matrix& z, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
        return link_scores(z, pairs);
      },
      py::arg("z"), py::arg("pairs"));

  py::class_<GradCheckEntry>(mod, "GradCheckEntry")
      .def_readonly("name", &GradCheckEntry::name)
      .def_readonly("error", &GradCheckEntry::error);
  py::class_<GradCheckReport>(mod, "GradCheckReport")
      .def_readonly("entries", &GradCheckReport::entries)
      .def_readonly("max_error", &GradCheckReport::max_error)
      .def_readonly("worst", &GradCheckReport::worst)
      .def("passes", &GradCheckReport::passes, py::arg("threshold") = 1e-4);
  mod.def("run_gradcheck", &run_gradcheck, py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());
}
