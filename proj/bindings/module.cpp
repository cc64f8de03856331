// Python bindings for the mcbounds core: datasets, selectors, the bootstrap
// ensemble, MCB/MUC construction, VSCS, and the simulation harness.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcb/bootstrap.hpp"
#include "mcb/csv.hpp"
#include "mcb/dataset.hpp"
#include "mcb/errors.hpp"
#include "mcb/mcb.hpp"
#include "mcb/reports.hpp"
#include "mcb/rng.hpp"
#include "mcb/selectors.hpp"
#include "mcb/sim.hpp"
#include "mcb/special.hpp"
#include "mcb/vscs.hpp"

namespace py = pybind11;
using namespace mcb;

namespace {

SelectorSpec make_selector(const std::string& kind, std::optional<double> lambda, int cv_folds,
                           const std::string& ic, double ic_custom_cn, double adaptive_gamma,
                           const std::string& adaptive_init, double scad_a, double mcp_gamma,
                           std::uint64_t seed, int max_sweeps) {
  SelectorSpec spec;
  spec.kind = selector_kind_from_name(kind);
  spec.lambda = lambda;
  spec.cv_folds = cv_folds;
  if (ic == "aic")
    spec.ic = IcRule::Aic;
  else if (ic == "bic")
    spec.ic = IcRule::Bic;
  else if (ic == "custom")
    spec.ic = IcRule::Custom;
  else
    throw ConfigError("unknown IC rule: " + ic);
  spec.ic_custom_cn = ic_custom_cn;
  spec.adaptive_gamma = adaptive_gamma;
  if (adaptive_init == "lasso_cv")
    spec.adaptive_init = AdaptiveInit::LassoCv;
  else if (adaptive_init == "ols")
    spec.adaptive_init = AdaptiveInit::Ols;
  else
    throw ConfigError("unknown adaptive_init: " + adaptive_init);
  spec.scad_a = scad_a;
  spec.mcp_gamma = mcp_gamma;
  spec.seed = seed;
  spec.max_sweeps = max_sweeps;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Model confidence bounds for variable selection";

  py::register_exception<CsvError>(m, "CsvError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<ModelIndexSet>(m, "ModelIndexSet")
      .def(py::init([](const std::vector<int>& indices, int p) {
             return ModelIndexSet::from_indices(indices, p);
           }),
           py::arg("indices"), py::arg("p"))
      .def_static("full", &ModelIndexSet::full, py::arg("p"))
      .def_property_readonly("p", &ModelIndexSet::ambient)
      .def("indices", &ModelIndexSet::indices)
      .def("__len__", &ModelIndexSet::size)
      .def("__contains__", &ModelIndexSet::contains)
      .def("is_subset_of", &ModelIndexSet::is_subset_of)
      .def("__eq__", [](const ModelIndexSet& a, const ModelIndexSet& b) { return a == b; })
      .def("__repr__", [](const ModelIndexSet& s) {
        return "ModelIndexSet(" + s.to_string() + ", p=" + std::to_string(s.ambient()) + ")";
      });

  py::class_<Dataset>(m, "Dataset")
      .def(py::init([](Eigen::MatrixXd X, Eigen::VectorXd y, std::vector<std::string> names,
                       bool standardized) {
             Dataset d{std::move(X), std::move(y), std::move(names), standardized};
             if (d.names.empty())
               for (int j = 0; j < d.p(); ++j) d.names.push_back("x" + std::to_string(j + 1));
             d.validate();
             return d;
           }),
           py::arg("X"), py::arg("y"), py::arg("names") = std::vector<std::string>{},
           py::arg("standardized") = false)
      .def_readonly("X", &Dataset::X)
      .def_readonly("y", &Dataset::y)
      .def_readonly("names", &Dataset::names)
      .def_readonly("standardized", &Dataset::standardized)
      .def_property_readonly("n", &Dataset::n)
      .def_property_readonly("p", &Dataset::p);

  py::class_<StandardizeRecord>(m, "StandardizeRecord")
      .def_readonly("x_center", &StandardizeRecord::x_center)
      .def_readonly("x_scale", &StandardizeRecord::x_scale)
      .def_readonly("y_center", &StandardizeRecord::y_center)
      .def("to_original", &StandardizeRecord::to_original, py::arg("std_coef"));

  m.def("standardize", &standardize, py::arg("data"));
  m.def("read_dataset_csv", &read_dataset_csv, py::arg("path"), py::arg("response_column"));
  m.def("write_dataset_csv", &write_dataset_csv, py::arg("data"), py::arg("response_name"),
        py::arg("path"));

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("coefficients", &FitResult::coefficients)
      .def_readonly("support", &FitResult::support)
      .def_readonly("residuals", &FitResult::residuals)
      .def_readonly("rss", &FitResult::rss)
      .def_readonly("sigma_hat", &FitResult::sigma_hat)
      .def_readonly("degenerate", &FitResult::degenerate);

  m.def("fit_ols", &fit_ols, py::arg("data"), py::arg("support"));

  py::class_<SelectorSpec>(m, "SelectorSpec")
      .def(py::init(&make_selector), py::arg("kind") = "adaptive_lasso",
           py::arg("lambda_") = std::nullopt, py::arg("cv_folds") = 10, py::arg("ic") = "bic",
           py::arg("ic_custom_cn") = 0.0, py::arg("adaptive_gamma") = 2.0,
           py::arg("adaptive_init") = "lasso_cv", py::arg("scad_a") = 3.7,
           py::arg("mcp_gamma") = 3.0, py::arg("seed") = 0, py::arg("max_sweeps") = 10000)
      .def_property_readonly("kind",
                             [](const SelectorSpec& s) { return selector_kind_name(s.kind); })
      .def_readwrite("cv_folds", &SelectorSpec::cv_folds)
      .def_readwrite("seed", &SelectorSpec::seed);

  py::class_<Selection>(m, "Selection")
      .def_readonly("support", &Selection::support)
      .def_readonly("fit", &Selection::fit)
      .def_readonly("lambda_", &Selection::lambda);

  m.def("select", &mcb::select, py::arg("data"), py::arg("spec"));
  m.def("stepwise_ic", &stepwise_ic, py::arg("data"), py::arg("penalty_cn"));
  m.def("lambda_grid", &lambda_grid, py::arg("data"), py::arg("spec"));
  m.def(
      "cross_validate_lambda",
      [](const Dataset& data, const SelectorSpec& spec,
         const std::optional<std::vector<double>>& grid) {
        return grid ? cross_validate_lambda(data, spec, *grid)
                    : cross_validate_lambda(data, spec);
      },
      py::arg("data"), py::arg("spec"), py::arg("grid") = std::nullopt);
  m.def("cv_fold_assignment", &cv_fold_assignment, py::arg("n"), py::arg("folds"),
        py::arg("seed"));
  m.def("soft_threshold", &soft_threshold, py::arg("z"), py::arg("t"));
  m.def("scad_coordinate", &scad_coordinate, py::arg("z"), py::arg("v"), py::arg("lambda_"),
        py::arg("a"));
  m.def("mcp_coordinate", &mcp_coordinate, py::arg("z"), py::arg("v"), py::arg("lambda_"),
        py::arg("gamma"));

  py::class_<BootstrapEnsemble>(m, "BootstrapEnsemble")
      .def_readonly("models", &BootstrapEnsemble::models)
      .def_readonly("B", &BootstrapEnsemble::B)
      .def_readonly("frequencies", &BootstrapEnsemble::frequencies)
      .def_readonly("seed", &BootstrapEnsemble::seed)
      .def_property_readonly("p", &BootstrapEnsemble::p)
      .def_property_readonly(
          "method", [](const BootstrapEnsemble& e) { return bootstrap_method_name(e.method); })
      .def("to_json", [](const BootstrapEnsemble& e) { return ensemble_to_json(e).dump(); });

  m.def("hard_threshold_level", &hard_threshold_level, py::arg("n"));
  m.def(
      "residual_resample",
      [](const Dataset& data, const FitResult& fit, std::uint64_t seed) {
        auto rng = substream(seed, 0);
        return residual_resample(data, fit, rng);
      },
      py::arg("data"), py::arg("fit"), py::arg("seed"));
  m.def(
      "modified_residual_resample",
      [](const Dataset& data, const FitResult& fit, std::uint64_t seed,
         std::optional<double> threshold) {
        auto rng = substream(seed, 0);
        return modified_residual_resample(data, fit, rng, threshold);
      },
      py::arg("data"), py::arg("fit"), py::arg("seed"), py::arg("threshold") = std::nullopt);
  m.def(
      "build_ensemble",
      [](const Dataset& data, const SelectorSpec& spec, int B, const std::string& method,
         std::uint64_t seed, int threads) {
        const BootstrapMethod bm = method == "auto" ? default_bootstrap_method(spec.kind)
                                                    : bootstrap_method_from_name(method);
        return build_ensemble(data, spec, B, bm, seed, threads);
      },
      py::arg("data"), py::arg("spec"), py::arg("B"), py::arg("method") = "auto",
      py::arg("seed") = 0, py::arg("threads") = 0);

  py::class_<McbPair>(m, "McbPair")
      .def_readonly("lbm", &McbPair::lbm)
      .def_readonly("ubm", &McbPair::ubm)
      .def_readonly("width", &McbPair::width)
      .def_readonly("bcr", &McbPair::bcr);

  py::class_<Muc>(m, "Muc")
      .def_readonly("entries", &Muc::entries)
      .def_readonly("cr", &Muc::cr)
      .def_readonly("p", &Muc::p)
      .def_readonly("pair_evaluations", &Muc::pair_evaluations)
      .def_property_readonly("algorithm",
                             [](const Muc& m) { return mcb_algorithm_name(m.algorithm); })
      .def("total_pair_evaluations", &Muc::total_pair_evaluations);

  py::enum_<BoundConstraint>(m, "BoundConstraint")
      .value("NONE", BoundConstraint::None)
      .value("LOWER_EMPTY", BoundConstraint::LowerEmpty)
      .value("UPPER_FULL", BoundConstraint::UpperFull);

  m.def("bcr", &bcr, py::arg("m1"), py::arg("m2"), py::arg("ensemble"));
  m.def("mcb_exhaustive", &mcb_exhaustive, py::arg("ensemble"),
        py::arg("constraint") = BoundConstraint::None);
  m.def("mcb_ranked", &mcb_ranked, py::arg("ensemble"),
        py::arg("constraint") = BoundConstraint::None);
  m.def("importance_ranking", &importance_ranking, py::arg("ensemble"));
  m.def("select_final_mcb", &select_final_mcb, py::arg("muc"), py::arg("alpha"));
  m.def("mcs_enumerate", &mcs_enumerate, py::arg("pair"));
  m.def("amuc", &amuc, py::arg("muc"));
  m.def("muc_points", &muc_points, py::arg("muc"));
  m.def("mcb_report", [](const Muc& muc, const McbPair& pair, double alpha,
                         const std::vector<std::string>& names) {
    return mcb_report(muc, pair, alpha, names).dump();
  });

  py::class_<VscsResult>(m, "VscsResult")
      .def_readonly("surviving", &VscsResult::surviving)
      .def_readonly("alpha", &VscsResult::alpha)
      .def_readonly("lbms", &VscsResult::lbms)
      .def_readonly("cardinality", &VscsResult::cardinality);

  m.def("vscs", &vscs, py::arg("data"), py::arg("alpha"));
  m.def("vscs_sweep", &vscs_sweep, py::arg("data"), py::arg("alphas"));
  m.def("minimal_models", &minimal_models, py::arg("surviving"));

  m.def("incomplete_beta", &incomplete_beta, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("f_survival", &f_survival, py::arg("d1"), py::arg("d2"), py::arg("f"));

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init([](int n, int p, int p_star, double rho, double gamma, double sigma,
                       const std::string& error_dist, int B, int reps,
                       std::vector<double> alpha_grid, const SelectorSpec& selector,
                       std::uint64_t seed, const std::string& algorithm, bool run_vscs) {
             SimConfig cfg;
             cfg.n = n;
             cfg.p = p;
             cfg.p_star = p_star;
             cfg.rho = rho;
             cfg.gamma = gamma;
             cfg.sigma = sigma;
             cfg.error_dist = error_dist_from_name(error_dist);
             cfg.B = B;
             cfg.reps = reps;
             cfg.alpha_grid = std::move(alpha_grid);
             cfg.selector = selector;
             cfg.seed = seed;
             cfg.algorithm = algorithm == "exhaustive" ? McbAlgorithm::Exhaustive
                                                       : McbAlgorithm::Ranked;
             cfg.run_vscs = run_vscs;
             cfg.validate();
             return cfg;
           }),
           py::arg("n") = 100, py::arg("p") = 10, py::arg("p_star") = 5, py::arg("rho") = 0.0,
           py::arg("gamma") = 1.0, py::arg("sigma") = 1.0, py::arg("error_dist") = "normal",
           py::arg("B") = 200, py::arg("reps") = 200,
           py::arg("alpha_grid") = std::vector<double>{0.05},
           py::arg("selector") = SelectorSpec{}, py::arg("seed") = 0,
           py::arg("algorithm") = "ranked", py::arg("run_vscs") = false)
      .def("true_theta", &SimConfig::true_theta)
      .def("true_model", &SimConfig::true_model)
      .def("covariance", &SimConfig::covariance);

  py::class_<AlphaRow>(m, "AlphaRow")
      .def_readonly("alpha", &AlphaRow::alpha)
      .def_readonly("coverage_rate", &AlphaRow::coverage_rate)
      .def_readonly("mean_cardinality", &AlphaRow::mean_cardinality)
      .def_readonly("mean_width", &AlphaRow::mean_width);

  py::class_<McReport>(m, "McReport")
      .def_readonly("mcb", &McReport::mcb)
      .def_readonly("vscs", &McReport::vscs)
      .def_readonly("mean_cr", &McReport::mean_cr)
      .def_readonly("mean_amuc", &McReport::mean_amuc)
      .def_readonly("underfit_rate", &McReport::underfit_rate)
      .def_readonly("overfit_rate", &McReport::overfit_rate)
      .def_readonly("exact_rate", &McReport::exact_rate);

  py::class_<Diagnostics>(m, "Diagnostics")
      .def_readonly("underfit_rate", &Diagnostics::underfit_rate)
      .def_readonly("overfit_rate", &Diagnostics::overfit_rate)
      .def_readonly("exact_rate", &Diagnostics::exact_rate);

  m.def("generate", &generate, py::arg("config"), py::arg("rep_index"));
  m.def(
      "run_coverage_experiment",
      [](const SimConfig& cfg, int threads) { return run_coverage_experiment(cfg, threads); },
      py::arg("config"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("selection_diagnostics", &selection_diagnostics, py::arg("ensemble"), py::arg("truth"));

  py::class_<SelectorComparison>(m, "SelectorComparison")
      .def_readonly("labels", &SelectorComparison::labels)
      .def_readonly("mean_cr", &SelectorComparison::mean_cr)
      .def_readonly("mean_amuc", &SelectorComparison::mean_amuc)
      .def_readonly("p", &SelectorComparison::p);

  m.def(
      "compare_selectors",
      [](const SimConfig& cfg, const std::vector<SelectorSpec>& specs,
         const std::vector<std::string>& labels, int threads) {
        return compare_selectors(cfg, specs, labels, threads);
      },
      py::arg("config"), py::arg("selectors"), py::arg("labels"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());

#ifdef MCB_VERSION
  m.attr("__version__") = MCB_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
