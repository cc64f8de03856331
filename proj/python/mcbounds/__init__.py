"""Model confidence bounds for variable selection in linear regression.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (  # noqa: F401
    AlphaRow,
    BootstrapEnsemble,
    BoundConstraint,
    ConfigError,
    CsvError,
    Dataset,
    Diagnostics,
    FitResult,
    McbPair,
    McReport,
    ModelIndexSet,
    Muc,
    NumericError,
    Selection,
    SelectorComparison,
    SelectorSpec,
    SimConfig,
    StandardizeRecord,
    VscsResult,
    __version__,
    amuc,
    bcr,
    build_ensemble,
    compare_selectors,
    cross_validate_lambda,
    cv_fold_assignment,
    f_survival,
    fit_ols,
    generate,
    hard_threshold_level,
    importance_ranking,
    incomplete_beta,
    lambda_grid,
    mcb_exhaustive,
    mcb_ranked,
    mcb_report,
    mcp_coordinate,
    mcs_enumerate,
    minimal_models,
    modified_residual_resample,
    muc_points,
    read_dataset_csv,
    residual_resample,
    run_coverage_experiment,
    scad_coordinate,
    select,
    select_final_mcb,
    selection_diagnostics,
    soft_threshold,
    standardize,
    stepwise_ic,
    vscs,
    vscs_sweep,
    write_dataset_csv,
)
