"""Dissipative particle dynamics integrator benchmark."""

from ._core import (
    ConfigError,
    CriticalResult,
    DegeneratePairError,
    DpdParams,
    EfficiencyRow,
    EstimateError,
    ExperimentConfig,
    ForceReport,
    RdfCurve,
    RdfStudyResult,
    RunReport,
    SchemeKind,
    Simulation,
    StaleListError,
    StepCounters,
    SweepResult,
    SweepSlope,
    apply_config_text,
    bench_cpu_per_step,
    critical_stepsize,
    efficiency_table,
    fit_loglog_slope,
    geometric_grid,
    load_config_file,
    rdf_study,
    run_averaged,
    run_single,
    scheme_from_name,
    scheme_name,
    sweep,
    write_efficiency_csv,
    write_rdf_csv,
    write_runs_csv,
)

__version__ = "1.0.0"

__all__ = [
    "ConfigError",
    "CriticalResult",
    "DegeneratePairError",
    "DpdParams",
    "EfficiencyRow",
    "EstimateError",
    "ExperimentConfig",
    "ForceReport",
    "RdfCurve",
    "RdfStudyResult",
    "RunReport",
    "SchemeKind",
    "Simulation",
    "StaleListError",
    "StepCounters",
    "SweepResult",
    "SweepSlope",
    "apply_config_text",
    "bench_cpu_per_step",
    "critical_stepsize",
    "efficiency_table",
    "fit_loglog_slope",
    "geometric_grid",
    "load_config_file",
    "rdf_study",
    "run_averaged",
    "run_single",
    "scheme_from_name",
    "scheme_name",
    "sweep",
    "write_efficiency_csv",
    "write_rdf_csv",
    "write_runs_csv",
]
