"""Deterministic simulator of self-monitoring DSP farmlets."""

from ._core import (
    AgentParams,
    CheckTarget,
    CompareResult,
    CompareRow,
    ConfigError,
    ControlDecision,
    ControlKind,
    DValueRow,
    ErrorSchedule,
    EventKind,
    EventRow,
    MetricsLog,
    NodeTotals,
    PhaseDMean,
    SchedulePhase,
    SensitivityMatrix,
    SimConfig,
    Summary,
    ThroughputRow,
    adjusted_sigmoid,
    best_check_target,
    compare_runs,
    decide_control,
    encode_config,
    load_config,
    preset,
    run,
    update_sensitivity,
    utility_value,
)

__version__ = "1.0.0"

__all__ = [
    "AgentParams",
    "CheckTarget",
    "CompareResult",
    "CompareRow",
    "ConfigError",
    "ControlDecision",
    "ControlKind",
    "DValueRow",
    "ErrorSchedule",
    "EventKind",
    "EventRow",
    "MetricsLog",
    "NodeTotals",
    "PhaseDMean",
    "SchedulePhase",
    "SensitivityMatrix",
    "SimConfig",
    "Summary",
    "ThroughputRow",
    "adjusted_sigmoid",
    "best_check_target",
    "compare_runs",
    "decide_control",
    "encode_config",
    "load_config",
    "preset",
    "run",
    "update_sensitivity",
    "utility_value",
]
