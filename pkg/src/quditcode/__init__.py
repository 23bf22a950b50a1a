"""Minimal single-qudit codes protecting a qubit against phase damping."""

from .channels import ChannelKind, ChannelSpec, WeylWeights, apply_closed_form
from .codes import AmplitudeCode, PhaseCode, RepetitionCodeSpec
from .fidelity import (
    SweepRecord,
    f_damp_avg,
    f_damp_state,
    f_rec_avg,
    f_rec_state,
    repetition_fidelity,
    repetition_n_for_dim,
    run_sweep,
)
from .recovery import recovery_map_amplitude, recovery_map_phase

__all__ = [
    "AmplitudeCode",
    "ChannelKind",
    "ChannelSpec",
    "PhaseCode",
    "RepetitionCodeSpec",
    "SweepRecord",
    "WeylWeights",
    "apply_closed_form",
    "f_damp_avg",
    "f_damp_state",
    "f_rec_avg",
    "f_rec_state",
    "recovery_map_amplitude",
    "recovery_map_phase",
    "repetition_fidelity",
    "repetition_n_for_dim",
    "run_sweep",
]
