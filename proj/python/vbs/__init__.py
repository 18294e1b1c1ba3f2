"""Vibronic spectra from the modified boson-sampling construction."""

from ._core import (
    CircuitSpec,
    DoktorovParameters,
    MolecularModel,
    VbsError,
    bin_sticks,
    build_doktorov,
    compile_circuit,
    enumerate_bin_states,
    estimate_hermite_terms,
    fc_amplitude,
    fcp_exact,
    parse_molecule,
    parse_molecule_json,
    quadrature_overlap,
    required_samples,
    ryser_permanent,
    sample,
    verify,
)

__all__ = [
    "CircuitSpec",
    "DoktorovParameters",
    "MolecularModel",
    "VbsError",
    "bin_sticks",
    "build_doktorov",
    "compile_circuit",
    "enumerate_bin_states",
    "estimate_hermite_terms",
    "fc_amplitude",
    "fcp_exact",
    "parse_molecule",
    "parse_molecule_json",
    "quadrature_overlap",
    "required_samples",
    "ryser_permanent",
    "sample",
    "verify",
]
