"""Polarization element chains, projective measurements, and the optical Zeno effect.

Thin Python face of the C++ core: build a chain, propagate a beam, or use the
closed forms directly.

    >>> import zenoptics as zo
    >>> round(zo.zeno_ratio(4), 12)
    0.530790042945
    >>> chain = zo.build_measured_chain(4, zo.HALF_PI, 1.0, 1.0)
    >>> round(zo.intensity(zo.propagate(chain).output), 12)
    0.530790042945
"""

import math

from ._core import (
    Attenuator,
    Depolarizer,
    ElementChain,
    FaradayRotator,
    IntensityTrace,
    JitterConfig,
    JitterResult,
    JonesVector,
    LinearPolarizer,
    McCheck,
    MonteCarloConfig,
    PropagationResult,
    StokesVector,
    SurvivalEstimate,
    SweepRow,
    TraceKind,
    TracePoint,
    Waveplate,
    ZenoConfig,
    ZenoSweepResult,
    __version__,
    asymptotic_deficit,
    build_measured_chain,
    build_unmeasured_chain,
    continuous_intensity,
    intensity,
    intensity_along,
    jittered_output,
    mc_survival,
    mc_survival_exact_check,
    measured_intensity,
    propagate,
    sample_trace,
    segment_of,
    stokes_from_jones,
    zeno_output,
    zeno_ratio,
    zeno_sweep,
)

HALF_PI = math.pi / 2.0

__all__ = [
    "Attenuator",
    "Depolarizer",
    "ElementChain",
    "FaradayRotator",
    "HALF_PI",
    "IntensityTrace",
    "JitterConfig",
    "JitterResult",
    "JonesVector",
    "LinearPolarizer",
    "McCheck",
    "MonteCarloConfig",
    "PropagationResult",
    "StokesVector",
    "SurvivalEstimate",
    "SweepRow",
    "TraceKind",
    "TracePoint",
    "Waveplate",
    "ZenoConfig",
    "ZenoSweepResult",
    "__version__",
    "asymptotic_deficit",
    "build_measured_chain",
    "build_unmeasured_chain",
    "continuous_intensity",
    "intensity",
    "intensity_along",
    "jittered_output",
    "mc_survival",
    "mc_survival_exact_check",
    "measured_intensity",
    "propagate",
    "sample_trace",
    "segment_of",
    "stokes_from_jones",
    "zeno_output",
    "zeno_ratio",
    "zeno_sweep",
]
