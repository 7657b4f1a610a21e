import math

import hypothesis.strategies as st
import pytest
from hypothesis import HealthCheck, settings

from timcorr import ChannelKind, ModelParams, critical_signature, reduced_density
from timcorr.correlations import XState

settings.register_profile(
    "timcorr",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("timcorr")


@pytest.fixture(scope="session")
def ground_half():
    """Ground-state X state at coupling 0.5, nearest-neighbor pair."""
    return reduced_density(ModelParams(0.5))


@pytest.fixture(scope="session")
def pf_signature_half():
    """Phase-flip critical signature at coupling 0.5."""
    return critical_signature(0.5, ChannelKind.PHASE_FLIP)


@pytest.fixture(scope="session")
def bpf_p_sc_half():
    """Bit-phase-flip sudden-change point at coupling 0.5."""
    from timcorr import find_p_sc

    return find_p_sc(0.5, ChannelKind.BIT_PHASE_FLIP)


@st.composite
def xstates(draw):
    """Valid-by-construction X states: simplex diagonal, scaled coherences."""
    w1 = draw(st.floats(0.02, 1.0))
    w2 = draw(st.floats(0.02, 1.0))
    w3 = draw(st.floats(0.02, 1.0))
    total = w1 + w2 + w3
    a, two_b, d = w1 / total, w2 / total, w3 / total
    b = 0.5 * two_b
    z = draw(st.floats(-1.0, 1.0)) * b
    f = draw(st.floats(-1.0, 1.0)) * math.sqrt(a * d)
    return XState(a=a, b=b, d=d, z=z, f=f)
