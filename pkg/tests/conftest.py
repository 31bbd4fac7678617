# -*- coding: utf-8 -*-
import os
import tempfile

# keep settings and logs out of the real home before liebranch is imported
_TMP = tempfile.mkdtemp(prefix="liebranch-tests-")
os.environ.setdefault("LIEBRANCH_HOME", os.path.join(_TMP, "home"))
os.environ.setdefault("LIEBRANCH_LOG_DIR", os.path.join(_TMP, "logs"))

import pytest
from hypothesis import strategies as st

from liebranch.reps import dim
from liebranch.rootsys import LieType, SimpleLieType


SMALL_TYPES = [SimpleLieType("A", 1), SimpleLieType("A", 2), SimpleLieType("B", 2), SimpleLieType("G", 2)]


@st.composite
def dominant_weights(draw, t: SimpleLieType, max_coord: int = 3, max_dim: int = 2000):
    """Dominant weights of ``t`` with small coordinates and bounded dimension."""
    coords = tuple(draw(st.integers(min_value=0, max_value=max_coord)) for _ in range(t.rank))
    lt = LieType((t,))
    if dim(lt, coords) > max_dim:
        coords = tuple(min(c, 1) for c in coords)
    return coords


@pytest.fixture
def f4():
    return SimpleLieType("F", 4)


@pytest.fixture
def e6():
    return SimpleLieType("E", 6)
