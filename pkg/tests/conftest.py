from __future__ import annotations

import gc

import pytest


@pytest.fixture(autouse=True, scope="session")
def _reference_counting_only():
    # The stream pyramids keep millions of acyclic cells alive; generational
    # GC rescans them constantly and dominates the heavy tests.  Reference
    # counting reclaims everything the suite allocates.
    was_enabled = gc.isenabled()
    gc.disable()
    yield
    if was_enabled:
        gc.enable()
