
import pytest
from hypothesis import given
from hypothesis import strategies as st

from og10.errors import ModelConsistencyError
from og10.fibration import (
    FibrationModel,
    FibrationStratum,
    build_og10_model,
    total_euler,
    trace_rows,
)
from og10.singularity import SingularityConfiguration, mu_total


def test_zero_fibers():
    model = FibrationModel((FibrationStratum("a", None, 0), FibrationStratum("b", 7, 0)))
    assert total_euler(model) == 0


def test_point_strata():
    model = FibrationModel((FibrationStratum("p", 3, 1), FibrationStratum("q", 4, 2)))
    assert total_euler(model) == 11


def test_duplicate_labels():
    with pytest.raises(ModelConsistencyError):
        FibrationModel((FibrationStratum("p", 3, 1), FibrationStratum("p", 4, 2)))


def test_unknown_base_needs_zero_fiber():
    with pytest.raises(ModelConsistencyError):
        FibrationStratum("p", None, 1)


def test_og10_model():
    model = build_og10_model()
    assert total_euler(model) == 176904
    assert len(model.strata) == 22
    assert model.strata[0].label == "U"
    nonzero = model.nonzero_strata()
    assert [s.label for s in nonzero] == ["5A1"]
    assert nonzero[0].base_euler == 176904
    assert nonzero[0].fiber_euler == 1
    for s in model.strata:
        if mu_total(s.configuration) <= 4:
            assert s.fiber_euler == 0
    top = [s for s in model.strata if mu_total(s.configuration) == 5]
    assert len(top) == 9
    assert sum(s.fiber_euler != 0 for s in top) == 1


def test_trace_rows():
    rows = trace_rows(build_og10_model())
    assert rows[0]["geometric_genus"] == 6
    assert rows[-1] == {
        "label": "5A1",
        "mu_tot": 5,
        "geometric_genus": 1,
        "fiber_euler": 1,
        "base_euler": 176904,
        "contribution": 176904,
    }
    assert all(r["base_euler"] == "unused: fiber chi = 0" for r in rows[:-1])


strata_lists = st.lists(
    st.tuples(st.integers(-50, 50), st.integers(-5, 5)), max_size=8
)


def _model(pairs, prefix):
    return FibrationModel(tuple(FibrationStratum(f"{prefix}{i}", b, f) for i, (b, f) in enumerate(pairs)))


@given(strata_lists, st.randoms())
def test_permutation_invariance(pairs, rnd):
    model = _model(pairs, "s")
    shuffled = list(model.strata)
    rnd.shuffle(shuffled)
    assert total_euler(FibrationModel(tuple(shuffled))) == total_euler(model)


@given(strata_lists, strata_lists)
def test_additive_under_union(p, q):
    left, right = _model(p, "l"), _model(q, "r")
    assert total_euler(left + right) == total_euler(left) + total_euler(right)
