import json

import numpy as np
import pytest

from bingspace.action import conjugation_action
from bingspace.core import PermFamily
from bingspace.errors import ValidationError
from bingspace.groups import cyclic_group, symmetric_group
from bingspace.invariants import Subset
from bingspace.serialize import (
    action_from_json,
    action_to_json,
    binop_from_json,
    binop_to_json,
    family_from_json,
    family_to_json,
    group_from_json,
    group_to_json,
    subset_from_json,
    subset_to_json,
)

from conftest import PHI2


def roundtrip(obj, dump, load):
    return load(json.loads(json.dumps(dump(obj))))


def test_binop():
    assert binop_to_json(PHI2) == {"n": 2, "table": [[0, 1], [1, 0]]}
    assert roundtrip(PHI2, binop_to_json, binop_from_json) == PHI2
    with pytest.raises(ValidationError):
        binop_from_json({"n": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(ValidationError):
        binop_from_json({"n": 2})


def test_family():
    fam = PermFamily([[1, 0], [0, 1]])
    assert family_to_json(fam) == {"n": 2, "perms": [[1, 0], [0, 1]]}
    assert roundtrip(fam, family_to_json, family_from_json) == fam
    with pytest.raises(ValidationError):
        family_from_json({"n": 2, "perms": [[0, 0], [0, 1]]})


def test_group():
    G = symmetric_group(3)
    assert roundtrip(G, group_to_json, group_from_json) == G
    data = group_to_json(cyclic_group(4))
    data["inv"] = [0, 3, 2, 1]
    assert group_from_json(data) == cyclic_group(4)
    data["inv"] = [0, 1, 2, 3]
    with pytest.raises(ValidationError):
        group_from_json(data)
    bad = group_to_json(cyclic_group(3))
    bad["mul"][1][1] = 0
    with pytest.raises(ValidationError):
        group_from_json(bad)


def test_action():
    A = conjugation_action(symmetric_group(3))
    data = action_to_json(A)
    assert sorted(data["act"], key=int) == [str(g) for g in range(6)]
    assert roundtrip(A, action_to_json, action_from_json) == A


def test_action_validation_witness():
    data = action_to_json(conjugation_action(cyclic_group(2)))
    data["act"]["0"]["table"] = [[1, 0], [1, 0]]
    with pytest.raises(ValidationError) as info:
        action_from_json(data)
    assert info.value.witness == {"axiom": "identity", "g": 0, "h": None, "t": 0, "x": 0}
    assert not np.array_equal(action_from_json(data, validate=False).act[0], [[0, 1], [0, 1]])


def test_action_bad_keys():
    data = action_to_json(conjugation_action(cyclic_group(2)))
    del data["act"]["1"]
    with pytest.raises(ValidationError):
        action_from_json(data)


def test_subset():
    S = Subset.of(5, [0, 3])
    assert subset_to_json(S) == {"n": 5, "members": [0, 3]}
    assert roundtrip(S, subset_to_json, subset_from_json) == S
    with pytest.raises(ValidationError):
        subset_from_json({"n": 5, "members": [3, 0]})
