import os
import pathlib

import pytest

import qmackey

CORPUS = pathlib.Path(os.environ.get("QM_CORPUS", pathlib.Path(__file__).resolve().parents[2] / "corpus"))


def load(name):
    return qmackey.Instance.load(str(CORPUS / f"{name}.json"))


def test_check_passes():
    inst = load("A_z3_by_z2")
    rep = inst.check()
    assert rep["ok"]
    assert max(rep["product"].values()) < 1e-9
    assert rep["haar_residual"] < 1e-12
    assert inst.product_dim == 6


@pytest.mark.parametrize("name,dims", [
    ("A_z3_by_z2", [1, 1, 2]),
    ("B_z2sq_by_swap", [1, 1, 1, 1, 2]),
    ("C_dual_s3_by_conj", [1, 1, 1, 1, 2, 2]),
    ("D_dual_s3_trivial", [1] * 12),
])
def test_dims_match_oracle(name, dims):
    inst = load(name)
    assert sorted(inst.dims()) == dims
    assert sorted(inst.oracle_dims()) == dims


def test_fusion_agrees():
    inst = load("A_z3_by_z2")
    t = inst.fusion(jobs=2)
    assert t["agree"]
    two = inst.dims().index(2)
    n = len(inst.dims())
    assert sorted(t["formula"][i][two][two] for i in range(n)) == [1, 1, 1]


def test_conjugation_is_involution():
    inst = load("C_dual_s3_by_conj")
    inv = inst.conjugation()
    assert all(inv[inv[i]] == i for i in range(len(inv)))


def test_induce_from_trivial_subgroup():
    inst = load("A_z3_by_z2")
    res = inst.induce([0], u=0)
    assert res["dim"] == 2
    assert res["irreducible"] == res["mackey"]


def test_bad_file_raises():
    with pytest.raises(qmackey.QMackeyError) as err:
        load("bad_comult")
    assert err.value.kind == "ValidationError"
