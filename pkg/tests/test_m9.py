import pytest

from commgraph.centralizer import centralizer_space
from commgraph.m9 import m9_certificate
from commgraph.matrix import Matrix


@pytest.fixture(scope="module")
def cert():
    return m9_certificate()


def test_all_stages_pass(cert):
    assert set(cert.stages) == set("abcdefgh")
    assert all(s["passed"] for s in cert.stages.values())


def test_counts(cert):
    d = cert.stages["d"]
    assert cert.stages["b"]["algebra_elements"] == 512
    assert d["subfield_nonscalar"] == 6 and d["subfield_centralizers"] == 1
    assert d["same_centralizer_as_A_hat"] == 504
    assert len(cert.subfield_elements) == 8


def test_defining_identities(cert):
    F = cert.A.field
    I = Matrix.identity(F, 9)
    K = I + cert.N
    assert (cert.N @ cert.N @ cert.N).is_zero()
    assert cert.B == K @ cert.A @ K.inverse()
    assert cert.S1.inverse() @ cert.V @ cert.S1 == cert.Y_hat
    W = K @ cert.V @ K.inverse()
    assert centralizer_space([cert.V, W]).dim == 1 == cert.intersection_dim


def test_json(cert):
    j = cert.to_json()
    assert j["intersection_dim"] == 1 and len(j["subfield_elements"]) == 8
