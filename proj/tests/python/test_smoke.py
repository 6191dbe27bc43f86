"""Smoke tests for the classgraph python module."""

import classgraph


def test_construct_and_multiply():
    g = classgraph.symmetric(4)
    assert g.order == 24
    assert len(g) == 24
    e = g.identity
    for a in range(g.order):
        assert g.mul(a, g.inv(a)) == e
    assert not g.is_abelian()
    assert classgraph.cyclic(15).is_abelian()


def test_normal_subgroups_and_class_graph():
    g = classgraph.symmetric(4)
    normals = classgraph.normal_subgroups(g)
    assert [n.order for n in normals] == [1, 4, 12, 24]
    a4 = normals[2]
    assert a4.is_normal()
    graph = classgraph.class_graph(g, a4)
    sizes = sorted(v["size"] for v in graph["vertices"])
    assert sizes == [3, 8]
    assert len(graph["components"]) == 2
    primes = classgraph.prime_graph(g, a4)
    assert primes["vertices"] == [2, 3]


def test_verify_pair():
    g = classgraph.symmetric(4)
    a4 = classgraph.normal_subgroups(g)[2]
    report = classgraph.verify_pair(g, a4)
    assert report["g_order"] == 24
    assert report["n_order"] == 12
    assert len(report["checks"]) == 19
    assert all(c["pass"] for c in report["checks"])
    assert report["structure"]["verdict"] == "quasi_frobenius_abelian"


def test_fp_realization():
    g = classgraph.realize_presentation("x,y | x^2, y^3, (xy)^2", "S3")
    assert g.order == 6


def test_input_errors_are_python_exceptions():
    import pytest

    g = classgraph.symmetric(3)
    with pytest.raises(classgraph.InputError):
        classgraph.Subgroup(g, [0, 1, 2, 3])  # not a subgroup


def test_small_corpus_run():
    report = classgraph.run_corpus(
        {
            "cyclic_max": 6,
            "dihedral_max": 4,
            "symmetric_max": 3,
            "extraspecial_primes": [],
            "include_products": False,
            "include_semilinear": False,
            "include_sl25": False,
            "include_holomorphs": False,
            "include_fp_examples": False,
        },
        jobs=2,
    )
    assert report["summary"]["failures"] == 0
    assert report["summary"]["pairs"] > 10
