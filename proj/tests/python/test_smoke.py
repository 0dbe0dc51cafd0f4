import pytest

import bdkp


def test_qschur_known_values():
    assert bdkp.qschur([1]) == "t_1/2"
    assert bdkp.qschur([2, 1]) == "t_1^3/12 - t_3"
    terms = bdkp.qschur([2, 1], format="json")["terms"]
    assert {"exps": {"t_3": 1}, "coeff": ["-1", "0"]} in terms


def test_tau_and_verify_roundtrip():
    spec = {"hierarchy": "bkp", "partition": [3, 1], "c": [["1/2", "-1/3"], ["2"]]}
    rendered = bdkp.tau(spec, format="json")
    assert rendered["family"] == "bkp"
    assert rendered["partition"] == [3, 1]
    assert len(rendered["terms"]) > 1
    results = bdkp.verify(spec)
    assert [r["name"] for r in results] == ["bkp[tau]"]
    assert all(r["pass"] for r in results)


def test_mdkp_generator_spec_passes_all_checks():
    spec = {
        "hierarchy": "mdkp",
        "partition": [2, 1, 0],
        "generators": [
            {"pivot": 2, "coeffs": {"1": "1/2"}},
            {"pivot": 1, "coeffs": {"0": "-1/3"}},
            {"pivot": 0, "coeffs": {}},
        ],
        "drop_index": 2,
    }
    results = bdkp.verify(spec)
    names = [r["name"] for r in results]
    assert names == sorted(names)
    assert {"annihilator[pair]", "fermionic[mdkp]", "mdkp[pair]"} <= set(names)
    assert all(r["pass"] for r in results)


def test_polynomial_level_checks():
    assert bdkp.is_bkp_tau("t_1/2")
    assert not bdkp.is_bkp_tau("1 + t_1^3")
    assert bdkp.is_mdkp_pair("t_1/2", "(1/2*sqrt2)*t_1")


def test_latex_rendering():
    assert bdkp.qschur([2, 1], format="latex") == r"\frac{1}{12} t_{1}^{3} - t_{3}"


def test_bad_specs_raise():
    with pytest.raises(ValueError):
        bdkp.tau({"hierarchy": "bkp", "partition": [1, 2], "c": [[], []]})
    with pytest.raises(ValueError):
        bdkp.tau({"hierarchy": "bkp", "partition": [1]})  # neither c nor generators
    with pytest.raises(ValueError):
        bdkp.verify({"hierarchy": "bkp", "partition": [1], "c": [[]]}, checks=["fermionic"])


def test_seeded_random_constants_reproduce():
    spec = {"hierarchy": "bkp", "partition": [3, 2, 1], "c": "random"}
    assert bdkp.tau(spec, seed=7) == bdkp.tau(spec, seed=7)
    assert bdkp.tau(spec, seed=7) != bdkp.tau(spec, seed=8)
    assert all(r["pass"] for r in bdkp.verify(spec, seed=7))
