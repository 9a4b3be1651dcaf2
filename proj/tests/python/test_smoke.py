import pytest

import jtube


def test_version():
    assert jtube.__version__ == "0.1.0"


def test_classify_minkowski():
    c = jtube.classify("mink", 4, [3, 1, 0, 0])
    assert c["values"] == pytest.approx([4.0, 2.0])
    assert c["index"] == 2


def test_bad_element_raises():
    with pytest.raises(ValueError):
        jtube.classify("sym", 3, [1.0, 2.0])


def test_support_report_parity_mode():
    with pytest.raises(ValueError, match="Wallach"):
        jtube.support_report("sym", 3, "2/3")
    r = jtube.support_report("sym", 3, "2/3", parity_only=True)
    vanishing = sorted(c["index"] for c in r["components"] if c["vanishes"])
    assert vanishing == [-3, 3]
    assert r["wallach_admissible"] is False


def test_trace_formula():
    got, formula = jtube.trace_h("sym", 3, 2)
    assert got == pytest.approx(2.0)
    assert formula == pytest.approx(2.0)


def test_boundary_value():
    v = jtube.tilde_mu_boundary("sym", 1, 1.0, [2.0])
    assert v == pytest.approx(0.5j)


def test_kernel_gram():
    lo, norm = jtube.kernel_gram_min_eigenvalue(1.0, [1j, 2j])
    assert lo > 0
    assert norm > 0.5


def test_cli_round_trip_is_deterministic():
    args = ["modular-verify", "--dim", "3", "--trials", "5", "--seed", "11"]
    a = jtube.run(args)
    b = jtube.run(args)
    assert a[0] == 0
    assert a[1] == b[1]


def test_cli_usage_error():
    code, _, err = jtube.run(["classify", "--algebra", "sym:3", "--element", "oops"])
    assert code == 2
    assert err


def test_run_json():
    code, report = jtube.run_json("support-report", "--algebra", "mink:4", "--s", "1")
    assert code == 0
    assert report["summary"]["pass"] is True
    assert report["results"]["in_double_cone_boundary"] is True
    assert all(c["vanishes"] for c in report["results"]["components"])
