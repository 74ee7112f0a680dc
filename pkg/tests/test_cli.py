import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from artifact.cli import RunConfig, UsageError, main, parse_config


def run(argv, capsys):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_macdonald_E_a1(capsys):
    code, doc = run(["macdonald-E", "--type", "A", "--rank", "1", "--weight", "1", "--k", "3/2", "--q", "5/7"],
                    capsys)
    assert code == 0
    assert doc["E"] == [{"c_exp": 0, "coeff": "1/1", "coweight_exp": [1]}]


def test_spherical_a2(capsys):
    code, doc = run(["spherical", "--type", "A", "--rank", "2", "--I", "1", "--sign", "+"], capsys)
    assert code == 0
    # eps_+(T_w) = k^{l(w)} over W_0^I = {e, s2, s1s2}
    assert doc["spherical"] == {"e": "1/1", "2": "3/2", "1,2": "9/4"}


def test_cocycle_s0(capsys):
    from artifact.exactalg import make_params
    from artifact.opalg import op_context
    from artifact.qkz import cocycle_simple_alternate
    from artifact.rootdata import root_datum
    code, doc = run(["cocycle", "--type", "A", "--rank", "1", "--elem", "s0"], capsys)
    assert code == 0
    d = root_datum("A", 1)
    alt = cocycle_simple_alternate(op_context(d, make_params(d, "3/2", "5/7")), 0)
    want = sorted([{"T": list(w.word), "Y": list(lam), "coeff": f.to_json()} for (w, lam), f in alt.items()],
                  key=json.dumps)
    assert sorted(doc["cocycle"], key=json.dumps) == want


@pytest.mark.parametrize("argv", [
    ["verify", "thm-1exp", "--type", "A", "--rank", "2", "--I", "1"],
    ["verify", "cm-corr", "--type", "A", "--rank", "2", "--mu", "1,0"],
])
def test_verify_examples_pass(argv, capsys):
    code, doc = run(argv, capsys)
    assert code == 0 and doc["status"] == "pass"
    assert doc["context"]["seed"] == 0 and len(doc["context"]["grid"]) == 3


def test_q1_application_reports_k_plus_inverse(capsys):
    code, doc = run(["verify", "q1-application", "--type", "A", "--rank", "1"], capsys)
    assert code == 0
    ks = [F(p["k_by_norm"]["2/1"]) for p in doc["context"]["grid"]]
    assert [F(c) for c in doc["constants"]] == [k + 1 / k for k in ks]


def test_exit_codes(capsys):
    code, doc = run(["macdonald-E", "--k", "0"], capsys)
    assert code == 2 and doc["error"]["kind"] == "usage"
    code, doc = run(["nonsense"], capsys)
    assert code == 2
    code, doc = run(["macdonald-P", "--type", "A", "--rank", "1", "--weight", "-1"], capsys)
    assert code == 3 and doc["error"]["kind"] == "precondition"
    code, doc = run(["flat-section", "--gl", "--rank", "2", "--I", "1", "--sign", "-", "--weight", "5,5"], capsys)
    assert code == 3


def test_identity_failure_exit_code(capsys, monkeypatch):
    import artifact.cli as cli
    from artifact.report import make_report
    monkeypatch.setitem(cli.SUITE_FUNCS, "cocycle", lambda cfg, d, P: [make_report("forced", False, {"x": 1})])
    code, doc = run(["verify", "cocycle", "--type", "A", "--rank", "1"], capsys)
    assert code == 1 and doc["status"] == "fail" and doc["witness"]["witness"]["witness"] == {"x": 1}


def test_output_is_deterministic(capsys, tmp_path):
    argv = ["mac-op", "--type", "A", "--rank", "2", "--sign", "-"]
    main(argv + ["--out", str(tmp_path / "a.json")])
    first = capsys.readouterr().out
    main(argv + ["--out", str(tmp_path / "b.json")])
    assert capsys.readouterr().out == first
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_cartan_file(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text("[[2, -1], [-1, 2]]")
    code, doc = run(["weyl", "--cartan", str(path)], capsys)
    assert code == 0 and doc["order"] == 6


def test_config_rejects_zero():
    with pytest.raises(UsageError):
        RunConfig(command="weyl", k="0")
    with pytest.raises(UsageError):
        parse_config(["weyl", "--q", "0/3"])


rats = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool).map(
    lambda x: f"{x.numerator}/{x.denominator}")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["weyl", "macdonald-E", "cocycle"]), st.sampled_from([None, "cocycle", "gl"]),
       st.sampled_from(["A", "B", "G"]), st.integers(1, 3), st.booleans(), rats, st.one_of(st.none(), rats), rats,
       st.lists(st.integers(1, 3), unique=True, max_size=2), st.one_of(st.none(), st.lists(st.integers(-3, 3),
                                                                                           min_size=1, max_size=3)),
       st.sampled_from([None, 1, -1]), st.integers(1, 5), st.integers(0, 99))
def test_config_round_trip(cmd, suite, typ, rank, gl, k, ks, q, I, weight, sign, points, seed):
    command = "verify" if suite else cmd
    cfg = RunConfig(command=command, suite=suite, type="GL" if gl else typ, rank=rank, gl=gl, k=k, k_short=ks,
                    q=q, I=tuple(I), weight=None if weight is None else tuple(weight), sign=sign,
                    points=points, seed=seed)
    assert parse_config(cfg.to_argv()) == cfg
