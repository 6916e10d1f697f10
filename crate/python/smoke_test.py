"""Smoke test for the compiled `sv2` module.

Run after building the extension (see README), e.g.
    python python/smoke_test.py
"""

import json

import sv2


def frac(n, d=1):
    return f"{n}/{d}"


def z(re, im=0):
    return [frac(re), frac(im)]


SEED = {
    "k": 3,
    "l": 2,
    "S": [[z(0), z(1)], [z(-3), z(5)], [z(2), z(0)]],
    "ab": [z(0, 2), z(0, -2), z(1), z(-1), z(1)],
}

S3 = """
*.*...*.*.
*........*
.*...*.*..
...**...*.
..*.**...*
.*........
*.*...*.*.
"""


def main():
    seed = sv2.Seed(json.dumps(SEED))
    rep = seed.build()
    assert rep.dim == 5
    assert rep.verify()["passed"]
    assert not rep.verify(hecke=True)["passed"]
    assert not rep.e_is_zero()

    e = json.loads(rep.to_json())["e"]
    assert e[0][4] == ["-1/1", "2/1"], e[0][4]

    assert seed.rhizome()["is_rhizomatic"]
    assert seed.indecomposable()["value"] == "Indecomposable"
    assert rep.endo()["dimension"] == 1

    group = {
        "sigma": [1, 2, 0],
        "xi": [z(3), z(0, 1), ["2/7", "0/1"]],
        "tau": [1, 0],
        "phi": [z(1, 1), z(-4)],
    }
    acted = seed.act(json.dumps(group))
    assert seed.isomorphic(acted)
    assert seed.canonical_form() == acted.canonical_form()

    assert sv2.analyze_pattern(S3)["is_rhizomatic"]

    monomial = {"k": 2, "l": 2, "S": [[z(1), z(0)], [z(0), z(1)]], "ab": [z(1), z(2), z(3), z(4)]}
    try:
        sv2.Seed(json.dumps(monomial)).canonical_form()
    except sv2.HypothesisError as err:
        assert "not rhizomatic" in str(err)
    else:
        raise AssertionError("canonical_form accepted a non-rhizomatic seed")

    try:
        sv2.Seed('{"k": 1')
    except ValueError:
        pass
    else:
        raise AssertionError("truncated JSON accepted")

    report = sv2.run_fuzz(kmax=3, lmax=3, trials=5, seed=7)
    assert report["all_passed"], report

    print("sv2 smoke test passed")


if __name__ == "__main__":
    main()
