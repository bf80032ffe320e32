"""Smoke test for the Python bindings.

Build and install first, e.g. ``maturin develop -m crates/python/Cargo.toml``.
"""

from fractions import Fraction

import topoidx


def main() -> None:
    c8 = topoidx.family("cycle", 8)
    assert c8.order == 8 and c8.size == 8
    b = topoidx.index_bundle(c8)
    assert b == {
        "wiener": 64,
        "harary": Fraction(47, 3),
        "m1": 32,
        "m2": 32,
        "pi1": 256,
        "pi2": 65536,
    }, b
    assert topoidx.cycle_closed_forms(8) == b

    g = topoidx.Graph.from_graph6(c8.graph6())
    assert g == c8
    assert topoidx.distance_profile(g) == {1: 8, 2: 8, 3: 8, 4: 4}

    h = topoidx.family("h")
    assert topoidx.harary(topoidx.family("cycle", 7)) - topoidx.harary(h) == Fraction(-3, 4)

    k40 = topoidx.family("complete", 40)
    assert topoidx.index_bundle(k40)["pi2"] == 39 ** (39 * 40)

    eulerian = topoidx.enumerate("eulerian", 6, dedupe=True, workers=1)
    assert len(eulerian) == 8
    forms = {topoidx.canonical_form(x) for x in eulerian}
    assert len(forms) == 8

    rep = topoidx.extremal_scan("eulerian", 8, "harary", "min", workers=1)
    assert rep["best_value"] == "47/3" and rep["second_value"] == "101/6", rep
    bouquet = topoidx.family("bouquet", lengths=[6, 3])
    assert rep["second_witnesses"] == [topoidx.canonical_form(bouquet)]

    c = topoidx.claim1_check(3, 3)
    assert c["separation_ok"] is False and c["reciprocal_ok"] is True

    rows = topoidx.crossing_table(19, 21)
    assert [r[3] for r in rows] == [-1, 1, 1]
    assert rows[1][1] - rows[1][2] == Fraction(29, 1980)

    suite = topoidx.theorem_suite(6, 5, workers=1)
    assert all(c["status"] == "pass" for c in suite["claims"])

    try:
        topoidx.Graph(3, [(0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("loop accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
