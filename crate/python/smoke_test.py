"""Quick check that the extension imports and agrees with the oracle on small cases."""

import _interval_fpt as ifpt


def cycle(n):
    return ifpt.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def main():
    c9 = cycle(9)
    assert not c9.is_chordal() and not c9.is_interval()
    assert c9.find_small_obstruction() is None  # hole too long to count as small

    rec = ifpt.interval_deletion(c9, 1)
    assert rec["outcome"] == "yes", rec
    assert rec["verification"]["lex_bfs_at_free"]

    assert ifpt.min_deletion(c9, 3)[0] == 1
    k, fill = ifpt.min_completion(cycle(6), 5)
    assert k == 3 and cycle(6).add_edges(fill).is_interval()

    g = ifpt.gadget_type1(7)
    assert g.is_chordal() and g.find_at() is not None
    assert ifpt.min_deletion(g, 3)[0] == ifpt.brute_force_min_deletion(g, 3)["answer"]["optimum"]["size"]

    assert len(ifpt.cycle_triangulations(list(range(7)))) == 42

    h = ifpt.Graph.from_instance(c9.to_instance())
    assert sorted(h.edges()) == sorted(c9.edges())

    for suite in ("structure", "cycles", "completion"):
        rep = ifpt.verify_props(suite, count=20, seed=3)
        assert not rep["failures"], rep["failures"][0]

    try:
        ifpt.Graph.from_instance("3 2\n0 1\n0 9\n")
    except ValueError as e:
        assert "line 3" in str(e)
    else:
        raise AssertionError("malformed input accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
