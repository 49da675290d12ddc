"""Smoke test for the pyrootlength extension."""

import pyrootlength as rl


def main():
    b3 = rl.RootSystem("B3")
    assert b3.rank == 3
    assert b3.theta == [1, 2, 2]
    assert b3.maximal_roots() == [1, 3]
    assert b3.length([1, 0, 2]) == 2
    assert b3.positive_length([1, 0, 2]) == 3
    assert b3.brute_length([1, 0, 2]) == 2
    dec = b3.decompose([1, 0, 2])
    assert sorted(dec) == [[0, -1, 0], [1, 1, 2]]
    assert len(b3.facets()) == 14

    f = b3.face([3])
    two_w3 = [1, 2, 3]
    assert f.in_cone(two_w3) and not f.in_zspan(two_w3)
    assert f.in_nspan(two_w3) is None
    assert f.is_proper(two_w3)
    assert f.minimal_elements() == [two_w3]
    assert f.is_normal(4) == (True, None)
    assert f.is_integrally_closed(4) == (False, two_w3)
    assert f.level(two_w3) == "3/2"

    g2 = rl.RootSystem("G2")
    assert g2.proper_generators(1) == [[2, 1], [4, 2]]
    e8 = rl.RootSystem("E8")
    w2 = e8.weight_to_root([0, 1, 0, 0, 0, 0, 0, 0])
    assert e8.length(w2) == 3
    assert e8.proper_generators(2, method="criterion") == [w2, [2 * x for x in w2]]

    try:
        rl.RootSystem("Q7")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid type accepted")

    ok, checks = rl.verify_suite("strictness")
    assert ok and len(checks) == 6
    print("smoke test passed")


if __name__ == "__main__":
    main()
