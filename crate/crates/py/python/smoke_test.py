"""Smoke test for the Python bindings.

Build and install first:
    pip install --no-build-isolation -e crates/py
"""

import pseudoknot as pk


def main():
    hopf = pk.Diagram.catalog("hopf_L2a1_1")
    assert pk.bracket(hopf) == "-A^4 - A^-4"
    assert pk.jones(hopf) == "-A^-2 - A^-10"
    assert hopf.writhe() == 2 and hopf.mirror().writhe() == -2

    trefoil = pk.Diagram.parse("components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]")
    assert pk.alexander(trefoil) == "t^2 - t + 1"
    assert pk.identify(trefoil) == "trefoil_rh"

    pt = pk.Diagram.catalog("pseudo_trefoil")
    smooth = "smooth:1/(-A^2 - A^-2)"
    left = pk.invariant(pt, "jones", smooth)
    right = pk.invariant(pk.Diagram.catalog("pseudo_trefoil_mirror"), "jones", smooth)
    assert left != right
    assert sorted(pk.were_set(pt)) == [("1/2", "trefoil_rh"), ("1/2", "unknot")]

    holds, total = pk.relation("jones", "+1:1,-1:-1")
    assert not holds and total == "0"
    try:
        pk.invariant(pt, "jones", "+1:1,-1:-1")
    except ValueError as e:
        assert "coefficient relation fails" in str(e)
    else:
        raise AssertionError("relation gate did not fire")
    assert pk.invariant(pt, "jones", "+1:1,-1:-1", hat=True)

    pb = pk.Diagram.catalog("pseudo_borromean")
    assert pk.identify(pb.insert(pb.precrossings[0], "smooth")) == "whitehead"

    assert all(ok for _, ok, _ in pk.fuzz(pt, iterations=10, seed=1))
    code, out, _ = pk.run_cli(["jones", "catalog:hopf_L2a1_0"])
    assert code == 0 and out == "-A^10 - A^2\n"
    assert "pseudo_perko_a" in pk.catalog_names()
    print("smoke test passed")


if __name__ == "__main__":
    main()
