"""Smoke test for the hopfk_py extension module.

Build and install first:
    maturin build --release -m crates/py/Cargo.toml && pip install target/wheels/hopfk_py-*.whl
"""

from pathlib import Path

import hopfk_py as hk

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture(name):
    return str(FIXTURES / name)


def main():
    s3 = hk.Algebra.load(fixture("f3s3.alg"))
    assert s3.dim == 6 and s3.field == "F_3"
    c = s3.cartan()
    assert c.matrix == [[2, 1], [1, 2]], c
    assert c.snf_diagonal == [1, 3]
    assert c.cokernel == [3] and c.kernel_rank == 0

    reg = s3.regular()
    assert reg.g0_class() == [3, 3]
    assert reg.k0_class() == [1, 1]

    h = hk.HopfAlgebra.load(fixture("f3s3.hopf"))
    assert h.minimal_m() == 3
    m, p, q = h.find_pq()
    assert (m, p, q) == (3, [2, 0], [0, 1])

    sweedler = hk.HopfAlgebra.load(fixture("sweedler.hopf"))
    assert sweedler.minimal_m() is None
    assert sweedler.cartan().kernel_rank == 1
    try:
        sweedler.regular_extension().verify_cartan_bound()
    except hk.VerdictError as e:
        assert "CartanNotInjective" in str(e)
    else:
        raise AssertionError("Sweedler self-extension should be rejected")

    ext = hk.Extension.load(fixture("ut2_c2.cross"))
    assert ext.galois() == (6, 3, 2, True)
    report = ext.verify_cartan_bound()
    assert report.m == 2 and report.gldim_b == 1
    assert report.cartan.snf_diagonal == [2, 2]
    assert report.cartan.cokernel == [2, 2]

    not_galois = hk.Extension.load(fixture("ut2_trivial.coalg"))
    assert not_galois.galois()[3] is False

    assert hk.smith_invariants([[2, 4], [6, 8]]) == [2, 4]
    assert hk.min_multiple([[2, 1], [1, 2]], [1, 0]) == 3
    assert hk.spec_kind('kind = "field"\np = 5\n') == "field"

    try:
        hk.spec_kind('kind = "algebra"\nbogus = 1\n')
    except hk.InputError as e:
        assert "2:1" in str(e), e
    else:
        raise AssertionError("unknown keys must be rejected")

    try:
        hk.HopfAlgebra.load(fixture("mutations/f2c2_counit_zero.hopf"))
    except hk.VerdictError as e:
        assert "CounitAxiomFails" in str(e)
    else:
        raise AssertionError("mutated Hopf algebra should fail validation")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
