"""Smoke tests for the rankmetric extension module."""

import json

import rankmetric as rm


def test_tower_arithmetic():
    t = rm.Tower(2, 1, 2)
    assert (t.p, t.e, t.q, t.m, t.cardinality) == (2, 1, 2, 2, 4)
    w = t.element(2)
    assert (w * w).code == 3          # w^2 = w + 1
    assert (w * t.element(3)).code == 1  # w * (w+1) = 1
    assert w.trace() == 1
    assert t.one().trace() == 0
    assert w.frobenius(1).code == 3
    assert (w / w).code == 1
    desc = json.loads(t.to_json())
    assert desc["ext_modulus"] == [[1], [1], [1]]


def test_errors():
    try:
        rm.Tower(4, 1, 2)
    except rm.Error as err:
        assert "prime" in str(err)
    else:
        raise AssertionError("expected Error for composite p")


def test_basis_search():
    t = rm.Tower(2, 1, 2)
    res = rm.find_self_dual_basis(t)
    assert res["kind"] == "self_dual"
    assert [el.code for el in res["basis"]] == [2, 3]

    t9 = rm.Tower(3, 1, 2)
    assert rm.find_self_dual_basis(t9)["kind"] == "not_exists"
    almost = rm.find_almost_self_dual_basis(t9)
    assert almost["kind"] == "almost_self_dual"
    assert [el.code for el in almost["basis"]] == [3, 1]
    assert almost["a"] == 2

    basis = rm.Basis(t, res["basis"])
    assert basis.is_self_dual()
    assert basis.gram() == [[1, 0], [0, 1]]
    assert rm.expand_vector([t.one()], basis) == [[1, 1]]


def test_gabidulin_code():
    t = rm.Tower(2, 1, 2)
    basis = rm.find_self_dual_basis(t)["basis"]
    c = rm.gabidulin_code(t, basis, 1)
    assert (c.n, c.k) == (2, 1)
    assert c.min_rank() == 2
    assert c.is_lcd()
    assert c.hull_dim() == 0
    assert c.is_mrd()
    profile = c.rank_profile()
    assert profile["min_rank"] == 2
    assert profile["counts"] == {0: 1, 2: 3}

    c2 = c.cartesian_power(2)
    assert (c2.n, c2.k) == (4, 2)
    assert c2.min_rank() == 2
    assert c2.dual().same_code(c.dual().cartesian_power(2))

    expanded = c.expand(rm.Basis(t, basis))
    assert expanded.dim == 2
    assert expanded.is_lcd()
    assert expanded.is_mrd()
    assert expanded.min_rank() == 2

    back = rm.vector_code_from_json(c.to_json())
    assert back.same_code(c)


def test_self_orthogonal_example():
    t = rm.Tower(3, 1, 2)
    alpha, one = t.element(3), t.one()
    c = rm.gabidulin_code(t, [alpha, one], 1)
    assert not c.is_lcd()
    assert c.hull_dim() == 1


def test_anticode():
    u = rm.Subspace(2, 1, 2, [[1, 0]])
    w = u.restriction(2)
    assert w.dim == 2
    assert w.is_optimal_anticode()
    assert not w.lcd_anticode_criterion()
    assert w.is_lcd()
    assert u.dual().basis_rows() == [[0, 1]]
    assert u.is_lcd()
    assert rm.matrix_code_from_json(w.to_json()) == w


def test_report():
    report = json.loads(rm.report_gabidulin_json(2, 1, 2, 1))
    assert report["min_rank"] == 2
    assert report["lcd"]["verdict"] is True
    assert report["mrd"]["verdict"] is True


def test_suite():
    certs = rm.run_suite(towers=[(2, 1, 2), (3, 1, 2)], seed=0)
    assert certs == sorted(certs, key=lambda c: (c["claim"], json.dumps(c["params"], sort_keys=True)))
    fails = [c for c in certs if c["verdict"] == "FAIL"]
    assert any(
        c["claim"] == "almost_selfdual_construction"
        and c["params"] == {"k": 1, "m": 2, "n": 2, "q": 3, "seed": 0}
        for c in fails
    )
    hit = next(c for c in fails if c["claim"] == "almost_selfdual_construction")
    assert hit["witness"]["basis"] == [[[0], [1]], [[1], [0]]]
    # determinism
    again = rm.run_suite(towers=[(2, 1, 2), (3, 1, 2)], seed=0)
    assert certs == again


def main():
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except Exception as exc:  # noqa: BLE001
                failures += 1
                print(f"FAIL {name}: {exc!r}")
    return failures


if __name__ == "__main__":
    raise SystemExit(main())
