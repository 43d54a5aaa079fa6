from braidlinks import suite


def test_every_check_passes():
    results = suite.run(None, jobs=2)
    failed = [(r.id, r.detail) for r in results if not r.passed]
    assert failed == []
    assert len(results) == len(suite.REGISTRY)


def test_results_are_sorted_and_filtered():
    results = suite.run("lemma25")
    assert [r.id for r in results] == [f"lemma25.{k}" for k in "abcdefg"]
    assert suite.run("none-matching") == []


def test_every_row_names_its_result():
    prefixes = {cid.split(".")[0] for cid in suite.REGISTRY}
    assert {"example2", "table1", "prop16", "prop17", "lemma25", "prop19", "prop20", "ex21", "ex22", "ex23", "cor24"} <= prefixes
    assert all(check.claim for check in suite.REGISTRY.values())


def test_exceptions_become_failures(monkeypatch):
    def boom():
        raise RuntimeError("broken")

    monkeypatch.setitem(suite.REGISTRY, "demo.boom", suite.Check("demo.boom", "always raises", boom))
    result = suite.run_check("demo.boom")
    assert not result.passed and "broken" in result.detail
