from springer2.orbit import LieCase
from springer2.verify import max_workers, run_verification


def test_run_verification_small():
    results = run_verification([LieCase.EO], max_n=3)
    assert [r.number for r in results] == list(range(1, 11))
    assert all(r.ok for r in results)


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("SPRINGER2_THREADS", "1")
    assert max_workers() == 1
    results = run_verification([LieCase.SP], max_n=2)
    assert all(r.ok for r in results)

    monkeypatch.setenv("SPRINGER2_THREADS", "3")
    assert max_workers() == 3

    monkeypatch.setenv("SPRINGER2_THREADS", "junk")
    assert max_workers() >= 1


def test_result_lines():
    results = run_verification([LieCase.SPD], max_n=2)
    lines = [r.line() for r in results]
    assert all(line.startswith("PASS") for line in lines)
