"""One line per acceptance criterion, with timings."""
import time

import pytest

from skein.suites import CRITERIA, run_criterion

LIMITS = {1: 5, 2: 10, 3: 10, 4: 10, 5: 30, 6: 60, 7: 300, 8: 300, 9: 600, 10: 60}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    t = time.perf_counter()
    results = run_criterion(n)
    elapsed = time.perf_counter() - t
    ok = all(r.ok for r in results) and elapsed < LIMITS[n]
    with capsys.disabled():
        print(f"\ncriterion {n:2d} {'PASS' if ok else 'FAIL'} {CRITERIA[n][0]} ({elapsed:.2f}s, limit {LIMITS[n]}s)")
        for r in results:
            print(f"    {'ok  ' if r.ok else 'FAIL'} {r.name} ({r.seconds:.2f}s){': ' + r.detail if r.detail else ''}")
    bad = [r for r in results if not r.ok]
    assert not bad, f"{bad[0].name}: {bad[0].detail}"
    assert elapsed < LIMITS[n]
