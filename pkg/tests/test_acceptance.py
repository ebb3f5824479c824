"""One line per acceptance criterion; failures are reported, not hidden."""
import pytest

from wavecount.verify import ACCEPTANCE, run_check


@pytest.mark.parametrize("cid,check", ACCEPTANCE, ids=[cid for cid, _ in ACCEPTANCE])
def test_criterion(cid, check, capsys):
    res = run_check(check, seed=0)
    with capsys.disabled():
        print(f"\n{'PASS' if res.passed else 'FAIL'} {cid}: {res.name} ({res.detail}) [{res.seconds:.2f}s]")
    assert res.passed, res.detail
