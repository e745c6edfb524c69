"""Acceptance criteria 1-17.

Each criterion prints one PASS/FAIL line (and all lines are repeated in the
terminal summary).  The derived checks of every criterion must pass.  Printed
values that are not reproduced make their criterion print FAIL; each such
printed value has its own strict xfail below, and the value actually derived
is asserted next to it.
"""
import functools

import pytest

from cp2lg.verification import CRITERIA


@functools.lru_cache(maxsize=None)
def result(n):
    return CRITERIA[n]()


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, pytestconfig):
    r = result(n)
    line = r.line()
    print(line)
    pytestconfig.cp2lg_acceptance[n] = line
    assert r.checks, "criterion has no derived checks"
    failing = [(c.id, c.residual, c.tolerance) for c in r.checks if not c.passed]
    assert not failing, failing


# Printed values compared literally: (criterion, id) -> reproduced?
LITERAL = {
    (6, "special.E6_printed"): False,
    (12, "big.fit_delta_1_3_J1"): False,
    (12, "big.fit_delta_2_3_J2"): False,
    (14, "monodromy.R2 = T0 R1 T0^-1 (printed)"): False,
    (14, "monodromy.R3 = T0^2 R1 T0^-2 (printed)"): False,
    (14, "monodromy.printed B(R1)"): False,
    (14, "monodromy.printed B(R2)"): True,
    (14, "monodromy.printed B(R3)"): True,
    (14, "monodromy.printed B(T0^3)"): True,
    (14, "monodromy.printed B(T0^4)"): True,
    (14, "monodromy.printed rho(r1)"): True,
    (14, "monodromy.printed rho(r2)"): False,
    (14, "monodromy.printed rho(r3)"): False,
    (15, "guzzetti.omega1_order0"): False,
    (15, "guzzetti.omega2_order0"): False,
    (15, "guzzetti.omega3_order0"): False,
    (15, "guzzetti.Q_prefactor_minus"): False,
}


def _params():
    for (n, cid), ok in sorted(LITERAL.items()):
        marks = () if ok else (pytest.mark.xfail(strict=True, reason="printed value not reproduced"),)
        yield pytest.param(n, cid, id=f"{n}-{cid}", marks=marks)


@pytest.mark.parametrize("n,cid", list(_params()))
def test_printed_value(n, cid):
    check = {c.id: c for c in result(n).literal}[cid]
    assert check.passed, check.detail


def test_literal_records_all_covered():
    found = {(n, c.id) for n in CRITERIA for c in result(n).literal}
    assert found == set(LITERAL)


def test_criteria_with_misprints_print_fail():
    failing = {n for n in CRITERIA if not result(n).passed}
    assert failing == {6, 12, 14, 15}
    for n in failing:
        assert result(n).derived_pass
        assert "FAIL" in result(n).line()


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        print(result(n).line())
