"""On-disk q-expansion cache."""
import json
import logging
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from cp2lg import cache
from cp2lg.modular import eisenstein_q_coefficients


def test_e4_round_trip(tmp_path):
    coeffs, status = cache.cached_coefficients("E4", 1000, tmp_path)
    assert status == "miss"
    assert coeffs == list(eisenstein_q_coefficients(4, 1000))
    again, status = cache.cached_coefficients("E4", 1000, tmp_path)
    assert status == "hit"
    assert again == coeffs


def test_missing_directory_is_created(tmp_path):
    target = tmp_path / "a" / "b"
    assert not target.exists()
    cache.cached_coefficients("E6", 10, target)
    assert (target / "E6_10.json").exists()


def test_environment_variable(isolated_cache):
    cache.cached_coefficients("E2", 5)
    assert (isolated_cache / "E2_5.json").exists()


def test_truncated_file_is_recomputed(tmp_path, caplog):
    cache.cached_coefficients("j", 20, tmp_path)
    path = tmp_path / "j_20.json"
    path.write_text(path.read_text()[:25])
    with caplog.at_level(logging.WARNING):
        coeffs, status = cache.cached_coefficients("j", 20, tmp_path)
    assert status == "recomputed"
    assert coeffs[:3] == [1, 744, 196884]
    assert "corrupt" in caplog.text
    assert cache.read_entry(tmp_path, "j", 20) is not None


def test_mismatched_key_is_corrupt(tmp_path):
    entry = cache.make_entry("E4", 3, [1, 240, 2160, 6720])
    path = cache.write_entry(tmp_path, entry)
    doc = json.loads(path.read_text())
    doc["M"] = 4
    path.write_text(json.dumps(doc))
    with pytest.raises(cache.CacheCorrupt):
        cache.read_entry(tmp_path, "E4", 3)


def test_unknown_expansion(tmp_path):
    with pytest.raises(ValueError):
        cache.cached_coefficients("E8", 3, tmp_path)


coeff = st.one_of(st.integers(-10 ** 30, 10 ** 30), st.fractions(max_denominator=10 ** 6))


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.lists(coeff, min_size=1, max_size=12))
def test_entry_round_trip(tmp_path, cs):
    M = len(cs) - 1
    entry = cache.make_entry("E4", M, cs)
    back = cache.cache_roundtrip(entry, tmp_path)
    assert [cache.decode_coeff(c) for c in back["coeffs"]] == [Fraction(c) for c in cs]
