import pytest

from src import utils


@pytest.mark.parametrize(
    "value, expected",
    [(None, False), ("yes", True), ("0", False), ("OFF", False), ("anything", True)],
)
def test_env_var_to_bool(value, expected):
    assert utils.env_var_to_bool(value) is expected


def test_deep_verify_by_default(monkeypatch):
    monkeypatch.delenv("NONFG_DEEP_VERIFY", raising=False)
    assert not utils.deep_verify_by_default()
    monkeypatch.setenv("NONFG_DEEP_VERIFY", "true")
    assert utils.deep_verify_by_default()


def test_only_used_settings_are_read():
    # randomized suites seed their own generators, nothing reads a global seed
    assert not hasattr(utils, "set_random_seed_if_passed")
