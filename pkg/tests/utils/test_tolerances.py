import pytest

from utils.exceptions import ConfigError
from utils.tolerances import DEFAULT_TOLERANCES, resolve_tolerances


class TestResolveTolerances:
    """Merging tolerance overrides into the default table."""

    def test_defaults(self):
        assert resolve_tolerances() == DEFAULT_TOLERANCES
        assert resolve_tolerances() is not DEFAULT_TOLERANCES

    def test_override_one(self):
        table = resolve_tolerances({"spheres": 1e-6})
        assert table["spheres"] == 1e-6
        assert table["tangency"] == DEFAULT_TOLERANCES["tangency"]

    def test_uniform_replaces_all(self):
        table = resolve_tolerances({"spheres": 1e-6}, uniform=1e-3)
        assert set(table.values()) == {1e-3}

    @pytest.mark.parametrize(
        "overrides, uniform",
        [({"bogus": 1.0}, None), ({"spheres": 0.0}, None), (None, -1.0)],
    )
    def test_rejects(self, overrides, uniform):
        with pytest.raises(ConfigError):
            resolve_tolerances(overrides, uniform)
