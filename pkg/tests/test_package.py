import importlib

import pytest


def test_import_lieschur():
    lieschur = importlib.import_module("lieschur")
    assert isinstance(lieschur.logger, lieschur.LogManager)
    assert lieschur.multiplier_dimension(lieschur.free_nilpotent(2, 3)) == 3


@pytest.mark.parametrize("module", ["bounds", "catalog", "cli", "exact_linalg", "exceptions", "free_lie", "lie_core",
                                    "log_manager", "multiplier", "parameter_config", "witt"])
def test_subpackages_import(module):
    assert importlib.import_module(f"lieschur.{module}")


def test_scalar_alias_is_exported():
    from lieschur.exact_linalg import Scalar
    assert Scalar is not None
