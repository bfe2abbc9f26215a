import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_collection_modifyitems(config, items):
    """Skip slow sweeps unless -m slow or PARKAV_SLOW=1 asks for them."""
    if config.getoption("-m"):
        return
    if os.environ.get("PARKAV_SLOW", "") not in ("", "0"):
        return
    skip = pytest.mark.skip(reason="slow sweep; run with -m slow or PARKAV_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
