import pytest

from spatial_anc.config.loader import parse_config
from spatial_anc.harness.operators import OperatorCache


@pytest.fixture(scope="module")
def paper_config():
    """Paper preset at full iteration count, run in the test process."""
    return parse_config(preset="paper", overrides=["plan.max_workers=4"])


@pytest.fixture(scope="module")
def paper_cache(paper_config):
    return OperatorCache(paper_config.scene.build(), paper_config.algorithm, paper_config.plan.budget_fraction)
