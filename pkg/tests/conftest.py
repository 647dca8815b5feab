import numpy as np
import pytest

from spatial_anc.acoustics.geometry import build_scene, build_scene_paper
from spatial_anc.adaptive.plant import build_plant
from spatial_anc.config.run import RunConfig


@pytest.fixture(scope="session")
def paper_scene():
    return build_scene_paper()


@pytest.fixture(scope="session")
def small_scene():
    """Paper array layout with a coarse evaluation grid."""
    return build_scene(eval_point_count=300)


@pytest.fixture(scope="session")
def plant_600(paper_scene):
    return build_plant(paper_scene, paper_scene.context(600.0))


@pytest.fixture(scope="session")
def small_plant_600(small_scene):
    return build_plant(small_scene, small_scene.context(600.0))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def small_config(tmp_path):
    """Fast run configuration writing into a temporary directory."""
    return RunConfig.model_validate(
        {
            "scene": {"eval_point_count": 300},
            "plan": {"n_iters": 200, "frequencies": [600.0], "lambda_grid": [0.0, 1000.0]},
            "output": {"directory": str(tmp_path / "out")},
        }
    )
