from spatial_anc.config.algorithm import AlgorithmConfig
from spatial_anc.config.loader import dump_resolved_config, load_resolved_config, parse_config
from spatial_anc.config.output import OutputConfig
from spatial_anc.config.plan import PlanConfig
from spatial_anc.config.run import RunConfig
from spatial_anc.config.scene import SceneConfig

__all__ = [
    "AlgorithmConfig",
    "OutputConfig",
    "PlanConfig",
    "RunConfig",
    "SceneConfig",
    "parse_config",
    "dump_resolved_config",
    "load_resolved_config",
]
