from pydantic import BaseModel, ConfigDict, Field

from spatial_anc.config.algorithm import AlgorithmConfig
from spatial_anc.config.output import OutputConfig
from spatial_anc.config.plan import PlanConfig
from spatial_anc.config.scene import SceneConfig


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scene: SceneConfig = Field(default_factory=SceneConfig)
    plan: PlanConfig = Field(default_factory=PlanConfig)
    algorithm: AlgorithmConfig = Field(default_factory=AlgorithmConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @classmethod
    def default(cls):
        return RunConfig()
