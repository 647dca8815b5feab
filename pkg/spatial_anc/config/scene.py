from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from spatial_anc.acoustics.geometry import build_scene
from spatial_anc.acoustics.models import Scene


class SceneConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dimension: Literal[2, 3] = 2
    target_radius: float = Field(0.5, gt=0)
    source_radii: List[float] = Field(default_factory=lambda: [0.9, 1.1], min_length=1)
    sources_per_ring: int = Field(6, ge=1)
    mic_radii: List[float] = Field(default_factory=lambda: [0.47, 0.53], min_length=1)
    mics_per_ring: int = Field(12, ge=1)
    ring_offset: Literal["half-step", "aligned"] = "half-step"
    primary_source: List[float] = Field(default_factory=lambda: [-3.0, 0.2], min_length=2, max_length=3)
    eval_point_count: int = Field(1240, ge=1)
    sound_speed: float = Field(340.0, gt=0)
    air_density: float = Field(1.3, gt=0)
    mic_margin: float = Field(0.05, ge=0)
    reference_count: int = Field(1, ge=1)

    @field_validator("source_radii", "mic_radii")
    @classmethod
    def _positive_radii(cls, v: List[float]) -> List[float]:
        if any(r <= 0 for r in v):
            raise ValueError("radii must be positive")
        return v

    @classmethod
    def default(cls):
        return SceneConfig()

    def build(self) -> Scene:
        return build_scene(
            dimension=self.dimension,
            target_radius=self.target_radius,
            source_radii=self.source_radii,
            sources_per_ring=self.sources_per_ring,
            mic_radii=self.mic_radii,
            mics_per_ring=self.mics_per_ring,
            ring_offset=self.ring_offset,
            primary_source=self.primary_source,
            reference_count=self.reference_count,
            eval_point_count=self.eval_point_count,
            sound_speed=self.sound_speed,
            air_density=self.air_density,
            mic_margin=self.mic_margin,
        )
