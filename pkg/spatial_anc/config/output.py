from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_OUTPUT_DIR = "spatial-anc-output"


class OutputConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    directory: str = DEFAULT_OUTPUT_DIR
    formats: List[Literal["csv", "json"]] = Field(default_factory=lambda: ["csv", "json"])
    plots: bool = True
    log_scale_iterations: bool = False

    @classmethod
    def default(cls):
        return OutputConfig()
