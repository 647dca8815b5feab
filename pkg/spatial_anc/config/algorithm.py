from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from spatial_anc.adaptive.models import AlgorithmParams
from spatial_anc.interp.quadrature import QuadratureSpec


class AlgorithmConfig(BaseModel):
    """Controller and operator constants.

    ``lambda_penal`` left unset means the penalty weight is chosen by the
    lambda sweep of each scenario.
    """

    model_config = ConfigDict(extra="forbid")

    mu0: float = Field(0.9, gt=0, lt=2)
    beta: float = Field(1e-8, gt=0)
    lambda_penal: Optional[float] = Field(None, ge=0)
    alpha: float = Field(0.99, gt=0, lt=1)
    warmup_iters: int = Field(10, ge=0)
    eta: float = Field(1e-5, gt=0)
    cond_threshold: float = Field(1e2, gt=1)
    ridge: float = Field(1e-3, ge=0)
    quadrature_density: int = Field(4, ge=1)
    quadrature_subsamples: int = Field(16, ge=1)

    @classmethod
    def default(cls):
        return AlgorithmConfig()

    def quadrature_spec(self) -> QuadratureSpec:
        return QuadratureSpec(density=self.quadrature_density, subsamples=self.quadrature_subsamples)

    def params(self, lambda_penal: Optional[float] = None, budget: Optional[float] = None) -> AlgorithmParams:
        if lambda_penal is None:
            lambda_penal = self.lambda_penal if self.lambda_penal is not None else 0.0
        return AlgorithmParams(
            mu0=self.mu0,
            beta=self.beta,
            lambda_penal=lambda_penal,
            budget=budget,
            alpha=self.alpha,
            warmup_iters=self.warmup_iters,
        )
