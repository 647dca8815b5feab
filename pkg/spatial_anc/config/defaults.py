from spatial_anc.config.plan import DEFAULT_LAMBDA_GRID
from spatial_anc.config.run import RunConfig

DEFAULT_CONFIG = RunConfig.default().model_dump()

PAPER_SCALE_OVERRIDES = {
    "plan": {"n_iters": 50000, "freq_step": 10.0},
}

PRESETS = {
    # free-field layout: 12 sources on two rings, 24 error microphones, 600 Hz
    "paper": {
        "scene": {
            "dimension": 2,
            "target_radius": 0.5,
            "source_radii": [0.9, 1.1],
            "sources_per_ring": 6,
            "mic_radii": [0.47, 0.53],
            "mics_per_ring": 12,
            "primary_source": [-3.0, 0.2],
            "eval_point_count": 1240,
            "sound_speed": 340.0,
            "air_density": 1.3,
        },
        "algorithm": {
            "mu0": 0.9,
            "beta": 1e-8,
            "eta": 1e-5,
            "cond_threshold": 1e2,
        },
        "plan": {
            "frequencies": [600.0],
            "n_iters": 50000,
            "freq_start": 100.0,
            "freq_stop": 1000.0,
            "freq_step": 10.0,
            "lambda_grid": list(DEFAULT_LAMBDA_GRID),
            "budget_fraction": 0.5,
            "snr_db": 40.0,
            "move_at": 25000,
            "moved_source": [-2.0, 0.2],
        },
    },
}
