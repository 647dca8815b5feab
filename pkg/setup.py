from setuptools import setup, find_packages

setup(
    name="spatial-anc",
    version="0.1.0",
    packages=find_packages(exclude=("tests", "tests.*")),
    install_requires=[
        "numpy",
        "scipy",
        "matplotlib",
        "click",
        "pyyaml",
        "pydantic>=2",
        "structlog",
        "rich",
    ],
    entry_points={
        "console_scripts": [
            "spatial-anc = spatial_anc.cli.main:main",
        ],
    },
)
