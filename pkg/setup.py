from setuptools import setup, find_packages

setup(
    name="brauer-blocks",
    version="1.0.0",
    description="Blocks of the Brauer algebra via orbits of the type-D Weyl group",
    packages=find_packages(exclude=["tests"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.20.0",
        "sympy>=1.9",
        "matplotlib>=3.5",
    ],
    extras_require={
        "test": ["pytest>=7.0"],
    },
    entry_points={
        "console_scripts": [
            "brauer-blocks=src.main:main",
        ],
    },
)
